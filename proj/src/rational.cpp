#include "ftpoly/rational.hpp"

#include <limits>
#include <numeric>

#include "ftpoly/errors.hpp"

namespace ftpoly {

namespace {

using u128 = unsigned __int128;

constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class wide_to_mpz(__int128 v) {
  const bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

bool fits64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ArithmeticError("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 an = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = gcd128(an, static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<__int128>(g);
    d /= static_cast<__int128>(g);
  }
  if (n == 0) d = 1;
  Rational r;
  if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(wide_to_mpz(n), wide_to_mpz(d));
  q.canonicalize();
  return from_mpq(q);
}

Rational Rational::from_mpq(const mpq_class& q) {
  Rational r;
  if (fits64(q.get_num()) && fits64(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(q);
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // Terminating decimal, converted exactly.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw ParseError("bad decimal '" + s + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return from_mpq(q);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_mpq(q);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(-to_mpq());
}

Rational operator+(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.den_ == y.den_ && x.den_ == 1) {
      return Rational::from_wide(static_cast<__int128>(x.num_) + y.num_, 1);
    }
    __int128 n = static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return Rational::from_wide(n, d);
  }
  return Rational::from_mpq(x.to_mpq() + y.to_mpq());
}

Rational operator-(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    __int128 n = static_cast<__int128>(x.num_) * y.den_ - static_cast<__int128>(y.num_) * x.den_;
    __int128 d = static_cast<__int128>(x.den_) * y.den_;
    return Rational::from_wide(n, d);
  }
  return Rational::from_mpq(x.to_mpq() - y.to_mpq());
}

Rational operator*(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    if (x.num_ == 0 || y.num_ == 0) return Rational();
    return Rational::from_wide(static_cast<__int128>(x.num_) * y.num_,
                               static_cast<__int128>(x.den_) * y.den_);
  }
  return Rational::from_mpq(x.to_mpq() * y.to_mpq());
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero");
  if (!x.big_ && !y.big_) {
    return Rational::from_wide(static_cast<__int128>(x.num_) * y.den_,
                               static_cast<__int128>(x.den_) * y.num_);
  }
  return Rational::from_mpq(x.to_mpq() / y.to_mpq());
}

bool operator==(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
  if (!x.big_ || !y.big_) return false;  // normalized: big never equals small
  return *x.big_ == *y.big_;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  if (!x.big_ && !y.big_) {
    __int128 l = static_cast<__int128>(x.num_) * y.den_;
    __int128 r = static_cast<__int128>(y.num_) * x.den_;
    return l <=> r;
  }
  int c = cmp(x.to_mpq(), y.to_mpq());
  return c <=> 0;
}

Rational Rational::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return Rational(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return from_mpq(mpq_class(q));
}

Rational Rational::denominator() const {
  if (!big_) return Rational(den_);
  return from_mpq(mpq_class(big_->get_den()));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace ftpoly
