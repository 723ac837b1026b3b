#include "qfg/scalar.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace qfg {
namespace {

using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

bool fits(i128 v) { return v <= kMax && v > kMin; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t modNormalize(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return r < 0 ? r + p : r;
}

std::int64_t modInverse(std::int64_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  std::int64_t t = 0, newT = 1, r = p, newR = a;
  while (newR != 0) {
    std::int64_t q = r / newR;
    t -= q * newT;
    std::swap(t, newT);
    r -= q * newR;
    std::swap(r, newR);
  }
  return t < 0 ? t + p : t;
}

std::uint32_t commonChar(const Scalar& a, const Scalar& b) {
  std::uint32_t pa = a.characteristic(), pb = b.characteristic();
  if (pa == pb) return pa;
  if (pa == 0) return pb;
  if (pb == 0) return pa;
  throw std::domain_error("mixing scalars of characteristic " + std::to_string(pa) + " and " +
                          std::to_string(pb));
}

// Reduces a rational numerator/denominator into F_p.
std::int64_t ratModP(const mpq_class& q, std::uint32_t p) {
  mpz_class n = q.get_num() % p;
  mpz_class d = q.get_den() % p;
  if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
  long long nn = n.get_si(), dd = d.get_si();
  return modNormalize(nn, p) * modInverse(modNormalize(dd, p), p) % p;
}

}  // namespace

Scalar Scalar::fraction(long long num, long long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar s;
  if (num == kMin || den == kMin) {
    s.setFromMpq(mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
    return s;
  }
  s.num_ = num;
  s.den_ = den;
  s.normalizeSmall();
  return s;
}

Scalar Scalar::fromMpq(const mpq_class& q) {
  Scalar s;
  s.setFromMpq(q);
  return s;
}

Scalar Scalar::modular(long long v, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("characteristic must be a prime >= 2");
  Scalar s;
  s.p_ = p;
  s.num_ = modNormalize(v, p);
  return s;
}

Scalar Scalar::parse(const std::string& text, std::uint32_t characteristic) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  auto slash = text.find('/');
  auto checkDigits = [](const std::string& t, bool allowSign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allowSign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!checkDigits(text, true)) throw std::invalid_argument("malformed rational '" + text + "'");
    std::string t = text[0] == '+' ? text.substr(1) : text;
    q = mpq_class(mpz_class(t), 1);
  } else {
    std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!checkDigits(n, true) || !checkDigits(d, false))
      throw std::invalid_argument("malformed rational '" + text + "'");
    if (n[0] == '+') n = n.substr(1);
    mpz_class dz(d);
    if (dz == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q = mpq_class(mpz_class(n), dz);
    q.canonicalize();
  }
  Scalar s = fromMpq(q);
  return characteristic == 0 ? s : s.inField(characteristic);
}

Scalar Scalar::inField(std::uint32_t p) const {
  if (p == p_ || p == 0) return *this;
  if (p_ != 0) throw std::domain_error("cannot change nonzero characteristic");
  Scalar s;
  s.p_ = p;
  if (big_) {
    s.num_ = ratModP(*big_, p);
  } else {
    std::int64_t n = modNormalize(num_, p), d = modNormalize(den_, p);
    if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
    s.num_ = static_cast<std::int64_t>(static_cast<i128>(n) * modInverse(d, p) % p);
  }
  return s;
}

void Scalar::normalizeSmall() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (den_ != 1) {
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  if (num_ == 0) den_ = 1;
}

void Scalar::setFromMpq(const mpq_class& q) {
  p_ = 0;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long n = q.get_num().get_si(), d = q.get_den().get_si();
    if (n != kMin) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  big_ = std::make_shared<const mpq_class>(q);
  num_ = 0;
  den_ = 1;
}

mpq_class Scalar::toMpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(std::to_string(num_)), mpz_class(std::to_string(den_)));
  return q;
}

bool Scalar::isInteger() const {
  if (p_ != 0) return true;
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Scalar::sign() const {
  if (p_ != 0) return num_ == 0 ? 0 : 1;
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ != 0) {
    s.num_ = num_ == 0 ? 0 : p_ - num_;
  } else if (big_) {
    s.setFromMpq(-*big_);
  } else {
    s.num_ = -num_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (isZero()) throw std::domain_error("inverse of zero");
  if (p_ != 0) {
    Scalar s;
    s.p_ = p_;
    s.num_ = modInverse(num_, p_);
    return s;
  }
  if (big_) return fromMpq(1 / *big_);
  Scalar s;
  s.num_ = den_;
  s.den_ = num_;
  s.normalizeSmall();
  return s;
}

Scalar Scalar::binaryBig(const Scalar& a, const Scalar& b, char op) {
  mpq_class x = a.toMpq(), y = b.toMpq(), r;
  switch (op) {
    case '+': r = x + y; break;
    case '-': r = x - y; break;
    case '*': r = x * y; break;
    default:
      if (y == 0) throw std::domain_error("division by zero");
      r = x / y;
  }
  return fromMpq(r);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint32_t p = commonChar(a, b);
  if (p != 0) {
    const Scalar& x = a.p_ ? a : a.inField(p);
    const Scalar& y = b.p_ ? b : b.inField(p);
    Scalar s;
    s.p_ = p;
    s.num_ = (x.num_ + y.num_) % p;
    return s;
  }
  if (a.big_ || b.big_) return Scalar::binaryBig(a, b, '+');
  if (a.den_ == 1 && b.den_ == 1) {
    long long r;
    if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != kMin) return Scalar(r);
    return Scalar::binaryBig(a, b, '+');
  }
  std::int64_t g = std::gcd(a.den_, b.den_);
  i128 n = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
  i128 d = static_cast<i128>(a.den_ / g) * b.den_;
  i128 h = gcd128(n, d);
  if (h > 1) {
    n /= h;
    d /= h;
  }
  if (n == 0) return Scalar();
  if (fits(n) && fits(d)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  return Scalar::binaryBig(a, b, '+');
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint32_t p = commonChar(a, b);
  if (p != 0) {
    const Scalar& x = a.p_ ? a : a.inField(p);
    const Scalar& y = b.p_ ? b : b.inField(p);
    Scalar s;
    s.p_ = p;
    s.num_ = static_cast<std::int64_t>(static_cast<i128>(x.num_) * y.num_ % p);
    return s;
  }
  if (a.isZero() || b.isZero()) return Scalar();
  if (a.big_ || b.big_) return Scalar::binaryBig(a, b, '*');
  if (a.den_ == 1 && b.den_ == 1) {
    long long r;
    if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != kMin) return Scalar(r);
    return Scalar::binaryBig(a, b, '*');
  }
  std::int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
  std::int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
  i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
  i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
  if (fits(n) && fits(d)) {
    Scalar s;
    s.num_ = static_cast<std::int64_t>(n);
    s.den_ = static_cast<std::int64_t>(d);
    return s;
  }
  return Scalar::binaryBig(a, b, '*');
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.isZero()) throw std::domain_error("division by zero");
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    std::uint32_t p = commonChar(a, b);
    return a.inField(p) == b.inField(p);
  }
  if (a.big_ || b.big_) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // big values never fit the small representation
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.p_ != 0 || b.p_ != 0) {
    std::uint32_t p = commonChar(a, b);
    return a.inField(p).num_ < b.inField(p).num_;
  }
  if (a.big_ || b.big_) return a.toMpq() < b.toMpq();
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(num_);
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace qfg
