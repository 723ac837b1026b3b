#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace qfg {

/// Exact field element: a rational number, or an element of F_p.
///
/// Rationals keep a 64-bit numerator/denominator fast path and spill to GMP
/// when an operation overflows. The characteristic travels with the value;
/// characteristic-0 values mixed with F_p values are reduced mod p, so
/// integer literals work in every field.
class Scalar {
 public:
  Scalar() noexcept = default;
  Scalar(int v) noexcept : num_(v) {}            // NOLINT(google-explicit-constructor)
  Scalar(long v) noexcept : num_(v) {}           // NOLINT(google-explicit-constructor)
  Scalar(long long v) noexcept : num_(v) {}      // NOLINT(google-explicit-constructor)

  static Scalar fraction(long long num, long long den);
  static Scalar fromMpq(const mpq_class& q);
  static Scalar modular(long long v, std::uint32_t p);
  /// Parses "3", "-7/4". Throws std::invalid_argument.
  static Scalar parse(const std::string& s, std::uint32_t characteristic = 0);

  std::uint32_t characteristic() const noexcept { return p_; }
  /// Same numeric value carried into characteristic p (p = 0 is a no-op).
  Scalar inField(std::uint32_t p) const;

  bool isZero() const noexcept { return !big_ && num_ == 0; }
  bool isOne() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool isInteger() const;
  int sign() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order on rationals (numeric); on F_p by representative.
  friend bool operator<(const Scalar& a, const Scalar& b);

  mpq_class toMpq() const;
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  void normalizeSmall();
  void setFromMpq(const mpq_class& q);
  static Scalar binaryBig(const Scalar& a, const Scalar& b, char op);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // > 0; 1 for F_p values
  std::shared_ptr<const mpq_class> big_;
  std::uint32_t p_ = 0;
};

}  // namespace qfg
