#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperxf {

/// Arbitrary-precision rational, always held in lowest terms with a
/// positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(unsigned v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class v);

  /// Parses "p", "p/q" or "-p/q". Throws Error(Parse) on malformed input or
  /// a zero denominator.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const noexcept { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  /// True when the value is an integer <= 0.
  bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }
  int sign() const noexcept { return sgn(v_); }

  /// Canonical text: "p" for integers, otherwise "p/q".
  std::string str() const { return v_.get_str(); }
  /// Rounded decimal rendering with `digits` significant digits, computed
  /// with integer arithmetic only.
  std::string decimal(int digits = 12) const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  mpq_class v_;
};

Rat abs(const Rat& r);
/// r^e for any integer exponent; throws on 0^negative.
Rat pow(const Rat& r, long e);

}  // namespace hyperxf
