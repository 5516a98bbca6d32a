#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace spinmod {

// Exact rational over int64 with a single +∞.
// Always reduced with a positive denominator. Overflow throws ResourceError.
class ExtRational {
 public:
  constexpr ExtRational() = default;
  ExtRational(std::int64_t num, std::int64_t den = 1);  // NOLINT

  static ExtRational infinity() {
    ExtRational r;
    r.inf_ = true;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  bool is_inf() const { return inf_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool positive() const { return inf_ || num_ > 0; }

  ExtRational operator+(const ExtRational& o) const;
  ExtRational operator*(const ExtRational& o) const;
  // Division by a finite nonzero value; ∞ / x = ∞.
  ExtRational operator/(const ExtRational& o) const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.inf_ == b.inf_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

  // "inf", "p" or "p/q".
  std::string to_string() const;
  static ExtRational parse(std::string_view text);

 private:
  bool inf_ = false;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace spinmod
