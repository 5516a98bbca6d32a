#include "spinmod/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "spinmod/error.hpp"

namespace spinmod {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceError("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

ExtRational make(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 a = n < 0 ? -n : n;
  i128 b = d;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return ExtRational(narrow(n), narrow(d));
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw InputError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

ExtRational::ExtRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = narrow(-static_cast<i128>(num));
    den = narrow(-static_cast<i128>(den));
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

ExtRational ExtRational::operator+(const ExtRational& o) const {
  if (inf_ || o.inf_) return infinity();
  return make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
              static_cast<i128>(den_) * o.den_);
}

ExtRational ExtRational::operator*(const ExtRational& o) const {
  if (inf_ || o.inf_) {
    if ((!inf_ && num_ == 0) || (!o.inf_ && o.num_ == 0)) {
      throw InputError("0 * inf is undefined");
    }
    return infinity();
  }
  return make(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

ExtRational ExtRational::operator/(const ExtRational& o) const {
  if (o.inf_ || o.num_ == 0) throw InputError("division by zero or inf");
  if (inf_) return infinity();
  return make(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::string ExtRational::to_string() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExtRational(parse_int(text));
  return ExtRational(parse_int(text.substr(0, slash)),
                     parse_int(text.substr(slash + 1)));
}

}  // namespace spinmod
