#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepchoose/error.hpp"

namespace sepchoose {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// 1 + 1/2 + ... + 1/d, exactly. harmonic(0) == 0.
inline BigRational harmonic(std::uint64_t d) {
  BigRational sum = 0;
  for (std::uint64_t i = 1; i <= d; ++i) sum += BigRational(1, i);
  return sum;
}

// A positive rational stored as a reduced integer ratio. Used for the
// density parameter of the constructions so that hypothesis checks never
// round.
class Ratio {
 public:
  Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw PreconditionError("ratio with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  // Accepts "p/q" or a bare integer.
  static Ratio parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return Ratio(std::stoll(std::string(text)), 1);
      return Ratio(std::stoll(std::string(text.substr(0, slash))),
                   std::stoll(std::string(text.substr(slash + 1))));
    } catch (const std::logic_error&) {
      throw ParseError("malformed ratio '" + std::string(text) + "', expected P/Q");
    }
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  BigRational value() const { return BigRational(num_, den_); }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  bool in_open_unit_interval() const noexcept { return num_ > 0 && num_ < den_; }

  friend bool operator==(const Ratio&, const Ratio&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Smallest integer >= ratio * n.
inline std::uint64_t ceil_times(const Ratio& ratio, std::uint64_t n) {
  const BigInt product = BigInt(ratio.num()) * n;
  const BigInt q = (product + ratio.den() - 1) / ratio.den();
  return q.convert_to<std::uint64_t>();
}

// value < ratio * n, exactly.
inline bool less_than_fraction_of(std::uint64_t value, const Ratio& ratio, std::uint64_t n) {
  return BigInt(value) * ratio.den() < BigInt(ratio.num()) * n;
}

}  // namespace sepchoose
