#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace tdc {

/// Exact fraction with positive denominator, kept in lowest terms.
class Rational {
public:
  constexpr Rational(std::int64_t value = 0) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// "7" or "7/2".
  std::string str() const;

private:
  std::int64_t num_;
  std::int64_t den_;
};

} // namespace tdc
