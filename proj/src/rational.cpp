#include "tdc/rational.hpp"

#include "tdc/error.hpp"

namespace tdc {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw InvalidParameter("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace tdc
