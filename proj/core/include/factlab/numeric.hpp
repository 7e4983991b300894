#pragma once

#include <cmath>
#include <complex>

namespace factlab {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> v) noexcept {
    re_.add(v.real());
    im_.add(v.imag());
  }
  std::complex<double> value() const noexcept {
    return {re_.value(), im_.value()};
  }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// e^{2 pi i t / p} for an integer 0 <= t < p.
inline std::complex<double> unit_root(unsigned long long t,
                                      unsigned long long p) noexcept {
  const double angle = 2.0 * kPi * static_cast<double>(t) /
                       static_cast<double>(p);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace factlab
