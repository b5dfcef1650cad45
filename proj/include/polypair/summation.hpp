#ifndef POLYPAIR_SUMMATION_HPP
#define POLYPAIR_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace polypair {

/// Neumaier-compensated accumulator. Adding terms in a fixed order gives a
/// bit-reproducible sum that is exact to within one rounding of the result.
class CompensatedSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
  public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

  private:
    CompensatedSum re_, im_;
};

}  // namespace polypair

#endif
