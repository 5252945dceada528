#include "rateregion/kernels.hpp"

#include <cmath>

namespace rateregion::kernels {

double neg_entropy_sum_scalar(const double* p, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = p[i];
        if (x > 0.0) acc += x * std::log2(x);
    }
    return acc;
}

}  // namespace rateregion::kernels
