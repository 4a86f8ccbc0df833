#include "carlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace carlab {

double Rng::exponential(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be > 0");
    // -log1p(-u) maps [0,1) to [0,inf); nudge the measure-zero u == 0 case
    // so draws stay strictly positive.
    double t = -std::log1p(-uniform()) / rate;
    if (t <= 0.0) t = std::numeric_limits<double>::min();
    return t;
}

}  // namespace carlab
