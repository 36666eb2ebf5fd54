#include "cirng/bitgen/logistic.hpp"

#include "cirng/errors.hpp"

#include <stdexcept>
#include <string>

namespace cirng {

LogisticMap::LogisticMap(double x, double mu) : x_(x), mu_(mu) {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("logistic seed must lie in (0, 1)");
    if (!(mu > 3.57 && mu <= 4.0)) throw std::invalid_argument("logistic mu must lie in (3.57, 4]");
}

double LogisticMap::next() {
    if (!(x_ > 0.0 && x_ < 1.0)) {
        throw DegenerateOrbit("logistic orbit collapsed to " + std::to_string(x_));
    }
    x_ = mu_ * x_ * (1.0 - x_);
    return x_;
}

} // namespace cirng
