#pragma once

#include <cstddef>
#include <vector>

namespace scmod {

// Gauss-Hermite rule for the weight exp(-x^2) on (-inf, inf).
// Expectations over xi ~ N(0,1) use E[f(xi)] = 1/sqrt(pi) * sum w_i f(sqrt(2) x_i).
struct GaussHermite {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussHermite(std::size_t order);
};

// Shared, lazily built rule cache (orders are reused all over the place).
const GaussHermite& gauss_hermite(std::size_t order);

}  // namespace scmod
