#include "scmod/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace scmod {

// Nodes by Newton iteration on the orthonormal Hermite recurrence,
// largest root first, with the usual asymptotic initial guesses.
GaussHermite::GaussHermite(std::size_t order) {
    if (order < 1) throw std::invalid_argument("GaussHermite: order must be >= 1");
    const std::size_t n = order;
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double pi4 = 0.7511255444649425;  // pi^(-1/4)
    const std::size_t m = (n + 1) / 2;
    double z = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * nodes[1];
        } else {
            z = 2.0 * z - nodes[i - 2];
        }
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = pi4;
            double p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
    if (n % 2 == 1) nodes[m - 1] = 0.0;
}

const GaussHermite& gauss_hermite(std::size_t order) {
    static std::mutex mu;
    static std::map<std::size_t, GaussHermite> cache;
    std::scoped_lock lk(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, GaussHermite(order)).first;
    return it->second;
}

}  // namespace scmod
