#ifndef SIGMA_ROOTS_HPP
#define SIGMA_ROOTS_HPP

#include <complex>
#include <vector>

namespace sigma {

// All complex roots of a univariate polynomial, found by simultaneous
// Aberth-Ehrlich iteration, together with a posteriori error radii
// (deg * |p(z)| / |p'(z)| at the final iterate).
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> radii;
    int iterations = 0;
};

// coeffs[k] multiplies x^k; the leading coefficient must be nonzero.
RootSet find_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace sigma

#endif
