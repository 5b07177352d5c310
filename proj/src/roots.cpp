#include "sigma/roots.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sigma {

namespace {

using cplx = std::complex<double>;

// Horner evaluation of p and p'.
std::pair<cplx, cplx> eval_pd(const std::vector<cplx>& c, cplx z) {
    cplx p = c.back(), d = 0;
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        d = d * z + p;
        p = p * z + c[k];
    }
    return {p, d};
}

}  // namespace

RootSet find_roots(const std::vector<cplx>& coeffs) {
    if (coeffs.empty() || std::abs(coeffs.back()) == 0.0)
        throw std::invalid_argument("find_roots: zero leading coefficient");
    int n = static_cast<int>(coeffs.size()) - 1;
    RootSet out;
    if (n == 0) return out;

    // Cauchy bound for the initial circle.
    double bound = 0;
    for (int k = 0; k < n; ++k)
        bound = std::max(bound, std::abs(coeffs[k] / coeffs[n]));
    double r0 = 1.0 + bound;

    std::vector<cplx> z(n);
    for (int k = 0; k < n; ++k) {
        // staggered angles, no root of unity symmetry with the input
        double th = 2.0 * std::numbers::pi * (k + 0.35) / n + 0.4;
        z[k] = r0 * std::polar(1.0, th);
    }

    const int max_iter = 300;
    int it = 0;
    for (; it < max_iter; ++it) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            auto [p, d] = eval_pd(coeffs, z[k]);
            if (std::abs(p) == 0.0) continue;
            cplx newton = (std::abs(d) == 0.0) ? cplx(1e-3, 1e-3) : p / d;
            cplx sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            cplx corr = newton / (1.0 - newton * sum);
            z[k] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max(1.0, std::abs(z[k])));
        }
        if (worst < 1e-15) break;
    }

    out.roots = z;
    out.iterations = it;
    out.radii.resize(n);
    for (int k = 0; k < n; ++k) {
        auto [p, d] = eval_pd(coeffs, z[k]);
        double ad = std::abs(d);
        // n |p| / |p'| encloses a root for simple roots; fall back to a
        // conservative radius when p' underflows (clustered roots).
        out.radii[k] = ad > 0 ? n * std::abs(p) / ad : 1e-6;
        out.radii[k] = std::max(out.radii[k], 8e-16 * std::max(1.0, std::abs(z[k])));
    }
    return out;
}

}  // namespace sigma
