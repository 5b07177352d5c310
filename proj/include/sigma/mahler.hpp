#ifndef SIGMA_MAHLER_HPP
#define SIGMA_MAHLER_HPP

#include <span>
#include <string>
#include <vector>

#include "sigma/poly.hpp"

namespace sigma {

enum class MahlerMethod { jensen_exact, tensor_grid, qmc };

std::string to_string(MahlerMethod m);

struct MahlerEstimate {
    double value = 0;
    double error_bound = 0;
    MahlerMethod method = MahlerMethod::jensen_exact;
    long evaluations = 0;
    bool converged = true;
};

struct QuadratureSpec {
    // jensen_exact is chosen automatically for univariate Mahler
    // measures unless a grid method is forced.
    bool force_grid = false;
    bool use_qmc = false;
    int initial_resolution = 64;
    int refinement_levels = 7;
    double singular_threshold = 1e-8;
    double tolerance = 1e-3;
    long max_evaluations = 10'000'000;
    int workers = 1;
};

// mu(f): the integral of log|f| over the unit torus. Univariate input
// goes through Jensen's formula on isolated roots; multivariate input
// through refining tensor-grid (or lattice) quadrature. Zero input
// returns the -infinity sentinel.
MahlerEstimate mahler_measure(const Poly& f, const QuadratureSpec& spec = {});

// Integral over [0,1]^n of log max_i |f_i(e^{2 pi i t})|; the
// workhorse behind heights. All polynomials must be nonzero and share
// the same variable count, and must not all vanish at a common torus
// point (canonical coprime tuples guarantee that).
MahlerEstimate torus_log_integral(std::span<const Poly> fs, const QuadratureSpec& spec = {});

// mu(f) >= log min |nonzero coefficient|, within the error bound.
bool coefficient_bound_check(const Poly& f, const QuadratureSpec& spec = {});

// Univariate integer polynomials with deg <= d and mu <= C, up to sign
// normalization, enumerated over the Landau-Mahler coefficient box
// |a_i| <= binom(d,i) e^C. Throws if the box exceeds enumeration_cap.
std::vector<Poly> northcott_enumerate(int d, double C, long enumeration_cap = 4'000'000);

// k-th cyclotomic polynomial (exact).
Poly cyclotomic(int k);

}  // namespace sigma

#endif
