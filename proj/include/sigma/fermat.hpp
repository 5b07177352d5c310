#ifndef SIGMA_FERMAT_HPP
#define SIGMA_FERMAT_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "sigma/adelic.hpp"

namespace sigma {

struct FermatInstance {
    long N = 1;  // degree of x^N + y^N = z^N
};

// Root of unity e^{2 pi i q} with q rational in [0,1), or the
// distinguished zero field element.
struct TorsionAngle {
    bool is_zero_element = false;
    Rat q = 0;  // reduced, 0 <= q < 1; meaningful when !is_zero_element

    static TorsionAngle zero() { return {true, 0}; }
    static TorsionAngle angle(const Rat& q);
    bool operator==(const TorsionAngle&) const = default;
};

struct FermatCheck {
    bool on_curve = false;
    bool torsion_solution = false;
};

// Exact membership in x^N + y^N = 1 plus the {0,+-1} coordinate test.
FermatCheck fermat_check_point(const RationalFunction& x, const RationalFunction& y, long N);

struct FermatPropertyReport {
    bool holds = true;
    std::vector<std::size_t> witnesses;  // indices of height-positive points
};

// Checks h = 0 for each supplied on-curve projective point, rejecting
// off-curve input, and cross-validates the height-zero <=> torsion
// equivalence in both directions on the sample.
FermatPropertyReport fermat_property_over_points(
    const std::vector<std::array<RationalFunction, 3>>& points, long N,
    const AdelicParams& params);

// All solutions of e(N q1) + e(N q2) = 1 with q1, q2 in the order-M
// torsion group (1/M)Z/Z together with the zero-coordinate solutions.
std::vector<std::pair<TorsionAngle, TorsionAngle>> roots_of_unity_solutions(long N, long M);

struct BoundInputs {
    double H = 0;  // max height over the supplied point set
    double a = 1;  // infimum of positive heights, > 0
};

struct MultipleBound {
    Int m0;        // ceil(exp(H/a))
    Int m0_tight;  // floor(H/a) + 1; sharper than m0, not the paper's bound
};

MultipleBound multiple_bound(const BoundInputs& b);

struct MinHeightResult {
    double value = 0;
    double error_bound = 0;
    ProjPoint witness;
    long tuples_examined = 0;
};

// Least strictly positive height over canonical P^dimension tuples of
// univariate coordinates with deg <= deg_bound, |coeff| <= coeff_bound.
MinHeightResult min_positive_height(const AdelicParams& params, int deg_bound, long coeff_bound,
                                    int dimension, long tuple_cap = 50'000'000);

Int euler_phi(Int q);

// Per-prime H profile used by the exp(H_p/a) threshold rule.
struct HeightProfile {
    enum class Kind { constant, log_p, table } kind = Kind::constant;
    double c = 0;
    std::map<long, double> table;
    double operator()(long p) const;
};

// T = union over primes p >= p0 of p Z_{>= m_p}, the minimal set the
// density lemma applies to.
struct DensitySpec {
    long p0 = 5;
    enum class Rule { constant, identity, table, exp_profile } rule = Rule::constant;
    long const_m = 1;
    std::map<long, long> table;  // primes absent from the table get m_p = 1
    double profile_a = 1;
    HeightProfile profile_H;

    long m_of(long p) const;
};

struct DensityCount {
    long long count = 0;
    double ratio = 0;
};

DensityCount density_simulate(const DensitySpec& spec, long long m,
                              long long memory_cap = 500'000'000);

struct DensityCertificate {
    double epsilon = 0;
    std::vector<long> primes;
    Int Q;
    Int phi_Q;
    long long n0 = 0;
    long long m_threshold = 0;

    bool verified_at_scale = false;  // simulation ran at m_threshold
    long long simulated_m = 0;
    double simulated_ratio = 0;
    bool ratio_ok = false;  // ratio >= 1 - 3 epsilon where verified
};

DensityCertificate density_certificate(const DensitySpec& spec, double epsilon,
                                       long long simulation_cap = 10'000'000);

struct PipelineReport {
    DensitySpec spec;
    DensityCount density;
    DensityCertificate certificate;
};

// Desk-scale enactment of the main argument: per-prime multiple
// thresholds from hypothetical height data, the induced density
// simulation, and an epsilon-certificate.
PipelineReport theorem_pipeline(const HeightProfile& H, double a, double epsilon, long long m,
                                long p0 = 5);

}  // namespace sigma

#endif
