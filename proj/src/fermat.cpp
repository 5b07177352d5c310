#include "sigma/fermat.hpp"

#include <algorithm>
#include <cmath>

namespace sigma {

TorsionAngle TorsionAngle::angle(const Rat& q) {
    if (q < 0 || q >= 1) throw poly_error("TorsionAngle: q must lie in [0,1)");
    return {false, q};
}

FermatCheck fermat_check_point(const RationalFunction& x, const RationalFunction& y, long N) {
    if (N < 1) throw poly_error("fermat_check_point: N >= 1 required");
    RationalFunction one = RationalFunction::from_rational(1, x.nvars());
    FermatCheck out;
    out.on_curve = (x.pow(static_cast<int>(N)) + y.pow(static_cast<int>(N))) == one;
    auto unit_or_zero = [&](const RationalFunction& f) {
        return f.is_zero() || f == one || f == -one;
    };
    out.torsion_solution = unit_or_zero(x) && unit_or_zero(y);
    return out;
}

FermatPropertyReport fermat_property_over_points(
    const std::vector<std::array<RationalFunction, 3>>& points, long N,
    const AdelicParams& params) {
    if (N < 1) throw poly_error("fermat_property_over_points: N >= 1 required");
    FermatPropertyReport report;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& [x, y, z] = points[i];
        if (x.pow(static_cast<int>(N)) + y.pow(static_cast<int>(N)) !=
            z.pow(static_cast<int>(N)))
            throw poly_error("fermat_property_over_points: point is not on the curve");
        ProjPoint p = ProjPoint::canonicalize({x, y, z});
        bool hz = is_height_zero(p, params);
        if (!hz) {
            report.holds = false;
            report.witnesses.push_back(i);
        }
        // cross-check the height-zero <=> torsion equivalence on the sample
        if (!z.is_zero()) {
            auto chk = fermat_check_point(x / z, y / z, N);
            if (chk.torsion_solution != hz)
                throw poly_error("fermat_property_over_points: equivalence violated");
        } else if (!(y == x || y == -x)) {
            throw poly_error("fermat_property_over_points: z = 0 point with y != +-x");
        }
    }
    return report;
}

std::vector<std::pair<TorsionAngle, TorsionAngle>> roots_of_unity_solutions(long N, long M) {
    if (N < 1 || M < 1) throw poly_error("roots_of_unity_solutions: N, M >= 1 required");
    std::vector<std::pair<TorsionAngle, TorsionAngle>> out;
    auto frac = [](const Rat& r) {
        Int fl = rat_num(r) / rat_den(r);
        Rat f = r - Rat(fl);
        if (f < 0) f += 1;
        return f;
    };
    const Rat sixth(1, 6), five_sixth(5, 6);
    // zero-coordinate solutions: the other coordinate is an N-th root of 1
    for (long k = 0; k < M; ++k) {
        Rat q(k, M);
        if (frac(Rat(N) * q) == 0) {
            out.emplace_back(TorsionAngle::zero(), TorsionAngle::angle(q));
            out.emplace_back(TorsionAngle::angle(q), TorsionAngle::zero());
        }
    }
    // e(a) + e(b) = 1 on the unit circle forces {a, b} = {1/6, 5/6}
    for (long k1 = 0; k1 < M; ++k1)
        for (long k2 = 0; k2 < M; ++k2) {
            Rat r1 = frac(Rat(N) * Rat(k1, M));
            Rat r2 = frac(Rat(N) * Rat(k2, M));
            if ((r1 == sixth && r2 == five_sixth) || (r1 == five_sixth && r2 == sixth))
                out.emplace_back(TorsionAngle::angle(Rat(k1, M)),
                                 TorsionAngle::angle(Rat(k2, M)));
        }
    return out;
}

MultipleBound multiple_bound(const BoundInputs& b) {
    if (b.a <= 0) throw poly_error("multiple_bound: a must be positive");
    if (b.H < 0) throw poly_error("multiple_bound: H must be non-negative");
    double x = b.H / b.a;
    if (x > 700) throw poly_error("multiple_bound: exp(H/a) overflows");
    MultipleBound out;
    out.m0 = Int(std::ceil(std::exp(x) - 1e-12));
    out.m0_tight = Int(std::floor(x)) + 1;
    return out;
}

MinHeightResult min_positive_height(const AdelicParams& params, int deg_bound, long coeff_bound,
                                    int dimension, long tuple_cap) {
    if (params.n != 1)
        throw poly_error("min_positive_height: enumeration implemented for n = 1 only");
    if (params.lambda <= 0)
        throw poly_error("min_positive_height: requires lambda > 0 (Northcott)");
    if (deg_bound < 0 || coeff_bound < 1 || dimension < 1)
        throw poly_error("min_positive_height: bad bounds");

    double npolys = std::pow(2.0 * coeff_bound + 1.0, deg_bound + 1);
    if (std::pow(npolys, dimension + 1) > static_cast<double>(tuple_cap))
        throw poly_error("min_positive_height: search space exceeds cap");

    // enumerate all coefficient vectors once
    struct Cand {
        Poly p;
        int deg;
        double mu;
        bool zero;
    };
    std::vector<Cand> polys;
    {
        std::vector<long> a(deg_bound + 1, -coeff_bound);
        while (true) {
            Poly p(1);
            for (int i = 0; i <= deg_bound; ++i)
                if (a[i] != 0) p.add_term({i}, Rat(a[i]));
            Cand c{p, p.is_zero() ? -1 : p.total_degree(), 0.0, p.is_zero()};
            if (!c.zero) c.mu = mahler_measure(p).value;
            polys.push_back(std::move(c));
            int i = 0;
            for (; i <= deg_bound; ++i) {
                if (++a[i] <= coeff_bound) break;
                a[i] = -coeff_bound;
            }
            if (i > deg_bound) break;
        }
    }
    QuadratureSpec spec;
    spec.tolerance = 1e-7;
    spec.initial_resolution = 512;
    spec.refinement_levels = 3;
    spec.max_evaluations = 500'000;

    MinHeightResult best{HUGE_VAL, 0,
                         ProjPoint::canonicalize_polys({Poly::constant(1, 1)}), 0};
    std::vector<std::size_t> idx(dimension + 1, 0);
    // pass 0: all-constant tuples, heights exact (log max of coprime
    // integers); pass 1: everything else, pruned against the pass-0 best
    for (int pass = 0; pass < 2; ++pass) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            bool all_zero = true, all_const = true;
            int maxdeg = 0;
            double maxmu = 0;
            for (std::size_t k : idx) {
                const Cand& c = polys[k];
                if (c.zero) continue;
                all_zero = false;
                if (c.deg > 0) all_const = false;
                maxdeg = std::max(maxdeg, c.deg);
                maxmu = std::max(maxmu, c.mu);
            }
            bool wanted = pass == 0 ? (!all_zero && all_const) : (!all_zero && !all_const);
            // h >= lambda maxdeg + max mu: prune against the current best
            if (wanted &&
                params.lambda * maxdeg + std::max(maxmu, 0.0) < best.value - 1e-12) {
                ++best.tuples_examined;
                std::vector<Poly> coords;
                coords.reserve(idx.size());
                for (std::size_t k : idx) coords.push_back(polys[k].p);
                ProjPoint p = ProjPoint::canonicalize_polys(std::move(coords));
                if (!is_height_zero(p, params)) {
                    if (pass == 0) {
                        double h = 0;
                        for (const Poly& c : p.coords())
                            if (!c.is_zero())
                                h = std::max(h, std::log(std::fabs(to_double(c.constant_value()))));
                        if (h > 0 && h < best.value) {
                            best.value = h;
                            best.error_bound = 0;
                            best.witness = p;
                        }
                    } else {
                        MahlerEstimate h = height(p, params, spec);
                        if (h.value < best.value) {
                            best.value = h.value;
                            best.error_bound = h.error_bound;
                            best.witness = p;
                        }
                    }
                }
            }
            std::size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < polys.size()) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
    }
    if (!std::isfinite(best.value))
        throw poly_error("min_positive_height: no positive-height tuple found");
    return best;
}

Int euler_phi(Int q) {
    if (q < 1) throw poly_error("euler_phi: q >= 1 required");
    Int result = q;
    for (Int d = 2; d * d <= q; d += (d == 2 ? 1 : 2)) {
        if (q % d == 0) {
            while (q % d == 0) q /= d;
            result -= result / d;
        }
    }
    if (q > 1) result -= result / q;
    return result;
}

double HeightProfile::operator()(long p) const {
    switch (kind) {
        case Kind::constant: return c;
        case Kind::log_p: return std::log(static_cast<double>(p));
        case Kind::table: {
            auto it = table.find(p);
            return it == table.end() ? 0.0 : it->second;
        }
    }
    return 0;
}

long DensitySpec::m_of(long p) const {
    switch (rule) {
        case Rule::constant: return std::max(1L, const_m);
        case Rule::identity: return p;
        case Rule::table: {
            auto it = table.find(p);
            return it == table.end() ? 1L : std::max(1L, it->second);
        }
        case Rule::exp_profile: {
            if (profile_a <= 0) throw poly_error("DensitySpec: profile a must be positive");
            double x = profile_H(p) / profile_a;
            if (x > 42) return 4'000'000'000'000'000'000L;  // saturate
            return std::max(1L, static_cast<long>(std::ceil(std::exp(x) - 1e-12)));
        }
    }
    return 1;
}

DensityCount density_simulate(const DensitySpec& spec, long long m, long long memory_cap) {
    if (m < 1) throw poly_error("density_simulate: m >= 1 required");
    if (m > memory_cap) throw poly_error("density_simulate: m exceeds memory cap");
    // primes up to m
    std::vector<bool> composite(static_cast<std::size_t>(m) + 1, false);
    std::vector<bool> in_T(static_cast<std::size_t>(m) + 1, false);
    for (long long p = 2; p <= m; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (long long k = p * p; k <= m; k += p) composite[static_cast<std::size_t>(k)] = true;
        if (p < spec.p0) continue;
        long long mp = spec.m_of(static_cast<long>(p));
        if (mp > m / p) continue;  // first member already beyond m
        for (long long n = p * mp; n <= m; n += p)
            in_T[static_cast<std::size_t>(n)] = true;
    }
    DensityCount out;
    for (long long n = 1; n <= m; ++n)
        if (in_T[static_cast<std::size_t>(n)]) ++out.count;
    out.ratio = static_cast<double>(out.count) / static_cast<double>(m);
    return out;
}

DensityCertificate density_certificate(const DensitySpec& spec, double epsilon,
                                       long long simulation_cap) {
    if (!(epsilon > 0 && epsilon < 1))
        throw poly_error("density_certificate: epsilon must lie in (0,1)");
    DensityCertificate cert;
    cert.epsilon = epsilon;
    const Rat eps(epsilon);  // exact dyadic value of the double

    // greedy prefix of primes >= p0 until the Euler product drops below eps
    Rat prod = 1;
    cert.Q = 1;
    cert.phi_Q = 1;
    long p = std::max(2L, spec.p0);
    while (prod > eps) {
        while (!is_prime(Int(p))) ++p;
        cert.primes.push_back(p);
        prod *= Rat(p - 1, p);
        cert.Q *= p;
        cert.phi_Q *= (p - 1);
        long long np = static_cast<long long>(p) * spec.m_of(p);
        cert.n0 = std::max(cert.n0, np);
        ++p;
        if (cert.primes.size() > 10000)
            throw poly_error("density_certificate: runaway prime selection");
    }

    double thr = std::max(static_cast<double>(cert.n0 - 1) / epsilon,
                          to_double(cert.Q) / epsilon);
    cert.m_threshold = thr > 8.9e18 ? 9'000'000'000'000'000'000LL
                                    : static_cast<long long>(std::ceil(thr));
    if (cert.m_threshold <= simulation_cap) {
        DensityCount dc = density_simulate(spec, cert.m_threshold);
        cert.verified_at_scale = true;
        cert.simulated_m = cert.m_threshold;
        cert.simulated_ratio = dc.ratio;
        cert.ratio_ok = dc.ratio >= 1.0 - 3.0 * epsilon;
    }
    return cert;
}

PipelineReport theorem_pipeline(const HeightProfile& H, double a, double epsilon, long long m,
                                long p0) {
    if (a <= 0) throw poly_error("theorem_pipeline: a must be positive");
    PipelineReport report;
    report.spec.p0 = p0;
    report.spec.rule = DensitySpec::Rule::exp_profile;
    report.spec.profile_a = a;
    report.spec.profile_H = H;
    report.density = density_simulate(report.spec, m);
    report.certificate = density_certificate(report.spec, epsilon);
    return report;
}

}  // namespace sigma
