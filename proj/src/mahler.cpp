#include "sigma/mahler.hpp"

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

#include "sigma/roots.hpp"

namespace sigma {

std::string to_string(MahlerMethod m) {
    switch (m) {
        case MahlerMethod::jensen_exact: return "jensen_exact";
        case MahlerMethod::tensor_grid: return "tensor_grid";
        case MahlerMethod::qmc: return "qmc";
    }
    return "?";
}

Poly cyclotomic(int k) {
    if (k < 1) throw poly_error("cyclotomic: k >= 1 required");
    static std::map<int, Poly> cache;
    static std::mutex mu;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    Poly x = Poly::variable(0, 1);
    Poly num = x.pow(static_cast<unsigned>(k)) - Poly::constant(1, 1);
    for (int d = 1; d < k; ++d)
        if (k % d == 0) num = Poly::exact_div(num, cyclotomic(d));
    std::lock_guard lock(mu);
    cache.emplace(k, num);
    return num;
}

namespace {

double log_rat_abs(const Rat& r) {
    // log |r| without overflowing the double conversion for big values
    Int n = rat_num(r), d = rat_den(r);
    if (n < 0) n = -n;
    auto log_int = [](const Int& v) {
        double x = to_double(v);
        if (std::isfinite(x)) return std::log(x);
        unsigned long bits = boost::multiprecision::msb(v);
        Int shifted = v >> (bits - 500);
        return std::log(to_double(shifted)) + (double)(bits - 500) * std::numbers::ln2;
    };
    return log_int(n) - log_int(d);
}

bool try_exact_div(Poly& f, const Poly& g) {
    try {
        f = Poly::exact_div(f, g);
        return true;
    } catch (const poly_error&) {
        return false;
    }
}

// Jensen path: mu(f) = log|content| + log|lead| + sum log^+ |roots|.
MahlerEstimate jensen_mahler(const Poly& f) {
    MahlerEstimate est;
    est.method = MahlerMethod::jensen_exact;

    auto cs = content_primitive(f);
    double value = log_rat_abs(cs.content);
    Poly p = cs.primitive;

    // roots at the origin and exact unit-circle (cyclotomic) factors
    // contribute nothing; strip them before floating-point root finding
    int v0 = 0;
    Poly x = Poly::variable(0, 1);
    while (p.degree_in(0) > 0 && p.coeff({0}) == 0) {
        p = Poly::exact_div(p, x);
        ++v0;
    }
    (void)v0;
    auto totient = [](int k) {
        int t = k;
        for (int q = 2; q * q <= k; ++q)
            if (k % q == 0) {
                t -= t / q;
                while (k % q == 0) k /= q;
            }
        if (k > 1) t -= t / k;
        return t;
    };
    int deg = p.degree_in(0);
    for (int k = 1; k <= 2 * deg * deg + 8 && p.degree_in(0) > 0; ++k) {
        // deg(Phi_k) = phi(k): only these can divide, and the filter
        // avoids building the (expensive) high-index cyclotomics
        if (totient(k) > p.degree_in(0)) continue;
        Poly phi = cyclotomic(k);
        while (p.degree_in(0) >= phi.degree_in(0) && try_exact_div(p, phi)) {}
    }

    auto aberth_part = [&](const Poly& sf) {
        int deg = sf.degree_in(0);
        std::vector<std::complex<double>> coeffs(deg + 1);
        for (int k = 0; k <= deg; ++k) coeffs[k] = to_double(sf.coeff({k}));
        RootSet rs = find_roots(coeffs);
        est.evaluations += static_cast<long>(rs.iterations) * deg;
        value += std::log(std::abs(coeffs[deg]));
        for (int k = 0; k < deg; ++k) {
            double a = std::abs(rs.roots[k]);
            double r = rs.radii[k];
            if (std::fabs(a - 1.0) <= std::max(r, 1e-12)) {
                // indistinguishable from the unit circle: contributes 0
                est.error_bound += std::max(r, 1e-12);
            } else if (a > 1.0) {
                value += std::log(a);
                est.error_bound += r / (a - std::min(r, a / 2));
            } else if (a + r >= 1.0) {
                // inside but the enclosure touches the circle
                est.error_bound += r;
            }
        }
        est.error_bound += (deg + 2) * 8 * DBL_EPSILON * (1.0 + std::fabs(value));
    };

    // repeated roots wreck the iteration's accuracy: peel one radical
    // (square-free multiplicand) at a time via gcd with the derivative
    while (p.degree_in(0) > 0) {
        Poly dp(1);
        for (const auto& [m, c] : p.terms())
            if (m[0] > 0) dp.add_term({m[0] - 1}, Rat(m[0]) * c);
        Poly g = poly_gcd(p, dp);
        if (g.is_constant()) {
            aberth_part(p);
            break;
        }
        aberth_part(Poly::exact_div(p, g));
        p = g;
    }
    est.value = value;
    est.error_bound += 4 * DBL_EPSILON * (1.0 + std::fabs(value));
    return est;
}

constexpr double kClampFloor = 1e-300;
constexpr double kLogClampFloor = -690.77552789821368;  // log(1e-300)

struct GridAccum {
    double sum = 0;        // raw sum of log values (weight applied later)
    double comp = 0;       // Kahan compensation
    double err = 0;        // propagated evaluation error (weighted later)
    double inflation = 0;  // clamped-cell error inflation (weighted later)
    long evals = 0;

    void add(double v) {
        double y = v - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
};

// Refine one singular cell (centered at `center`, half-width h per
// axis) by midpoint sub-sampling; returns the mean of log|max f_i|
// over the cell with clamping accounted in acc.inflation (in units of
// one point weight).
double refine_cell(std::span<const Poly> fs, std::span<const double> center, double h,
                   GridAccum& acc) {
    const int sub = 16;
    int n = static_cast<int>(center.size());
    long total = 1;
    for (int a = 0; a < n; ++a) total *= sub;
    double mean = 0;
    long clamped = 0;
    std::vector<double> t(n);
    std::vector<int> idx(n, 0);
    for (long c = 0; c < total; ++c) {
        for (int a = 0; a < n; ++a) {
            double frac = (idx[a] + 0.5) / sub;
            t[a] = center[a] - h + 2.0 * h * frac;
            t[a] -= std::floor(t[a]);
        }
        double vmax = 0;
        for (const Poly& f : fs) {
            auto tv = torus_eval(f, t);
            vmax = std::max(vmax, std::abs(tv.value));
        }
        acc.evals += static_cast<long>(fs.size());
        if (vmax < kClampFloor) {
            mean += kLogClampFloor;
            ++clamped;
        } else {
            mean += std::log(vmax);
        }
        for (int a = 0; a < n; ++a) {
            if (++idx[a] < sub) break;
            idx[a] = 0;
        }
    }
    acc.inflation += static_cast<double>(clamped) / total * (-kLogClampFloor);
    return mean / total;
}

// Precomputed per-term, per-axis phase tables for one polynomial on a
// tensor grid; axis 0 carries the coefficient.
struct PolyTables {
    std::vector<std::vector<std::vector<std::complex<double>>>> term_axis;  // [term][axis][idx]
    double eval_err = 0;  // forward rounding bound on |f| at any node
};

PolyTables build_tables(const Poly& f, int res) {
    int n = f.nvars();
    PolyTables pt;
    pt.term_axis.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) {
        double a = to_double(c);
        long expsum = 0;
        std::vector<std::vector<std::complex<double>>> axes(n);
        for (int ax = 0; ax < n; ++ax) {
            expsum += m[ax];
            axes[ax].resize(res);
            double shift = ax == 0 ? 0.0 : 0.5;
            for (int idx = 0; idx < res; ++idx) {
                double node = (idx + shift) / res;
                double phase = m[ax] * node;
                phase -= std::floor(phase);
                axes[ax][idx] = std::polar(1.0, 2.0 * std::numbers::pi * phase);
            }
            if (ax == 0)
                for (auto& z : axes[0]) z *= a;
        }
        pt.eval_err += std::fabs(a) * (12.0 + 8.0 * static_cast<double>(expsum)) * DBL_EPSILON;
        pt.term_axis.push_back(std::move(axes));
    }
    return pt;
}

// One full tensor-grid pass at the given resolution.
GridAccum grid_pass(std::span<const Poly> fs, int res, const QuadratureSpec& spec) {
    int n = fs[0].nvars();
    std::vector<PolyTables> tabs;
    tabs.reserve(fs.size());
    for (const Poly& f : fs) tabs.push_back(build_tables(f, res));

    int workers = std::max(1, spec.workers);
    std::vector<GridAccum> rows(res);

    auto run_row = [&](int j) {
        GridAccum& acc = rows[j];
        std::vector<int> idx(n, 0);
        std::vector<double> t(n);
        long inner = 1;
        for (int a = 1; a < n; ++a) inner *= res;
        for (long c = 0; c < inner; ++c) {
            double vmax = 0, emax = 0;
            for (std::size_t pi = 0; pi < fs.size(); ++pi) {
                std::complex<double> val = 0;
                for (const auto& term : tabs[pi].term_axis) {
                    std::complex<double> prod = term[0][j];
                    for (int a = 1; a < n; ++a) prod *= term[a][idx[a]];
                    val += prod;
                }
                vmax = std::max(vmax, std::abs(val));
                emax = std::max(emax, tabs[pi].eval_err);
            }
            acc.evals += static_cast<long>(fs.size());
            if (vmax < spec.singular_threshold) {
                t[0] = static_cast<double>(j) / res;
                for (int a = 1; a < n; ++a) t[a] = (idx[a] + 0.5) / res;
                acc.add(refine_cell(fs, t, 0.5 / res, acc));
            } else {
                acc.add(std::log(vmax));
                acc.err += emax / vmax;
            }
            for (int a = n - 1; a >= 1; --a) {
                if (++idx[a] < res) break;
                idx[a] = 0;
            }
        }
    };

    if (workers <= 1) {
        for (int j = 0; j < res; ++j) run_row(j);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                int j;
                while ((j = next.fetch_add(1)) < res) run_row(j);
            });
        for (auto& th : pool) th.join();
    }

    // fixed-order reduction: identical result for any worker count
    GridAccum total;
    for (const GridAccum& r : rows) {
        total.add(r.sum);
        total.err += r.err;
        total.inflation += r.inflation;
        total.evals += r.evals;
    }
    return total;
}

// Rank-1 lattice pass (Korobov generating vector); used for n >= 3.
GridAccum qmc_pass(std::span<const Poly> fs, long npts, const QuadratureSpec& spec) {
    int n = fs[0].nvars();
    const long a = 76543;
    std::vector<long> z(n);
    z[0] = 1;
    for (int i = 1; i < n; ++i) z[i] = (z[i - 1] * a) % npts;
    GridAccum acc;
    std::vector<double> t(n);
    for (long k = 0; k < npts; ++k) {
        for (int i = 0; i < n; ++i) {
            double x = static_cast<double>((static_cast<long long>(k) * z[i]) % npts) / npts;
            t[i] = x;
        }
        double vmax = 0, emax = 0;
        for (const Poly& f : fs) {
            auto tv = torus_eval(f, t);
            vmax = std::max(vmax, std::abs(tv.value));
            emax = std::max(emax, tv.error_bound);
        }
        acc.evals += static_cast<long>(fs.size());
        if (vmax < kClampFloor) {
            acc.add(kLogClampFloor);
            acc.inflation += -kLogClampFloor;
        } else {
            acc.add(std::log(vmax));
            acc.err += emax / std::max(vmax, spec.singular_threshold);
        }
    }
    return acc;
}

MahlerEstimate refine_loop(std::span<const Poly> fs, const QuadratureSpec& spec) {
    int n = fs[0].nvars();
    bool qmc = spec.use_qmc && n >= 2;
    MahlerEstimate est;
    est.method = qmc ? MahlerMethod::qmc : MahlerMethod::tensor_grid;

    long evals = 0;
    double prev = 0;
    bool have_prev = false;
    double diff = HUGE_VAL;
    est.converged = false;

    long res = spec.initial_resolution;
    long qmc_n = std::max<long>(1024, res * res);
    for (int level = 0; level < spec.refinement_levels; ++level) {
        long planned = qmc ? qmc_n : static_cast<long>(std::llround(std::pow((double)res, n)));
        planned *= static_cast<long>(fs.size());
        if (evals + planned > spec.max_evaluations) break;
        GridAccum acc = qmc ? qmc_pass(fs, qmc_n, spec)
                            : grid_pass(fs, static_cast<int>(res), spec);
        double npoints = qmc ? static_cast<double>(qmc_n) : std::pow((double)res, n);
        double value = acc.sum / npoints;
        evals += acc.evals;
        est.value = value;
        est.error_bound = (have_prev ? std::fabs(value - prev) : HUGE_VAL) +
                          (acc.err + acc.inflation) / npoints;
        if (have_prev) diff = std::fabs(value - prev);
        prev = value;
        have_prev = true;
        if (diff <= spec.tolerance) {
            est.converged = true;
            break;
        }
        res *= 2;
        qmc_n *= 2;
    }
    est.evaluations = evals;
    if (!std::isfinite(est.error_bound)) est.error_bound = HUGE_VAL;
    return est;
}

}  // namespace

MahlerEstimate torus_log_integral(std::span<const Poly> fs, const QuadratureSpec& spec) {
    if (fs.empty()) throw poly_error("torus_log_integral: no polynomials");
    int n = fs[0].nvars();
    for (const Poly& f : fs) {
        if (f.is_zero()) throw poly_error("torus_log_integral: zero polynomial");
        if (f.nvars() != n) throw poly_error("torus_log_integral: variable mismatch");
    }
    // constant tuple: the integrand is the constant log max |c_i|
    bool all_const = std::all_of(fs.begin(), fs.end(), [](const Poly& f) { return f.is_constant(); });
    if (all_const) {
        MahlerEstimate est;
        est.method = MahlerMethod::tensor_grid;
        double m = -HUGE_VAL;
        for (const Poly& f : fs) m = std::max(m, log_rat_abs(f.constant_value()));
        est.value = m;
        est.error_bound = 4 * DBL_EPSILON * (1 + std::fabs(m));
        est.converged = true;
        return est;
    }
    return refine_loop(fs, spec);
}

MahlerEstimate mahler_measure(const Poly& f, const QuadratureSpec& spec) {
    if (f.is_zero()) {
        MahlerEstimate est;
        est.value = -HUGE_VAL;
        est.error_bound = 0;
        return est;
    }
    if (f.is_constant()) {
        MahlerEstimate est;
        est.value = log_rat_abs(f.constant_value());
        est.error_bound = 4 * DBL_EPSILON * (1 + std::fabs(est.value));
        return est;
    }
    if (f.nvars() == 1 && !spec.force_grid) return jensen_mahler(f);
    std::vector<Poly> fs = {f};
    return torus_log_integral(fs, spec);
}

bool coefficient_bound_check(const Poly& f, const QuadratureSpec& spec) {
    if (f.is_zero()) throw poly_error("coefficient_bound_check: zero polynomial");
    MahlerEstimate est = mahler_measure(f, spec);
    double logmin = HUGE_VAL;
    for (const auto& [m, c] : f.terms())
        logmin = std::min(logmin, log_rat_abs(c));
    return est.value + est.error_bound >= logmin - 1e-12;
}

std::vector<Poly> northcott_enumerate(int d, double C, long enumeration_cap) {
    if (d < 0 || C < 0) {
        if (d < 0) throw poly_error("northcott_enumerate: negative degree bound");
        return {};  // mu >= 0 for nonzero integer polynomials
    }
    std::vector<long> bound(d + 1);
    double volume = 1;
    double binom = 1;
    for (int i = 0; i <= d; ++i) {
        if (i > 0) binom = binom * (d - i + 1) / i;
        bound[i] = static_cast<long>(std::floor(binom * std::exp(C) + 1e-9));
        volume *= 2.0 * bound[i] + 1.0;
        if (volume > static_cast<double>(enumeration_cap))
            throw poly_error("northcott_enumerate: coefficient box exceeds cap");
    }
    std::vector<Poly> out;
    std::vector<long> a(d + 1, 0);
    for (int i = 0; i <= d; ++i) a[i] = -bound[i];
    while (true) {
        int top = -1;
        for (int i = d; i >= 0; --i)
            if (a[i] != 0) { top = i; break; }
        if (top >= 0 && a[top] > 0) {  // sign-normalized representatives only
            Poly p(1);
            for (int i = 0; i <= d; ++i)
                if (a[i] != 0) p.add_term({i}, Rat(a[i]));
            MahlerEstimate mu = mahler_measure(p);
            if (mu.value <= C + 1e-9 + mu.error_bound) out.push_back(p);
        }
        int i = 0;
        for (; i <= d; ++i) {
            if (++a[i] <= bound[i]) break;
            a[i] = -bound[i];
        }
        if (i > d) break;
    }
    return out;
}

}  // namespace sigma
