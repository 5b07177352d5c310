// Acceptance suite: twelve numbered criteria, one pass/fail line each.
// Exit code 0 iff every criterion passes.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "sigma/fermat.hpp"
#include "sigma/parser.hpp"

using namespace sigma;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d  %-28s %s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.c_str());
    if (!ok) ++failures;
}

double now_seconds() {
    static auto t0 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Poly uni(std::initializer_list<long> coeffs) {
    Poly p(1);
    int d = 0;
    for (long c : coeffs) p.add_term({d++}, Rat(c));
    return p;
}

// Independent Jensen oracle: Durand-Kerner roots, log^+ summed directly.
double jensen_oracle(const Poly& f) {
    int d = f.degree_in(0);
    std::vector<std::complex<double>> c(d + 1), z(d);
    for (int k = 0; k <= d; ++k) c[k] = to_double(f.coeff({k}));
    for (int k = 0; k < d; ++k) z[k] = std::polar(0.4 + 0.9 * k, 0.7 * k + 0.5);
    for (int it = 0; it < 600; ++it)
        for (int k = 0; k < d; ++k) {
            std::complex<double> p = c[d];
            for (int j = d - 1; j >= 0; --j) p = p * z[k] + c[j];
            std::complex<double> q = c[d];
            for (int j = 0; j < d; ++j)
                if (j != k) q *= z[k] - z[j];
            z[k] -= p / q;
        }
    double v = std::log(std::abs(c[d]));
    for (int k = 0; k < d; ++k) v += std::max(0.0, std::log(std::abs(z[k])));
    return v;
}

// ---------------------------------------------------------------- 1
void criterion_1() {
    std::vector<Poly> pool = {
        uni({0, 1}),        uni({-1, 1}),        uni({1, 1}),          uni({-2, 1}),
        uni({2, 1}),        uni({-1, 2}),        uni({-2, 3}),         uni({3, 5}),
        uni({1, 0, 1}),     uni({1, 1, 1}),      uni({-2, 0, 1}),      uni({-1, -1, 1}),
        uni({4, 3, 2}),     uni({-2, 0, 0, 1}),  uni({1, 1, 0, 1}),    uni({-1, -1, 0, 1}),
        uni({1, 0, 0, 0, 1}), uni({1, 1, 1, 1, 1}), uni({-2, 0, 0, 0, 1}),
        uni({1, 1, 0, 0, 1}),
    };
    std::vector<Rat> scalars = {Rat(2),      Rat(-6, 35), Rat(1),  Rat(3, 4),
                                Rat(-22, 7), Rat(5),      Rat(-1, 2), Rat(9, 10)};
    long exps[] = {1, 2, -1, 3, -2};

    AdelicParams params{1, 0.8};
    double worst = 0;
    int count = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 24; ++i) {
        std::size_t a = i % pool.size();
        std::size_t b = (3 * i + 7) % pool.size();
        std::size_t c = (11 * i + 5) % pool.size();
        FactoredElement elem{scalars[i % scalars.size()], {}};
        elem.factors.emplace_back(PrimitivePoly(pool[a]), exps[i % 5]);
        if (b != a) elem.factors.emplace_back(PrimitivePoly(pool[b]), exps[(i + 2) % 5]);
        if (c != a && c != b) elem.factors.emplace_back(PrimitivePoly(pool[c]), exps[(i + 4) % 5]);
        auto r = product_formula_residual(elem, params);
        worst = std::max(worst, std::fabs(r.value));
        ++count;
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d elements, max |residual| = %.2e, %.2f s", count, worst,
                  dt);
    report(1, "product formula n=1", count >= 20 && worst <= 1e-9 && dt < 5.0, buf);
}

// ---------------------------------------------------------------- 2
void criterion_2() {
    AdelicParams params{2, 0.5};
    QuadratureSpec spec;
    spec.tolerance = 1e-4;
    spec.refinement_levels = 8;
    spec.max_evaluations = 10'000'000;

    Poly X = Poly::variable(0, 2), Y = Poly::variable(1, 2), one = Poly::constant(1, 2);
    std::vector<FactoredElement> elems = {
        {Rat(1), {{PrimitivePoly(X - Y), 1}}},
        {Rat(1), {{PrimitivePoly(one + X + Y), 1}}},
        {Rat(3), {}},
        {Rat(1), {{PrimitivePoly(Rat(2) * X - one), 1}}},
    };
    double worst = 0;
    bool ok = true;
    int non_converged = 0;
    for (const auto& e : elems) {
        auto r = product_formula_residual(e, params, spec);
        worst = std::max(worst, std::fabs(r.value));
        ok = ok && std::fabs(r.value) <= 5e-3;
        // each sub-integral respects the 10^7 budget; hitting it must be
        // flagged through converged=false, never silently mis-reported
        if (!r.converged) {
            ++non_converged;
            ok = ok && r.error_bound > 0;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max |residual| = %.2e over 4 elements, %d flagged",
                  worst, non_converged);
    report(2, "product formula n=2", ok, buf);
}

// ---------------------------------------------------------------- 3
void criterion_3() {
    auto m1 = mahler_measure(uni({-1, 1}));
    auto m2 = mahler_measure(uni({-1, 2}));

    Poly s(2);
    s.add_term({0, 0}, 1);
    s.add_term({1, 0}, 1);
    s.add_term({0, 1}, 1);
    auto m3 = mahler_measure(s);

    // independent dense-grid oracle at 4096^2 nodes
    const int R = 4096;
    double oracle = 0;
    for (int i = 0; i < R; ++i) {
        double row = 0;
        double si = std::sin(2 * std::numbers::pi * i / R),
               ci = std::cos(2 * std::numbers::pi * i / R);
        for (int j = 0; j < R; ++j) {
            double sj = std::sin(2 * std::numbers::pi * j / R),
                   cj = std::cos(2 * std::numbers::pi * j / R);
            double re = 1 + ci + cj, im = si + sj;
            row += 0.5 * std::log(re * re + im * im);
        }
        oracle += row / R;
    }
    oracle /= R;
    const double closed_form = 0.3230659472194505;  // known constant for 1 + X + Y

    bool ok = std::fabs(m1.value) <= 1e-12 && std::fabs(m2.value - std::log(2.0)) <= 1e-12 &&
              m1.method == MahlerMethod::jensen_exact &&
              std::fabs(m3.value - 0.3230659) <= 1e-3 &&
              std::fabs(oracle - closed_form) <= 1e-4 &&
              std::fabs(m3.value - oracle) <= 1e-3;
    char buf[128];
    std::snprintf(buf, sizeof buf, "mu(1+X+Y): lib %.7f, grid oracle %.7f, closed %.7f",
                  m3.value, oracle, closed_form);
    report(3, "Mahler constants", ok, buf);
}

// ---------------------------------------------------------------- 4
void criterion_4() {
    Poly one = Poly::constant(1, 1), x = Poly::variable(0, 1);
    AdelicParams params{1, 0.7};
    QuadratureSpec spec;
    spec.tolerance = 1e-10;

    auto h1 = height(ProjPoint::canonicalize_polys({one, Rat(2) * one}), params, spec);
    auto h2 = height(ProjPoint::canonicalize_polys({one, x}), params, spec);
    auto h3 = height(ProjPoint::canonicalize_polys({Rat(2) * one, x}), params, spec);

    bool ok = h1.value == std::log(2.0) && h1.error_bound <= 1e-12 &&  // exact decomposition
              std::fabs(h2.value - 0.7) <= 1e-12 &&                // zero integral term
              std::fabs(h3.value - (0.7 + std::log(2.0))) <= 1e-9;
    char buf[128];
    std::snprintf(buf, sizeof buf, "h(1:2)=%.15f h(1:X)=%.15f h(2:X)=%.15f", h1.value,
                  h2.value, h3.value);
    report(4, "height spot checks", ok, buf);
}

// ---------------------------------------------------------------- 5
void criterion_5() {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> np(2, 10);
    std::uniform_int_distribution<int> dim(1, 2);
    AdelicParams params{1, 1.0};
    QuadratureSpec spec;
    spec.tolerance = 1e-8;
    spec.initial_resolution = 128;

    int done = 0;
    double worst_excess = -1;
    while (done < 100) {
        int m = dim(rng);
        std::vector<Poly> coords;
        bool any = false;
        for (int i = 0; i <= m; ++i) {
            Poly p = uni({c(rng), c(rng)});
            any = any || !p.is_zero();
            coords.push_back(p);
        }
        if (!any) continue;
        auto pt = ProjPoint::canonicalize_polys(coords);
        auto h = height(pt, params, spec);
        unsigned N = static_cast<unsigned>(np(rng));
        auto hn = height(pt.power(N), params, spec);
        double excess = std::fabs(hn.value - N * h.value) -
                        (N + 1) * (h.error_bound + hn.error_bound) - 1e-9;
        worst_excess = std::max(worst_excess, excess);
        ++done;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "100 points, worst bound excess %.2e", worst_excess);
    report(5, "power homogeneity", worst_excess <= 0, buf);
}

// ---------------------------------------------------------------- 6
namespace hz {

// int64 mirror of deg <= 2 univariate polynomials: c[0] + c[1] x + c[2] x^2
struct P3 {
    long c[3];
    bool zero() const { return !c[0] && !c[1] && !c[2]; }
    int deg() const { return c[2] ? 2 : c[1] ? 1 : c[0] ? 0 : -1; }
    long lead() const { return c[2] ? c[2] : c[1] ? c[1] : c[0]; }
};

long igcd(long a, long b) {
    a = std::labs(a);
    b = std::labs(b);
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

std::vector<long> make_primitive(std::vector<long> f) {
    while (!f.empty() && !f.back()) f.pop_back();
    if (f.empty()) return f;
    long g = 0;
    for (long x : f) g = igcd(g, x);
    if (f.back() < 0) g = -g;
    for (long& x : f) x /= g;
    return f;
}

// primitive gcd via pseudo-remainders; coefficients stay tiny at deg <= 2
std::vector<long> pgcd(std::vector<long> f, std::vector<long> g) {
    f = make_primitive(std::move(f));
    g = make_primitive(std::move(g));
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        while (f.size() >= g.size()) {
            long lf = f.back(), lg = g.back();
            std::size_t shift = f.size() - g.size();
            for (long& x : f) x *= lg;
            for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= lf * g[i];
            while (!f.empty() && !f.back()) f.pop_back();
        }
        f = make_primitive(std::move(f));
        std::swap(f, g);
    }
    return f;
}

// Is the raw tuple already in canonical form (content 1, no common
// nonconstant factor, positive leading sign on the first nonzero)?
bool canonical(const std::vector<P3>& t) {
    long content = 0;
    const P3* first = nullptr;
    for (const P3& p : t) {
        if (p.zero()) continue;
        if (!first) first = &p;
        for (long c : p.c) content = igcd(content, c);
    }
    if (!first || content != 1 || first->lead() < 0) return false;
    std::vector<long> g;
    for (const P3& p : t) {
        if (p.zero()) continue;
        std::vector<long> d(p.c, p.c + 3);
        g = g.empty() ? make_primitive(std::move(d)) : pgcd(std::move(g), std::move(d));
        if (g.size() == 1) return true;
    }
    return g.size() == 1;
}

// independent criterion on a canonical tuple
bool torsion_tuple(const std::vector<P3>& t) {
    for (const P3& p : t) {
        if (p.zero()) continue;
        if (p.deg() != 0 || std::labs(p.c[0]) != 1) return false;
    }
    return true;
}

}  // namespace hz

void criterion_6() {
    std::vector<Poly> polys;
    std::vector<hz::P3> fast;
    for (long c2 = -3; c2 <= 3; ++c2)
        for (long c1 = -3; c1 <= 3; ++c1)
            for (long c0 = -3; c0 <= 3; ++c0) {
                Poly p(1);
                if (c0) p.add_term({0}, Rat(c0));
                if (c1) p.add_term({1}, Rat(c1));
                if (c2) p.add_term({2}, Rat(c2));
                polys.push_back(p);
                fast.push_back({{c0, c1, c2}});
            }
    const std::size_t n = polys.size();
    AdelicParams params{1, 0.5};

    // P^1: every raw tuple through the library; the raw-tuple criterion
    // (all nonzero coordinates equal up to sign) is checked against
    // is_height_zero, and the canonicality filter is validated against
    // the library's own canonical form.
    long mismatches = 0, filter_errors = 0, p1 = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (polys[i].is_zero() && polys[j].is_zero()) continue;
            auto pt = ProjPoint::canonicalize_polys({polys[i], polys[j]});
            bool lib = is_height_zero(pt, params);
            bool raw = polys[i].is_zero() || polys[j].is_zero() || polys[i] == polys[j] ||
                       polys[i] == -polys[j];
            if (lib != raw) ++mismatches;
            bool fixed = pt.coords()[0] == polys[i] && pt.coords()[1] == polys[j];
            if (hz::canonical({fast[i], fast[j]}) != fixed) ++filter_errors;
            ++p1;
        }

    // P^2: every canonical tuple through the library against the
    // {0,+-1}-tuple criterion.
    long p2 = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<hz::P3> t = {fast[i], fast[j], fast[k]};
                if (!hz::canonical(t)) continue;
                auto pt = ProjPoint::canonicalize_polys({polys[i], polys[j], polys[k]});
                if (is_height_zero(pt, params) != hz::torsion_tuple(t)) ++mismatches;
                ++p2;
            }

    char buf[192];
    std::snprintf(buf, sizeof buf,
                  "%ld P1 tuples, %ld canonical P2 tuples, %ld mismatches, %ld filter errors",
                  p1, p2, mismatches, filter_errors);
    report(6, "height zero <=> torsion", mismatches == 0 && filter_errors == 0, buf);
}

// ---------------------------------------------------------------- 7
void criterion_7() {
    auto as_set = [](const std::vector<Poly>& v) {
        std::set<std::string> s;
        for (const Poly& p : v) s.insert(format_poly(p));
        return s;
    };
    auto d1c0 = as_set(northcott_enumerate(1, 0.0));
    std::set<std::string> expected = {"1", "x", "x + 1", "x - 1"};
    bool exact = d1c0 == expected;

    bool monotone = true;
    std::set<std::string> prev;
    for (double C : {0.0, std::log(2.0), std::log(3.0)}) {
        auto s = as_set(northcott_enumerate(1, C));
        monotone = monotone && std::includes(s.begin(), s.end(), prev.begin(), prev.end());
        prev = s;
    }
    prev.clear();
    for (int d : {0, 1, 2}) {
        auto s = as_set(northcott_enumerate(d, 0.0));
        monotone = monotone && std::includes(s.begin(), s.end(), prev.begin(), prev.end());
        prev = s;
    }

    // brute-force re-verification of the largest listing
    double C = std::log(3.0);
    auto listed = northcott_enumerate(2, C);
    bool verified = true;
    for (const Poly& p : listed)
        if (p.total_degree() >= 1 && jensen_oracle(p) > C + 1e-6) verified = false;
    // and completeness over the coefficient box, with the oracle
    long box_count = 0;
    for (long a2 = 0; a2 <= 3; ++a2)
        for (long a1 = (a2 ? -6 : 0); a1 <= 6; ++a1)
            for (long a0 = (a2 || a1 ? -3 : 1); a0 <= 3; ++a0) {
                Poly p = uni({a0, a1, a2});
                if (p.is_zero()) continue;
                if (p.lex_lead().second < 0) continue;
                double mu = p.total_degree() == 0
                                ? std::log(std::fabs(to_double(p.constant_value())))
                                : jensen_oracle(p);
                // 1e-7 absorbs the oracle's accuracy loss on repeated
                // roots (e.g. 3(x-1)^2); integer-polynomial Mahler
                // measures near 3 are otherwise isolated
                if (mu <= C + 1e-7) ++box_count;
            }
    bool complete = box_count == static_cast<long>(listed.size());

    char buf[128];
    std::snprintf(buf, sizeof buf, "d=1 C=0 exact set; d=2 C=log3: %zu listed, %ld by oracle",
                  listed.size(), box_count);
    report(7, "Northcott enumeration", exact && monotone && verified && complete, buf);
}

// ---------------------------------------------------------------- 8
void criterion_8() {
    bool ok = true;
    double worst = 0;
    for (double lambda : {0.5, 2.0, std::log(2.0)}) {
        auto r = min_positive_height({1, lambda}, 2, 4, 1);
        double expect = std::min(lambda, std::log(2.0));
        worst = std::max(worst, std::fabs(r.value - expect));
        ok = ok && std::fabs(r.value - expect) <= 1e-9;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda in {0.5, 2, log 2}, worst |err| = %.2e", worst);
    report(8, "minimal positive height", ok, buf);
}

// ---------------------------------------------------------------- 9
void criterion_9() {
    DensitySpec ident;
    ident.p0 = 5;
    ident.rule = DensitySpec::Rule::identity;
    auto t0 = std::chrono::steady_clock::now();
    auto d = density_simulate(ident, 100000);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // frozen from an independent sieve oracle (the sieve's complement
    // retains every prime q with q^2 > m, so the ratio is far from 1)
    bool sieve_ok = d.count == 67745 && dt < 10.0;

    DensitySpec unit;
    unit.p0 = 5;
    auto cert = density_certificate(unit, 0.5);
    bool cert_ok = cert.primes == std::vector<long>{5, 7, 11, 13, 17, 19, 23} &&
                   Rat(cert.phi_Q, cert.Q) <= Rat(1, 2);

    // every spec whose threshold fits under 10^7 must verify >= 1 - 3 eps
    bool verified_ok = true;
    struct Case { long p0; double eps; };
    for (auto [p0, eps] : {Case{2, 0.25}, Case{2, 0.4}, Case{3, 0.5}, Case{5, 0.9}}) {
        DensitySpec s;
        s.p0 = p0;
        auto c = density_certificate(s, eps);
        if (c.m_threshold <= 10'000'000)
            verified_ok = verified_ok && c.verified_at_scale && c.ratio_ok;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "sieve 10^5: %lld (%.2f s); eps=0.5 primes ok=%d", d.count,
                  dt, int(cert_ok));
    report(9, "density lemma", sieve_ok && cert_ok && verified_ok, buf);
}

// ---------------------------------------------------------------- 10
void criterion_10() {
    auto sols = roots_of_unity_solutions(7, 6);
    auto has = [&](const Rat& a, const Rat& b) {
        return std::find(sols.begin(), sols.end(),
                         std::make_pair(TorsionAngle::angle(a), TorsionAngle::angle(b))) !=
               sols.end();
    };
    bool sixth = has(Rat(1, 6), Rat(5, 6)) && has(Rat(5, 6), Rat(1, 6));

    bool none = true;
    for (long N : {6, 2, 3, 4, 12, 8, 9, 10}) {
        for (const auto& [a, b] : roots_of_unity_solutions(N, 6))
            if (!a.is_zero_element && !b.is_zero_element) none = false;
    }

    long checked = 0, wrong = 0;
    for (long M = 1; M <= 24; ++M)
        for (long N = 1; N <= 50; ++N) {
            long brute = 0;
            auto e = [&](bool zero, long k) -> std::complex<double> {
                if (zero) return 0;
                double th = 2.0 * std::numbers::pi * N * k / M;
                return {std::cos(th), std::sin(th)};
            };
            for (int z1 = 0; z1 < 2; ++z1)
                for (int z2 = 0; z2 < 2; ++z2)
                    for (long k1 = 0; k1 < (z1 ? 1 : M); ++k1)
                        for (long k2 = 0; k2 < (z2 ? 1 : M); ++k2)
                            if (std::abs(e(z1, k1) + e(z2, k2) - 1.0) < 1e-12) ++brute;
            if (static_cast<long>(roots_of_unity_solutions(N, M).size()) != brute) ++wrong;
            ++checked;
        }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%ld (N, M) pairs brute-forced, %ld wrong", checked, wrong);
    report(10, "root-of-unity arithmetic", sixth && none && wrong == 0, buf);
}

// ---------------------------------------------------------------- 11
void criterion_11() {
    std::mt19937 rng(7171);
    std::uniform_int_distribution<int> nv(1, 3);
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<long> c(-100, 100);
    int failures_rt = 0, done = 0;
    while (done < 1000) {
        int n = nv(rng);
        auto rand_poly = [&](int max_deg) {
            std::uniform_int_distribution<int> deg(0, max_deg);
            Poly p(n);
            int k = nterms(rng);
            for (int t = 0; t < k; ++t) {
                Monomial m(n, 0);
                int budget = deg(rng);
                for (int v = 0; v < n && budget > 0; ++v) {
                    std::uniform_int_distribution<int> e(0, budget);
                    m[v] = e(rng);
                    budget -= m[v];
                }
                long cv = c(rng);
                if (cv) p.add_term(m, p.coeff(m) + Rat(cv));
            }
            return p;
        };
        Poly num = rand_poly(5), den = rand_poly(n == 1 ? 5 : 2);
        if (den.is_zero()) continue;
        RationalFunction f = RationalFunction::from_fraction(num, den);
        try {
            if (parse_expr(format_expr(f), n) != f) ++failures_rt;
        } catch (...) {
            ++failures_rt;
        }
        ++done;
    }

    const char* malformed[] = {"",       "x +",    "* x",   "x ^",  "x ^ -1", "(x + 1",
                               "x + $",  "x2",     "3..",   ")x(",  "x / /",  "x ^ y",
                               "1 2",    "q + 1",  "x^(2)"};
    int positioned = 0, total = 0;
    for (const char* s : malformed) {
        ++total;
        try {
            parse_expr(s, 1);
        } catch (const parse_error& e) {
            if (e.offset() <= std::string(s).size()) ++positioned;
        } catch (const poly_error&) {
            // domain errors are acceptable only for well-formed input
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "1000 round trips, %d failures; %d/%d positioned errors",
                  failures_rt, positioned, total);
    report(11, "parser round trip", failures_rt == 0 && positioned == total, buf);
}

// ---------------------------------------------------------------- 12
void criterion_12() {
    std::vector<std::vector<std::string>> suite = {
        {"mahler", "-n", "2", "--json", "1 + x + y"},
        {"mahler", "-n", "2", "--json", "x - y"},
        {"height", "-n", "2", "--lambda", "1", "--json", "1 - x*y", "x + y", "2"},
        {"pf-check", "-n", "2", "--json", "--scalar", "3", "--factor", "1 + x + y"},
        {"mahler", "-n", "3", "--method", "qmc", "--json", "1 + x + y + z"},
    };
    bool ok = true;
    for (const auto& base : suite) {
        std::string outs[2];
        int w = 0;
        for (const char* workers : {"1", "8"}) {
            auto args = base;
            args.push_back("--workers");
            args.push_back(workers);
            std::ostringstream out, err;
            if (cli_run(args, out, err) != 0) ok = false;
            outs[w++] = out.str();
        }
        ok = ok && !outs[0].empty() && outs[0] == outs[1];
    }
    report(12, "worker determinism", ok,
           std::to_string(suite.size()) + " JSON commands byte-identical for 1 vs 8 workers");
}

}  // namespace

int main() {
    now_seconds();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%s: %d of 12 criteria failed (%.1f s total)\n",
                failures ? "FAILURE" : "SUCCESS", failures, now_seconds());
    return failures ? 1 : 0;
}
