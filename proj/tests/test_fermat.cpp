#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "sigma/fermat.hpp"

using namespace sigma;

namespace {

RationalFunction rq(long num, long den = 1) {
    return RationalFunction::from_rational(Rat(num, den), 1);
}

RationalFunction rx() { return RationalFunction::from_poly(Poly::variable(0, 1)); }

}  // namespace

TEST_CASE("fermat point checks") {
    auto a = fermat_check_point(rq(1), rq(0), 5);
    CHECK(a.on_curve);
    CHECK(a.torsion_solution);

    auto b = fermat_check_point(rq(3, 5), rq(4, 5), 2);
    CHECK(b.on_curve);
    CHECK_FALSE(b.torsion_solution);

    auto c = fermat_check_point(rx(), rq(1) - rx(), 1);
    CHECK(c.on_curve);
    CHECK_FALSE(c.torsion_solution);

    auto d = fermat_check_point(rq(1), rq(1), 3);
    CHECK_FALSE(d.on_curve);
}

TEST_CASE("fermat property over point sets") {
    AdelicParams params{1, 1.0};
    std::vector<std::array<RationalFunction, 3>> good = {
        {rq(1), rq(0), rq(1)},
        {rq(0), rq(1), rq(1)},
    };
    auto r1 = fermat_property_over_points(good, 3, params);
    CHECK(r1.holds);
    CHECK(r1.witnesses.empty());

    std::vector<std::array<RationalFunction, 3>> affine_bad = {
        {rx(), rq(1) - rx(), rq(1)},
    };
    auto r2 = fermat_property_over_points(affine_bad, 1, params);
    CHECK_FALSE(r2.holds);
    REQUIRE(r2.witnesses.size() == 1);
    CHECK(r2.witnesses[0] == 0);

    // (1 : -1 : 0) with N odd: the zeta = -1 case
    std::vector<std::array<RationalFunction, 3>> inf = {{rq(1), rq(-1), rq(0)}};
    auto r3 = fermat_property_over_points(inf, 3, params);
    CHECK(r3.holds);

    std::vector<std::array<RationalFunction, 3>> off = {{rq(1), rq(1), rq(1)}};
    CHECK_THROWS_AS(fermat_property_over_points(off, 3, params), poly_error);
}

TEST_CASE("roots of unity solutions") {
    auto sols = roots_of_unity_solutions(7, 6);
    auto has = [&](const TorsionAngle& a, const TorsionAngle& b) {
        return std::find(sols.begin(), sols.end(), std::make_pair(a, b)) != sols.end();
    };
    CHECK(has(TorsionAngle::angle(Rat(1, 6)), TorsionAngle::angle(Rat(5, 6))));
    CHECK(has(TorsionAngle::angle(Rat(5, 6)), TorsionAngle::angle(Rat(1, 6))));

    // K0 case M = 2: only zero-coordinate solutions survive
    auto k0 = roots_of_unity_solutions(3, 2);
    REQUIRE(k0.size() == 2);
    CHECK(has(TorsionAngle::zero(), TorsionAngle::zero()) == false);
    CHECK(k0[0] == std::make_pair(TorsionAngle::zero(), TorsionAngle::angle(Rat(0))));
    CHECK(k0[1] == std::make_pair(TorsionAngle::angle(Rat(0)), TorsionAngle::zero()));

    // N = 6, M = 6: no xy != 0 solutions
    auto n6 = roots_of_unity_solutions(6, 6);
    for (const auto& [a, b] : n6) CHECK((a.is_zero_element || b.is_zero_element));
}

TEST_CASE("roots of unity vs brute force over the group") {
    for (long M = 1; M <= 24; ++M)
        for (long N = 1; N <= 50; ++N) {
            auto sols = roots_of_unity_solutions(N, M);
            long brute = 0;
            auto e = [&](bool zero, long k) -> std::complex<double> {
                if (zero) return 0;
                double th = 2.0 * M_PI * N * k / M;
                return {std::cos(th), std::sin(th)};
            };
            for (int z1 = 0; z1 < 2; ++z1)
                for (int z2 = 0; z2 < 2; ++z2)
                    for (long k1 = 0; k1 < (z1 ? 1 : M); ++k1)
                        for (long k2 = 0; k2 < (z2 ? 1 : M); ++k2)
                            if (std::abs(e(z1, k1) + e(z2, k2) - 1.0) < 1e-12) ++brute;
            CHECK(static_cast<long>(sols.size()) == brute);
        }
}

TEST_CASE("multiple bound") {
    auto b1 = multiple_bound({0, 1});
    CHECK(b1.m0 == 1);
    CHECK(b1.m0_tight == 1);

    auto b2 = multiple_bound({2, 0.5});
    CHECK(b2.m0 == 55);
    CHECK(b2.m0_tight == 5);

    auto b3 = multiple_bound({std::log(2.0), std::log(2.0)});
    CHECK(b3.m0 == 3);
    CHECK(b3.m0_tight == 2);

    CHECK_THROWS_AS(multiple_bound({1, 0}), poly_error);
    CHECK_THROWS_AS(multiple_bound({1, -2}), poly_error);

    // guarantee: m >= m0_tight implies m * a > H strictly
    for (double H : {0.0, 0.3, 2.0, 5.7})
        for (double a : {0.2, 1.0, 3.0}) {
            auto b = multiple_bound({H, a});
            double m = b.m0_tight.convert_to<double>();
            CHECK(m * a > H);
            CHECK(b.m0 >= b.m0_tight);
        }
}

TEST_CASE("minimal positive height") {
    for (double lambda : {0.5, 2.0, std::log(2.0)}) {
        AdelicParams params{1, lambda};
        auto r = min_positive_height(params, 2, 4, 1);
        CHECK(r.value == doctest::Approx(std::min(lambda, std::log(2.0))).epsilon(1e-9));
    }
    AdelicParams params{1, 1.0};
    CHECK_THROWS_AS(min_positive_height(params, 6, 50, 3, 1000), poly_error);
    CHECK_THROWS_AS(min_positive_height({1, 0.0}, 1, 1, 1), poly_error);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(5005) == 2880);
    CHECK(euler_phi(Int("37182145")) == Int(4) * 6 * 10 * 12 * 16 * 18 * 22);
}

TEST_CASE("density simulation") {
    DensitySpec unit;
    unit.p0 = 5;
    unit.rule = DensitySpec::Rule::constant;
    unit.const_m = 1;
    auto d30 = density_simulate(unit, 30);
    // brute force the same count
    long long brute = 0;
    for (long n = 1; n <= 30; ++n) {
        bool in = false;
        for (long p = 5; p <= n; ++p) {
            bool prime = p >= 2;
            for (long q = 2; q * q <= p; ++q)
                if (p % q == 0) prime = false;
            if (prime && n % p == 0) in = true;
        }
        if (in) ++brute;
    }
    CHECK(d30.count == brute);

    DensitySpec ident;
    ident.p0 = 5;
    ident.rule = DensitySpec::Rule::identity;
    CHECK(density_simulate(ident, 10).count == 0);
    CHECK(density_simulate(ident, 25).count == 1);  // 25 = 5 * 5

    // frozen from an independent sieve oracle; the complement holds all
    // primes q < m (q * q > m) plus smooth leftovers, so ratio converges
    // to 1 only very slowly
    auto big = density_simulate(ident, 100000);
    CHECK(big.count == 67745);
    CHECK(big.ratio == doctest::Approx(0.67745).epsilon(1e-12));

    // monotone counts, ratio nondecreasing past 25 on checkpoints
    long long prev_count = 0;
    double prev_ratio = 0;
    for (long long m : {25LL, 100LL, 1000LL, 10000LL, 100000LL}) {
        auto d = density_simulate(ident, m);
        CHECK(d.count >= prev_count);
        CHECK(d.ratio >= prev_ratio - 1e-12);
        prev_count = d.count;
        prev_ratio = d.ratio;
    }

    CHECK_THROWS_AS(density_simulate(unit, 1LL << 40), poly_error);
}

TEST_CASE("density certificate") {
    DensitySpec unit;
    unit.p0 = 5;
    unit.rule = DensitySpec::Rule::constant;

    auto cert = density_certificate(unit, 0.5);
    CHECK(cert.primes == std::vector<long>{5, 7, 11, 13, 17, 19, 23});
    CHECK(cert.Q == Int("37182145"));
    CHECK(cert.phi_Q == euler_phi(Int("37182145")));
    CHECK(Rat(cert.phi_Q, cert.Q) <= Rat(0.5));
    CHECK(cert.n0 == 23);
    CHECK_FALSE(cert.verified_at_scale);  // Q / eps is above the cap

    // small threshold case gets simulated and passes
    DensitySpec low;
    low.p0 = 2;
    auto c2 = density_certificate(low, 0.25);
    CHECK(c2.verified_at_scale);
    CHECK(c2.ratio_ok);

    CHECK_THROWS_AS(density_certificate(unit, 0.0), poly_error);
    CHECK_THROWS_AS(density_certificate(unit, 1.0), poly_error);
}

TEST_CASE("theorem pipeline") {
    HeightProfile zero;  // H_p = 0 -> m_p = 1
    auto r = theorem_pipeline(zero, 1.0, 0.5, 10000);
    DensitySpec unit;
    unit.p0 = 5;
    auto direct = density_simulate(unit, 10000);
    CHECK(r.density.count == direct.count);

    HeightProfile logp;
    logp.kind = HeightProfile::Kind::log_p;
    auto r2 = theorem_pipeline(logp, std::log(2.0), 0.5, 20000);
    CHECK(r2.spec.m_of(5) == static_cast<long>(std::ceil(std::pow(5.0, 1.0 / std::log(2.0)))));
    CHECK(r2.density.ratio < 1.0);
    auto r2b = theorem_pipeline(logp, std::log(2.0), 0.5, 100000);
    CHECK(r2b.density.ratio >= r2.density.ratio);

    CHECK_THROWS_AS(theorem_pipeline(zero, 0.0, 0.5, 100), poly_error);
}
