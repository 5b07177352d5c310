#include "sigma/adelic.hpp"

#include <algorithm>
#include <cmath>

namespace sigma {

namespace {

std::vector<std::pair<Int, long>> factor_int(Int a) {
    if (a < 0) a = -a;
    std::vector<std::pair<Int, long>> out;
    if (a <= 1) return out;
    for (Int d = 2; d * d <= a; d += (d == 2 ? 1 : 2)) {
        if (a % d == 0) {
            long e = 0;
            while (a % d == 0) { a /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (a > 1) out.emplace_back(a, 1);
    return out;
}

Rat rat_content_gcd(const Rat& a, const Rat& b) {
    return Rat(int_gcd(rat_num(a), rat_num(b)), int_lcm(rat_den(a), rat_den(b)));
}

}  // namespace

ProjPoint ProjPoint::canonicalize_polys(std::vector<Poly> coords) {
    if (coords.empty()) throw poly_error("ProjPoint: empty coordinate tuple");
    int nv = coords[0].nvars();
    bool any = false;
    for (const Poly& c : coords) {
        if (c.nvars() != nv) throw poly_error("ProjPoint: variable mismatch");
        if (!c.is_zero()) any = true;
    }
    if (!any) throw poly_error("ProjPoint: all coordinates zero");

    // collective content
    Rat g(0);
    for (const Poly& c : coords)
        if (!c.is_zero()) g = g == 0 ? poly_content(c) : rat_content_gcd(g, poly_content(c));
    if (g < 0) g = -g;
    if (g != 1)
        for (Poly& c : coords) c = Rat(1) / g * c;

    // collective nonconstant factor
    std::vector<Poly> nonzero;
    for (const Poly& c : coords)
        if (!c.is_zero()) nonzero.push_back(c);
    Poly common = multi_gcd(nonzero);
    if (!common.is_constant())
        for (Poly& c : coords)
            if (!c.is_zero()) c = Poly::exact_div(c, common);

    // sign of the first nonzero coordinate
    for (const Poly& c : coords) {
        if (c.is_zero()) continue;
        if (c.lex_lead().second < 0)
            for (Poly& d : coords) d = -d;
        break;
    }
    return ProjPoint(std::move(coords));
}

ProjPoint ProjPoint::canonicalize(std::vector<RationalFunction> coords) {
    if (coords.empty()) throw poly_error("ProjPoint: empty coordinate tuple");
    int nv = coords[0].nvars();
    Poly den_prod = Poly::constant(1, nv);
    for (const auto& f : coords)
        if (!f.is_zero()) den_prod *= f.den();
    std::vector<Poly> polys;
    polys.reserve(coords.size());
    for (const auto& f : coords) {
        if (f.is_zero()) {
            polys.push_back(Poly(nv));
        } else {
            polys.push_back(f.scalar() * (f.num() * Poly::exact_div(den_prod, f.den())));
        }
    }
    return canonicalize_polys(std::move(polys));
}

int ProjPoint::max_degree() const {
    int d = 0;
    for (const Poly& c : coords_)
        if (!c.is_zero()) d = std::max(d, c.total_degree());
    return d;
}

ProjPoint ProjPoint::power(unsigned N) const {
    if (N == 0) throw poly_error("ProjPoint::power: N >= 1 required");
    std::vector<Poly> out;
    out.reserve(coords_.size());
    for (const Poly& c : coords_) out.push_back(c.pow(N));
    return canonicalize_polys(std::move(out));
}

MahlerEstimate place_constant(const PrimeDivisor& omega, const AdelicParams& params,
                              const QuadratureSpec& spec) {
    if (omega.at_infinity()) {
        MahlerEstimate est;  // mu(1) = 0
        est.value = params.lambda;
        return est;
    }
    MahlerEstimate mu = mahler_measure(omega.dehomogenized().poly(), spec);
    mu.value += params.lambda * omega.degree();
    return mu;
}

double absolute_value(const RationalFunction& f, const Place& place,
                      const AdelicParams& params, const QuadratureSpec& spec) {
    if (const auto* omega = std::get_if<PrimeDivisor>(&place)) {
        if (f.is_zero()) throw poly_error("absolute_value: zero element at a divisor place");
        long ord = ord_at_divisor(f, *omega);
        MahlerEstimate c = place_constant(*omega, params, spec);
        return std::exp(-static_cast<double>(ord) * c.value);
    }
    if (const auto* p = std::get_if<Int>(&place)) {
        if (f.is_zero()) return 0;
        return to_double(gauss_norm(f, *p));
    }
    const auto& t = std::get<TorusPlace>(place).t;
    if (f.is_zero()) return 0;
    auto num = torus_eval(f.num(), t);
    auto den = torus_eval(f.den(), t);
    return std::fabs(to_double(f.scalar())) * std::abs(num.value) / std::abs(den.value);
}

MahlerEstimate height(const ProjPoint& point, const AdelicParams& params,
                      const QuadratureSpec& spec) {
    if (params.lambda < 0) throw poly_error("height: lambda must be >= 0");
    std::vector<Poly> nonzero;
    for (const Poly& c : point.coords())
        if (!c.is_zero()) nonzero.push_back(c);
    MahlerEstimate est = torus_log_integral(nonzero, spec);
    est.value += params.lambda * point.max_degree();
    return est;
}

bool is_height_zero(const ProjPoint& point, const AdelicParams& params) {
    if (params.lambda <= 0)
        throw poly_error("is_height_zero: requires lambda > 0 (Northcott)");
    if (point.max_degree() > 0) return false;
    for (const Poly& c : point.coords()) {
        if (c.is_zero()) continue;
        Rat v = c.constant_value();
        if (v != 1 && v != -1) return false;
    }
    return true;
}

std::optional<RationalFunction> torsion_witness(const std::vector<RationalFunction>& raw,
                                                const AdelicParams& params) {
    ProjPoint canon = ProjPoint::canonicalize(raw);
    if (!is_height_zero(canon, params)) return std::nullopt;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].is_zero()) continue;
        return RationalFunction::from_poly(canon.coords()[i]) / raw[i];
    }
    return std::nullopt;  // unreachable: canonicalize rejects all-zero
}

RationalFunction FactoredElement::assemble() const {
    int nv = factors.empty() ? 1 : factors[0].first.poly().nvars();
    RationalFunction f = RationalFunction::from_rational(scalar, nv);
    for (const auto& [q, e] : factors)
        f = f * RationalFunction::from_poly(q.poly()).pow(static_cast<int>(e));
    return f;
}

void FactoredElement::validate() const {
    if (scalar == 0) throw poly_error("FactoredElement: zero scalar");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].first.poly().is_constant())
            throw poly_error("FactoredElement: constant factor");
        if (factors[i].second == 0) throw poly_error("FactoredElement: zero exponent");
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!poly_gcd(factors[i].first.poly(), factors[j].first.poly()).is_constant())
                throw poly_error("FactoredElement: factors share a common factor");
    }
}

MahlerEstimate product_formula_residual(const FactoredElement& elem, const AdelicParams& params,
                                        const QuadratureSpec& spec) {
    elem.validate();
    int nv = elem.factors.empty() ? params.n : elem.factors[0].first.poly().nvars();

    MahlerEstimate out;
    out.method = nv == 1 && !spec.force_grid ? MahlerMethod::jensen_exact
                                             : MahlerMethod::tensor_grid;
    double finite = 0;
    long fdeg = 0;
    for (const auto& [q, e] : elem.factors) {
        MahlerEstimate c = mahler_measure(q.poly(), spec);
        finite -= static_cast<double>(e) * (params.lambda * q.degree() + c.value);
        out.error_bound += std::fabs(static_cast<double>(e)) * c.error_bound;
        out.evaluations += c.evaluations;
        out.converged = out.converged && c.converged;
        fdeg += e * q.degree();
    }
    finite += params.lambda * static_cast<double>(fdeg);  // omega_0 term: -lambda ord_{omega_0}(f)

    for (const auto& [p, e] : factor_int(rat_num(elem.scalar)))
        finite -= static_cast<double>(e) * std::log(to_double(p));
    for (const auto& [p, e] : factor_int(rat_den(elem.scalar)))
        finite += static_cast<double>(e) * std::log(to_double(p));

    // archimedean part from the expanded product, not the factor list
    Poly num = Poly::constant(1, nv), den = Poly::constant(1, nv);
    for (const auto& [q, e] : elem.factors) {
        if (e > 0) num *= q.poly().pow(static_cast<unsigned>(e));
        else den *= q.poly().pow(static_cast<unsigned>(-e));
    }
    double arch = std::log(std::fabs(to_double(elem.scalar)));
    for (int side = 0; side < 2; ++side) {
        const Poly& f = side == 0 ? num : den;
        if (f.is_constant() && f.constant_value() == 1) continue;
        MahlerEstimate m = mahler_measure(f, spec);
        arch += (side == 0 ? 1.0 : -1.0) * m.value;
        out.error_bound += m.error_bound;
        out.evaluations += m.evaluations;
        out.converged = out.converged && m.converged;
    }

    out.value = finite + arch;
    out.error_bound += 1e-13 * (1.0 + std::fabs(finite) + std::fabs(arch));
    return out;
}

}  // namespace sigma
