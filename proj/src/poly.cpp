#include "sigma/poly.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

namespace sigma {

Poly::Poly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw poly_error("Poly: need at least one variable");
}

Poly Poly::constant(const Rat& c, int nvars) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(int var, int nvars) {
    if (var < 0 || var >= nvars) throw poly_error("Poly::variable: index out of range");
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[var] = 1;
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

Poly Poly::term(Monomial m, const Rat& c, int nvars) {
    if (static_cast<int>(m.size()) != nvars) throw poly_error("Poly::term: bad monomial length");
    for (int e : m)
        if (e < 0) throw poly_error("Poly::term: negative exponent");
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw poly_error("constant_value: polynomial is not constant");
    return terms_.begin()->second;
}

bool Poly::is_integer() const {
    for (const auto& [m, c] : terms_)
        if (rat_den(c) != 1) return false;
    return true;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (static_cast<int>(m.size()) != nvars_) throw poly_error("add_term: bad monomial length");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::pair<Monomial, Rat> Poly::lex_lead() const {
    if (terms_.empty()) throw poly_error("lex_lead: zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

void Poly::check_vars(const Poly& other) const {
    if (nvars_ != other.nvars_) throw poly_error("mismatched number of variables");
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_vars(b);
    Poly r(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly operator*(const Rat& c, const Poly& a) {
    Poly r(a.nvars());
    if (c == 0) return r;
    for (const auto& [m, k] : a.terms()) r.add_term(m, c * k);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(1, nvars_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    a.check_vars(b);
    if (b.is_zero()) throw poly_error("exact_div: division by zero polynomial");
    Poly q(a.nvars_);
    Poly r = a;
    auto [mb, cb] = b.lex_lead();
    while (!r.is_zero()) {
        auto [mr, cr] = r.lex_lead();
        Monomial m(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) {
            m[i] = mr[i] - mb[i];
            if (m[i] < 0) throw poly_error("exact_div: division not exact");
        }
        Poly t = Poly::term(m, cr / cb, a.nvars_);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly Poly::substitute(std::span<const Poly> values) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw poly_error("substitute: wrong number of values");
    int out_vars = values.empty() ? 1 : values[0].nvars();
    Poly r(out_vars);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(c, out_vars);
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) t *= values[i].pow(static_cast<unsigned>(m[i]));
        r += t;
    }
    return r;
}

Rat poly_content(const Poly& f) {
    if (f.is_zero()) throw poly_error("poly_content: zero polynomial");
    Int den_lcm = 1;
    for (const auto& [m, c] : f.terms()) den_lcm = int_lcm(den_lcm, rat_den(c));
    Int num_gcd = 0;
    for (const auto& [m, c] : f.terms())
        num_gcd = int_gcd(num_gcd, rat_num(c) * (den_lcm / rat_den(c)));
    Rat content(num_gcd, den_lcm);
    if (f.lex_lead().second < 0) content = -content;
    return content;
}

ContentSplit content_primitive(const Poly& f) {
    Rat content = poly_content(f);
    Poly prim = content == 1 ? f : Rat(1) / content * f;
    return {content, prim};
}

Poly primitive_part(const Poly& f) { return content_primitive(f).primitive; }

namespace {

// Coefficient of x_var^k, as a polynomial in the same variable set.
Poly coeff_in(const Poly& f, int var, int k) {
    Poly r(f.nvars());
    for (const auto& [m, c] : f.terms())
        if (m[var] == k) {
            Monomial mm = m;
            mm[var] = 0;
            r.add_term(mm, c);
        }
    return r;
}

// Content of f with respect to x_var: the gcd of its coefficients.
Poly content_in(const Poly& f, int var) {
    Poly g(f.nvars());
    int d = f.degree_in(var);
    for (int k = 0; k <= d; ++k) {
        Poly c = coeff_in(f, var, k);
        if (!c.is_zero()) g = g.is_zero() ? primitive_part(c) : poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// Pseudo-remainder of f by g with respect to x_var.
Poly pseudo_rem(Poly f, const Poly& g, int var) {
    int dg = g.degree_in(var);
    Poly lg = coeff_in(g, var, dg);
    while (!f.is_zero() && f.degree_in(var) >= dg) {
        int df = f.degree_in(var);
        Poly lf = coeff_in(f, var, df);
        Poly shift = Poly::variable(var, f.nvars()).pow(static_cast<unsigned>(df - dg));
        f = lg * f - lf * shift * g;
    }
    return f;
}

// Dense integer coefficients, low degree first, content-free, positive
// leading coefficient.
std::vector<Int> dense_primitive(const Poly& f) {
    std::vector<Int> out(static_cast<std::size_t>(f.degree_in(0)) + 1, Int(0));
    Int den_lcm = 1;
    for (const auto& [m, c] : f.terms()) den_lcm = int_lcm(den_lcm, rat_den(c));
    Int g = 0;
    for (const auto& [m, c] : f.terms()) {
        out[m[0]] = rat_num(c) * (den_lcm / rat_den(c));
        g = int_gcd(g, out[m[0]]);
    }
    if (out.back() < 0) g = -g;
    if (g != 1)
        for (Int& x : out) x /= g;
    return out;
}

void dense_make_primitive(std::vector<Int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.empty()) return;
    Int g = 0;
    for (const Int& x : f) g = int_gcd(g, x);
    if (f.back() < 0) g = -g;
    if (g != 1)
        for (Int& x : f) x /= g;
}

// Primitive Euclidean remainder sequence on dense univariate vectors.
Poly univariate_gcd(const Poly& a, const Poly& b) {
    std::vector<Int> f = dense_primitive(a), g = dense_primitive(b);
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        // pseudo-remainder of f by g
        while (f.size() >= g.size()) {
            Int lf = f.back();
            const Int& lg = g.back();
            std::size_t shift = f.size() - g.size();
            for (std::size_t i = 0; i < f.size(); ++i) f[i] *= lg;
            for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= lf * g[i];
            while (!f.empty() && f.back() == 0) f.pop_back();
        }
        dense_make_primitive(f);
        std::swap(f, g);
    }
    Poly r(1);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) r.add_term({static_cast<int>(i)}, Rat(f[i]));
    return r;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw poly_error("poly_gcd: both inputs zero");
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);

    // Pick the highest variable actually present.
    int var = -1;
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) { var = v; break; }
    if (var < 0) return Poly::constant(1, a.nvars());  // both constant
    if (a.nvars() == 1) return univariate_gcd(a, b);

    Poly f = primitive_part(a), g = primitive_part(b);
    if (f.degree_in(var) == 0 || g.degree_in(var) == 0) {
        // One input is free of x_var: the gcd divides its coefficients.
        const Poly& free = f.degree_in(var) == 0 ? f : g;
        const Poly& other = f.degree_in(var) == 0 ? g : f;
        return poly_gcd(free, content_in(other, var));
    }

    Poly cf = content_in(f, var), cg = content_in(g, var);
    Poly pf = Poly::exact_div(f, cf), pg = Poly::exact_div(g, cg);
    if (pf.degree_in(var) < pg.degree_in(var)) std::swap(pf, pg);

    // Primitive pseudo-remainder sequence in x_var.
    while (true) {
        Poly r = pseudo_rem(pf, pg, var);
        if (r.is_zero()) break;
        pf = pg;
        pg = Poly::exact_div(r, content_in(r, var));
    }
    return primitive_part(poly_gcd(cf, cg) * pg);
}

Poly multi_gcd(std::span<const Poly> polys) {
    if (polys.empty()) throw poly_error("multi_gcd: empty input");
    Poly g(polys[0].nvars());
    for (const Poly& p : polys) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? primitive_part(p) : poly_gcd(g, p);
        if (g.is_constant()) break;
    }
    if (g.is_zero()) throw poly_error("multi_gcd: all inputs zero");
    return g;
}

Poly homogenize(const Poly& f, int total_deg) {
    if (f.is_zero()) throw poly_error("homogenize: zero polynomial");
    if (total_deg < f.total_degree()) throw poly_error("homogenize: degree below deg(f)");
    Poly r(f.nvars() + 1);
    for (const auto& [m, c] : f.terms()) {
        int s = 0;
        for (int e : m) s += e;
        Monomial mm(f.nvars() + 1);
        mm[0] = total_deg - s;
        std::copy(m.begin(), m.end(), mm.begin() + 1);
        r.add_term(mm, c);
    }
    return r;
}

bool is_homogeneous(const Poly& P) {
    if (P.is_zero()) return true;
    int d = -1;
    for (const auto& [m, c] : P.terms()) {
        int s = 0;
        for (int e : m) s += e;
        if (d < 0) d = s;
        else if (s != d) return false;
    }
    return true;
}

Poly dehomogenize(const Poly& P) {
    if (!is_homogeneous(P)) throw poly_error("dehomogenize: input not homogeneous");
    if (P.nvars() < 2) throw poly_error("dehomogenize: need at least two variables");
    Poly r(P.nvars() - 1);
    for (const auto& [m, c] : P.terms())
        r.add_term(Monomial(m.begin() + 1, m.end()), c);
    return r;
}

TorusValue torus_eval(const Poly& f, std::span<const double> t) {
    if (static_cast<int>(t.size()) != f.nvars())
        throw poly_error("torus_eval: wrong point dimension");
    // Kahan-compensated accumulation of sum a_m e^{2 pi i m.t}.
    double sr = 0, cr = 0, si = 0, ci = 0;
    double err = 0;
    for (const auto& [m, c] : f.terms()) {
        double phase = 0;
        long expsum = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            phase += m[i] * t[i];
            expsum += m[i];
        }
        phase -= std::floor(phase);
        double a = to_double(c);
        std::complex<double> term = a * std::polar(1.0, 2.0 * std::numbers::pi * phase);

        double y = term.real() - cr;
        double s = sr + y;
        cr = (s - sr) - y;
        sr = s;
        y = term.imag() - ci;
        s = si + y;
        ci = (s - si) - y;
        si = s;

        // coefficient conversion + phase reduction + polar, per term
        err += std::fabs(a) * (10.0 + 7.0 * static_cast<double>(expsum)) * DBL_EPSILON;
    }
    err += 4.0 * DBL_EPSILON * (std::fabs(sr) + std::fabs(si));
    return {{sr, si}, err};
}

PrimitivePoly::PrimitivePoly(Poly p) : p_(std::move(p)) {
    if (p_.is_zero()) throw poly_error("PrimitivePoly: zero polynomial");
    if (!p_.is_integer()) throw poly_error("PrimitivePoly: non-integer coefficients");
    auto split = content_primitive(p_);
    if (split.content != 1) throw poly_error("PrimitivePoly: not primitive or bad sign");
}

std::pair<Rat, PrimitivePoly> PrimitivePoly::split(const Poly& f) {
    auto cs = content_primitive(f);
    return {cs.content, PrimitivePoly(cs.primitive)};
}

}  // namespace sigma
