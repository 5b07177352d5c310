#include "sigma/ratfunc.hpp"

namespace sigma {

RationalFunction::RationalFunction(int nvars)
    : scalar_(0), num_(Poly::constant(1, nvars)), den_(Poly::constant(1, nvars)) {}

RationalFunction RationalFunction::from_fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw poly_error("RationalFunction: zero denominator");
    if (num.is_zero()) return RationalFunction(num.nvars());
    auto cn = content_primitive(num);
    auto cd = content_primitive(den);
    Poly n = cn.primitive, d = cd.primitive;
    Poly g = poly_gcd(n, d);
    if (!g.is_constant()) {
        n = Poly::exact_div(n, g);
        d = Poly::exact_div(d, g);
    }
    // Re-normalize signs after the division.
    auto rn = content_primitive(n);
    auto rd = content_primitive(d);
    RationalFunction f(num.nvars());
    f.scalar_ = cn.content * rn.content / (cd.content * rd.content);
    f.num_ = rn.primitive;
    f.den_ = rd.primitive;
    return f;
}

RationalFunction RationalFunction::from_poly(const Poly& p) {
    return from_fraction(p, Poly::constant(1, p.nvars()));
}

RationalFunction RationalFunction::from_rational(const Rat& r, int nvars) {
    return from_poly(Poly::constant(r, nvars));
}

Poly RationalFunction::numerator_scaled() const { return scalar_ * num_; }

int RationalFunction::degree() const {
    if (is_zero()) throw poly_error("degree: zero rational function");
    return num_.total_degree() - den_.total_degree();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.scalar_ = -r.scalar_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::from_fraction(
        a.numerator_scaled() * b.den_ + b.numerator_scaled() * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::from_fraction(a.numerator_scaled() * b.numerator_scaled(),
                                           a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw poly_error("RationalFunction: division by zero");
    return RationalFunction::from_fraction(a.numerator_scaled() * b.den_,
                                           a.den_ * b.numerator_scaled());
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return from_rational(1, nvars());
    if (is_zero()) {
        if (e < 0) throw poly_error("pow: negative power of zero");
        return *this;
    }
    unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
    RationalFunction r = from_fraction(numerator_scaled().pow(ae), den_.pow(ae));
    if (e < 0) r = from_rational(1, nvars()) / r;
    return r;
}

PrimeDivisor PrimeDivisor::infinity(int nvars) {
    return PrimeDivisor(true, std::nullopt, nvars, 1);
}

PrimeDivisor PrimeDivisor::from_dehomogenized(PrimitivePoly p) {
    if (p.poly().is_constant())
        throw poly_error("PrimeDivisor: constant defining polynomial");
    int deg = p.degree();
    int nv = p.nvars();
    return PrimeDivisor(false, std::move(p), nv, deg);
}

PrimeDivisor PrimeDivisor::from_homogeneous(const Poly& homogeneous) {
    if (!is_homogeneous(homogeneous) || homogeneous.is_zero())
        throw poly_error("PrimeDivisor: defining polynomial must be homogeneous nonzero");
    Poly prim = primitive_part(homogeneous);
    if (!prim.is_integer() || prim.is_constant())
        throw poly_error("PrimeDivisor: bad homogeneous polynomial");
    if (prim == Poly::variable(0, prim.nvars()))
        return infinity(prim.nvars() - 1);
    Poly dehom = dehomogenize(prim);
    int deg = prim.total_degree();
    if (dehom.total_degree() != deg)
        throw poly_error("PrimeDivisor: T0 divides the defining polynomial");
    return PrimeDivisor(false, PrimitivePoly(primitive_part(dehom)),
                        prim.nvars() - 1, deg);
}

const PrimitivePoly& PrimeDivisor::dehomogenized() const {
    if (at_infinity_) throw poly_error("dehomogenized: divisor at infinity");
    return *dehom_;
}

Rat gauss_norm(const RationalFunction& f, const Int& p) {
    if (f.is_zero()) throw poly_error("gauss_norm: zero input");
    if (!is_prime(p)) throw poly_error("gauss_norm: p is not prime");
    long v = padic_val(f.scalar(), p);
    Rat r;
    Int pk = boost::multiprecision::pow(p, static_cast<unsigned>(v < 0 ? -v : v));
    if (v >= 0) r = Rat(1, pk);
    else r = Rat(pk);
    return r;
}

Rat gauss_norm(const Poly& f, const Int& p) {
    if (f.is_zero()) throw poly_error("gauss_norm: zero input");
    return gauss_norm(RationalFunction::from_poly(f), p);
}

namespace {

// Multiplicity of the primitive polynomial q in f (exact division loop).
long multiplicity(Poly f, const Poly& q) {
    long k = 0;
    while (true) {
        try {
            f = Poly::exact_div(f, q);
        } catch (const poly_error&) {
            return k;
        }
        ++k;
    }
}

}  // namespace

long ord_at_divisor(const RationalFunction& f, const PrimeDivisor& omega) {
    if (f.is_zero()) throw poly_error("ord_at_divisor: zero input");
    if (f.nvars() != omega.nvars()) throw poly_error("ord_at_divisor: variable mismatch");
    if (omega.at_infinity())
        return -(f.num().total_degree() - f.den().total_degree());
    const Poly& q = omega.dehomogenized().poly();
    return multiplicity(f.num(), q) - multiplicity(f.den(), q);
}

long ord_at_divisor(const Poly& f, const PrimeDivisor& omega) {
    return ord_at_divisor(RationalFunction::from_poly(f), omega);
}

}  // namespace sigma
