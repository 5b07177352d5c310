#ifndef SIGMA_RATFUNC_HPP
#define SIGMA_RATFUNC_HPP

#include <optional>

#include "sigma/poly.hpp"

namespace sigma {

// Element of Q(X1..Xn) stored as scalar * num / den with num, den
// primitive coprime integer polynomials. The zero function has
// scalar 0 and num = den = 1.
class RationalFunction {
public:
    explicit RationalFunction(int nvars = 1);  // zero
    static RationalFunction from_poly(const Poly& p);
    static RationalFunction from_fraction(const Poly& num, const Poly& den);
    static RationalFunction from_rational(const Rat& r, int nvars);

    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return scalar_ == 0; }
    const Rat& scalar() const { return scalar_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    // scalar * num, as a polynomial (exact).
    Poly numerator_scaled() const;
    bool is_polynomial() const { return den_.is_constant(); }

    // deg(num) - deg(den); throws on zero.
    int degree() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    friend RationalFunction operator/(const RationalFunction&, const RationalFunction&);
    RationalFunction pow(int e) const;  // negative exponents invert
    bool operator==(const RationalFunction&) const = default;

private:
    Rat scalar_;
    Poly num_, den_;
};

// Prime divisor on P^n_Q: either the hyperplane at infinity {T0 = 0}
// or a divisor given by its primitive dehomogenized defining polynomial.
// Irreducibility is asserted by the caller, not verified.
class PrimeDivisor {
public:
    static PrimeDivisor infinity(int nvars);
    static PrimeDivisor from_dehomogenized(PrimitivePoly p);
    static PrimeDivisor from_homogeneous(const Poly& homogeneous);

    bool at_infinity() const { return at_infinity_; }
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    // p_omega = P_omega(1, X1..Xn); throws for the divisor at infinity.
    const PrimitivePoly& dehomogenized() const;

private:
    PrimeDivisor(bool inf, std::optional<PrimitivePoly> p, int nvars, int degree)
        : at_infinity_(inf), dehom_(std::move(p)), nvars_(nvars), degree_(degree) {}
    bool at_infinity_;
    std::optional<PrimitivePoly> dehom_;
    int nvars_;
    int degree_;
};

// Gauss norm |f|_p = max_p-adic over coefficients, num over den; by
// Gauss's lemma this reduces to the p-adic value of the scalar.
Rat gauss_norm(const RationalFunction& f, const Int& p);
Rat gauss_norm(const Poly& f, const Int& p);

// ord_omega(f): -deg for the divisor at infinity, otherwise the exact
// multiplicity of p_omega in num minus den.
long ord_at_divisor(const RationalFunction& f, const PrimeDivisor& omega);
long ord_at_divisor(const Poly& f, const PrimeDivisor& omega);

}  // namespace sigma

#endif
