#ifndef SIGMA_ADELIC_HPP
#define SIGMA_ADELIC_HPP

#include <optional>
#include <variant>
#include <vector>

#include "sigma/mahler.hpp"
#include "sigma/ratfunc.hpp"

namespace sigma {

struct AdelicParams {
    int n = 1;          // number of variables
    double lambda = 1;  // weight of the degree term; > 0 for Northcott
};

// A place of Q(X1..Xn): a prime divisor, a rational prime, or a point
// of the unit torus parameterized by [0,1]^n.
struct TorusPlace {
    std::vector<double> t;
};
using Place = std::variant<PrimeDivisor, Int, TorusPlace>;

// Point of P^m(Q(X1..Xn)) in canonical form: integer polynomial
// coordinates, collective content 1, no common nonconstant factor,
// first nonzero coordinate with positive lex-leading coefficient.
class ProjPoint {
public:
    // Canonicalizes arbitrary rational-function coordinates.
    static ProjPoint canonicalize(std::vector<RationalFunction> coords);
    static ProjPoint canonicalize_polys(std::vector<Poly> coords);

    const std::vector<Poly>& coords() const { return coords_; }
    int nvars() const { return coords_[0].nvars(); }
    int dimension() const { return static_cast<int>(coords_.size()) - 1; }
    int max_degree() const;

    // Coordinatewise N-th power (stays canonical for canonical input).
    ProjPoint power(unsigned N) const;

    bool operator==(const ProjPoint&) const = default;

private:
    explicit ProjPoint(std::vector<Poly> coords) : coords_(std::move(coords)) {}
    std::vector<Poly> coords_;
};

// c_omega = lambda deg(P_omega) + mu(p_omega): the log of the base of
// the divisorial absolute value.
MahlerEstimate place_constant(const PrimeDivisor& omega, const AdelicParams& params,
                              const QuadratureSpec& spec = {});

// |f|_omega at any of the three kinds of places.
double absolute_value(const RationalFunction& f, const Place& place,
                      const AdelicParams& params, const QuadratureSpec& spec = {});

// Height via the closed formula: lambda max_i deg + torus integral of
// log max_i |x_i|.
MahlerEstimate height(const ProjPoint& point, const AdelicParams& params,
                      const QuadratureSpec& spec = {});

// Exact height-zero test (lambda > 0): canonical tuple of degree 0
// with all coordinates in {-1, 0, 1}.
bool is_height_zero(const ProjPoint& point, const AdelicParams& params);

// Scalar carrying raw coordinates to a {0,+-1} tuple, when one exists.
std::optional<RationalFunction> torsion_witness(const std::vector<RationalFunction>& raw,
                                                const AdelicParams& params);

// f = scalar * prod factors[i] ^ exponents[i], the UFD decomposition
// with asserted-irreducible pairwise non-associate factors.
struct FactoredElement {
    Rat scalar;
    std::vector<std::pair<PrimitivePoly, long>> factors;

    RationalFunction assemble() const;
    void validate() const;  // throws on zero scalar / associate factors
};

// Sum of log|f|_omega over all places; zero for a correct
// implementation, up to the combined quadrature error.
MahlerEstimate product_formula_residual(const FactoredElement& elem, const AdelicParams& params,
                                        const QuadratureSpec& spec = {});

}  // namespace sigma

#endif
