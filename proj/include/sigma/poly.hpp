#ifndef SIGMA_POLY_HPP
#define SIGMA_POLY_HPP

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sigma/numbers.hpp"

namespace sigma {

// Exponent vector; length is the number of variables.
using Monomial = std::vector<int>;

class poly_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in lexicographic monomial order; no zero coefficient
// is ever stored, so equality of canonical forms is structural.
class Poly {
public:
    Poly() : nvars_(1) {}
    explicit Poly(int nvars);

    static Poly constant(const Rat& c, int nvars);
    static Poly variable(int var, int nvars);
    static Poly term(Monomial m, const Rat& c, int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    bool is_integer() const;     // all coefficients integral
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);

    // Lexicographically greatest term. Requires nonzero.
    std::pair<Monomial, Rat> lex_lead() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }
    friend Poly operator*(const Rat& c, const Poly& a);
    bool operator==(const Poly& other) const = default;

    Poly pow(unsigned e) const;

    // Throws poly_error unless b divides a exactly.
    static Poly exact_div(const Poly& a, const Poly& b);

    // Substitutes another polynomial for each variable (used by the
    // homogenization helpers and the Fermat checks).
    Poly substitute(std::span<const Poly> values) const;

private:
    int nvars_;
    std::map<Monomial, Rat> terms_;

    void check_vars(const Poly& other) const;
};

// f = content * primitive with the primitive part integer, content-free
// and its lex-greatest coefficient positive.
struct ContentSplit {
    Rat content;
    Poly primitive;
};

ContentSplit content_primitive(const Poly& f);
Poly primitive_part(const Poly& f);
// Content alone, without building the primitive part.
Rat poly_content(const Poly& f);

// GCD in primitive normalized form (content of the inputs is ignored).
// Throws on all-zero input.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly multi_gcd(std::span<const Poly> polys);

// Homogenization to degree total_deg over T0..Tn (one extra variable,
// inserted in front) and its inverse p = P(1, X1..Xn).
Poly homogenize(const Poly& f, int total_deg);
Poly dehomogenize(const Poly& P);
bool is_homogeneous(const Poly& P);

// Value of f at (e^{2 pi i t_1}, ..., e^{2 pi i t_n}) with a forward
// rounding-error bound from coefficient magnitudes and term count.
struct TorusValue {
    std::complex<double> value;
    double error_bound;
};
TorusValue torus_eval(const Poly& f, std::span<const double> t);

// Nonzero integer polynomial with content 1 and positive lex-leading
// coefficient; the canonical representative of its associate class.
class PrimitivePoly {
public:
    explicit PrimitivePoly(Poly p);  // validates the invariants
    // Splits an arbitrary nonzero polynomial as content * primitive.
    static std::pair<Rat, PrimitivePoly> split(const Poly& f);

    const Poly& poly() const { return p_; }
    int nvars() const { return p_.nvars(); }
    int degree() const { return p_.total_degree(); }
    bool operator==(const PrimitivePoly& other) const = default;

private:
    Poly p_;
};

}  // namespace sigma

#endif
