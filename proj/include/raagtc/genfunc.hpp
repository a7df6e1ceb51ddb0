#pragma once

#include <string>
#include <vector>

#include "raagtc/graph.hpp"

namespace raagtc {

// Integer polynomial in canonical form: coeffs[i] is the coefficient of
// x^i, the highest stored coefficient is nonzero, the zero polynomial is
// the empty list. Arithmetic is exact; 64-bit overflow throws
// std::overflow_error instead of wrapping.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coeffs);

    static IntPolynomial constant(long long c);
    static IntPolynomial monomial(long long c, int degree);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    long long coeff(int i) const;
    const std::vector<long long>& coeffs() const { return coeffs_; }

    long long eval(long long x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    bool divisible_by_one_minus_x() const { return is_zero() || eval(1) == 0; }
    // Precondition: divisible_by_one_minus_x().
    IntPolynomial divide_by_one_minus_x() const;

    // Ascending terms, e.g. "1 - 2x + x^2"; "0" for the zero polynomial.
    std::string to_text(const std::string& var = "x") const;
    std::string to_latex(const std::string& var = "x") const;

private:
    void trim();
    std::vector<long long> coeffs_;
};

// numerator / (1-x)^denom_exponent. Canonical: the numerator is not
// divisible by (1-x) unless zero; common (1-x) factors are cancelled on
// construction.
struct RationalGF {
    IntPolynomial numerator;
    int denom_exponent = 0;

    bool operator==(const RationalGF& o) const {
        return numerator == o.numerator && denom_exponent == o.denom_exponent;
    }
};

RationalGF make_rational_gf(IntPolynomial numerator, int denom_exponent);

// First k+1 series coefficients of f, exact.
std::vector<long long> expand_series(const RationalGF& f, long long k);

// P_Gamma(x) with sum_{r>=1} z_{r+1} x^r = P_Gamma(x) / (1-x)^2, computed
// from the finite z-prefix and the tail recurrence z_r = z_a + (r-a)c at the
// anchor a = max(n, 2). Always satisfies P(1) = c(Gamma). The 0-vertex graph
// yields the zero polynomial.
IntPolynomial generating_polynomial(const Graph& g);

enum class CatalogSpace {
    higman,
    sphere_odd,
    sphere_even,
    free_group, // rank n >= 2
    torus,      // Z^n, n >= 1
    unitary,    // U(n), n >= 1
    surface,    // genus >= 2
    symplectic, // closed simply connected, half-dimension n >= 1
    raag,       // defining graph required
};

// Throws argument_error for names outside the catalog.
CatalogSpace parse_catalog_space(const std::string& name);
const char* catalog_space_name(CatalogSpace space);

struct CatalogEntry {
    RationalGF gf;
    // Factored display of the numerator as the closed forms are usually
    // written, e.g. "2x(2-x)"; coefficients in gf are the canonical source.
    std::string display_numerator;
};

// Closed-form TC-generating functions. param is the rank / dimension /
// genus where applicable; graph is required for raag. Parameters outside
// each entry's validity range throw argument_error.
CatalogEntry catalog_genfunc(CatalogSpace space, long long param = 0,
                             const Graph* graph = nullptr);

} // namespace raagtc
