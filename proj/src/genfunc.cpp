#include "raagtc/genfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "raagtc/checked_int.hpp"
#include "raagtc/cliques.hpp"
#include "raagtc/tc_solver.hpp"

namespace raagtc {

IntPolynomial::IntPolynomial(std::vector<long long> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(long long c) {
    return IntPolynomial(std::vector<long long>{c});
}

IntPolynomial IntPolynomial::monomial(long long c, int degree) {
    if (degree < 0) throw argument_error("monomial degree must be nonnegative");
    std::vector<long long> v(static_cast<size_t>(degree) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

long long IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

long long IntPolynomial::eval(long long x) const {
    long long acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = checked_add(checked_mul(acc, x), *it);
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<long long> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = checked_add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<long long> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i)
        v[i] = checked_sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial{};
    std::vector<long long> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = checked_add(v[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_by_one_minus_x() const {
    if (!divisible_by_one_minus_x())
        throw argument_error("polynomial is not divisible by (1-x)");
    if (is_zero()) return IntPolynomial{};
    // p = (1-x) q means q_i = p_i + q_{i-1}; the final prefix sum is p(1) = 0.
    std::vector<long long> q(coeffs_.size() - 1, 0);
    long long run = 0;
    for (size_t i = 0; i + 1 < coeffs_.size(); ++i) {
        run = checked_add(run, coeffs_[i]);
        q[i] = run;
    }
    return IntPolynomial(std::move(q));
}

namespace {

std::string render_poly(const std::vector<long long>& coeffs, const std::string& var,
                        bool latex) {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        long long c = coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        unsigned long long mag = c < 0 ? 0ull - static_cast<unsigned long long>(c)
                                       : static_cast<unsigned long long>(c);
        if (i == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag;
            out << var;
            if (i >= 2) {
                if (latex && i >= 10)
                    out << "^{" << i << "}";
                else
                    out << "^" << i;
            }
        }
        first = false;
    }
    return out.str();
}

} // namespace

std::string IntPolynomial::to_text(const std::string& var) const {
    return render_poly(coeffs_, var, false);
}

std::string IntPolynomial::to_latex(const std::string& var) const {
    return render_poly(coeffs_, var, true);
}

RationalGF make_rational_gf(IntPolynomial numerator, int denom_exponent) {
    if (denom_exponent < 0)
        throw argument_error("denominator exponent must be nonnegative");
    RationalGF f;
    if (numerator.is_zero()) {
        f.numerator = IntPolynomial{};
        f.denom_exponent = 0;
        return f;
    }
    while (denom_exponent > 0 && numerator.divisible_by_one_minus_x()) {
        numerator = numerator.divide_by_one_minus_x();
        --denom_exponent;
    }
    f.numerator = std::move(numerator);
    f.denom_exponent = denom_exponent;
    return f;
}

std::vector<long long> expand_series(const RationalGF& f, long long k) {
    if (k < 0) throw argument_error("series length must be nonnegative");
    std::vector<long long> a(static_cast<size_t>(k) + 1, 0);
    const auto& num = f.numerator.coeffs();
    for (size_t i = 0; i < a.size() && i < num.size(); ++i) a[i] = num[i];
    // Multiplying by 1/(1-x) is a running prefix sum.
    for (int pass = 0; pass < f.denom_exponent; ++pass)
        for (size_t i = 1; i < a.size(); ++i) a[i] = checked_add(a[i], a[i - 1]);
    return a;
}

IntPolynomial generating_polynomial(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return IntPolynomial{};
    const long long m = std::max<long long>(n, 2);
    const long long c = max_clique_size(g);
    const auto zs = z_sequence(g, m); // entries for r = 2..m, all exact

    // sum_{r>=1} z_{r+1} x^r splits at the recurrence anchor m into the
    // finite prefix plus the tail sum_{r>=m} (z_m + (r-m+1)c) x^r; clearing
    // (1-x)^2 leaves this polynomial, with value c at x = 1 by construction.
    std::vector<long long> prefix(static_cast<size_t>(m), 0);
    for (long long r = 1; r < m; ++r)
        prefix[static_cast<size_t>(r)] = zs[static_cast<size_t>(r - 1)].value;
    std::vector<long long> ramp(static_cast<size_t>(m), 0);
    for (long long r = 0; r < m; ++r) ramp[static_cast<size_t>(r)] = r + 1;

    const long long z_m = zs.back().value;
    const IntPolynomial one_minus_x(std::vector<long long>{1, -1});
    IntPolynomial p =
        one_minus_x * one_minus_x *
            (IntPolynomial(std::move(prefix)) -
             IntPolynomial::constant(c) * IntPolynomial(std::move(ramp))) +
        one_minus_x * IntPolynomial::monomial(checked_sub(z_m, checked_mul(m, c)),
                                              static_cast<int>(m)) +
        IntPolynomial::constant(c);
    return p;
}

CatalogSpace parse_catalog_space(const std::string& name) {
    if (name == "higman") return CatalogSpace::higman;
    if (name == "sphere-odd") return CatalogSpace::sphere_odd;
    if (name == "sphere-even") return CatalogSpace::sphere_even;
    if (name == "free") return CatalogSpace::free_group;
    if (name == "torus") return CatalogSpace::torus;
    if (name == "unitary") return CatalogSpace::unitary;
    if (name == "surface") return CatalogSpace::surface;
    if (name == "symplectic") return CatalogSpace::symplectic;
    if (name == "raag") return CatalogSpace::raag;
    throw argument_error(
        "unknown catalog space '" + name +
        "' (known: higman, sphere-odd, sphere-even, free, torus, unitary, "
        "surface, symplectic, raag)");
}

const char* catalog_space_name(CatalogSpace space) {
    switch (space) {
    case CatalogSpace::higman: return "higman";
    case CatalogSpace::sphere_odd: return "sphere-odd";
    case CatalogSpace::sphere_even: return "sphere-even";
    case CatalogSpace::free_group: return "free";
    case CatalogSpace::torus: return "torus";
    case CatalogSpace::unitary: return "unitary";
    case CatalogSpace::surface: return "surface";
    case CatalogSpace::symplectic: return "symplectic";
    case CatalogSpace::raag: return "raag";
    }
    return "unknown";
}

namespace {

std::string coeff_prefix(long long n) {
    return n == 1 ? std::string{} : std::to_string(n);
}

} // namespace

CatalogEntry catalog_genfunc(CatalogSpace space, long long param, const Graph* graph) {
    CatalogEntry e;
    switch (space) {
    case CatalogSpace::higman:
        e.gf = make_rational_gf(IntPolynomial(std::vector<long long>{0, 4, -2}), 2);
        e.display_numerator = "2x(2-x)";
        return e;
    case CatalogSpace::sphere_odd:
        e.gf = make_rational_gf(IntPolynomial(std::vector<long long>{0, 1}), 2);
        e.display_numerator = "x";
        return e;
    case CatalogSpace::sphere_even:
        e.gf = make_rational_gf(IntPolynomial(std::vector<long long>{0, 2, -1}), 2);
        e.display_numerator = "x(2-x)";
        return e;
    case CatalogSpace::free_group:
        if (param < 2)
            throw argument_error("free requires rank >= 2 (rank " +
                                 std::to_string(param) +
                                 " given; rank 1 is the circle, use torus 1)");
        e.gf = make_rational_gf(IntPolynomial(std::vector<long long>{0, 2, -1}), 2);
        e.display_numerator = "x(2-x)";
        return e;
    case CatalogSpace::torus:
    case CatalogSpace::unitary:
        if (param < 1)
            throw argument_error(std::string(catalog_space_name(space)) +
                                 " requires dimension parameter >= 1");
        e.gf = make_rational_gf(IntPolynomial(std::vector<long long>{0, param}), 2);
        e.display_numerator = coeff_prefix(param) + "x";
        return e;
    case CatalogSpace::surface:
        if (param < 2)
            throw argument_error("surface requires genus >= 2 (genus " +
                                 std::to_string(param) +
                                 " given; genus 1 is the torus, use torus 2)");
        e.gf = make_rational_gf(IntPolynomial(std::vector<long long>{0, 4, -2}), 2);
        e.display_numerator = "2x(2-x)";
        return e;
    case CatalogSpace::symplectic:
        if (param < 1)
            throw argument_error("symplectic requires half-dimension >= 1");
        e.gf = make_rational_gf(
            IntPolynomial(std::vector<long long>{0, checked_mul(2, param), -param}),
            2);
        e.display_numerator = coeff_prefix(param) + "x(2-x)";
        return e;
    case CatalogSpace::raag: {
        if (graph == nullptr)
            throw argument_error("raag requires a defining graph");
        IntPolynomial p = generating_polynomial(*graph);
        e.display_numerator = p.to_text();
        e.gf = make_rational_gf(std::move(p), 2);
        return e;
    }
    }
    throw argument_error("unknown catalog space");
}

} // namespace raagtc
