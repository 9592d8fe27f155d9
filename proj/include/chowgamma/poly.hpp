#pragma once

// Exact sparse polynomials in the three variables t, q, p with
// arbitrary-precision integer coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace chowgamma {

enum class Var { t, q, p };

struct Exponent {
    std::uint32_t t = 0;
    std::uint32_t q = 0;
    std::uint32_t p = 0;

    auto operator<=>(const Exponent&) const = default;
    bool operator==(const Exponent&) const = default;
};

/// Immutable-in-spirit value type: every operation returns a new polynomial,
/// the compound assignments are provided for accumulation loops.
class MVPoly {
public:
    /// Lexicographic on (e_t, e_q, e_p); this is the canonical term order.
    using Terms = std::map<Exponent, mpz_class>;

    MVPoly() = default;
    MVPoly(long constant);  // NOLINT(google-explicit-constructor)
    explicit MVPoly(const mpz_class& constant);

    static MVPoly monomial(const mpz_class& coeff, Exponent e);
    static MVPoly t(std::uint32_t power = 1) { return monomial(1, {power, 0, 0}); }
    static MVPoly q(std::uint32_t power = 1) { return monomial(1, {0, power, 0}); }
    static MVPoly p(std::uint32_t power = 1) { return monomial(1, {0, 0, power}); }
    /// Polynomial in t from coefficients c_0, c_1, ...
    static MVPoly from_t_coeffs(const std::vector<mpz_class>& coeffs);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    mpz_class coeff(Exponent e) const;
    /// Coefficient of t^j, as a polynomial in q and p.
    MVPoly coeff_t(std::uint32_t j) const;
    /// -1 for the zero polynomial.
    long degree_t() const;
    long degree(Var v) const;
    bool involves(Var v) const;
    bool is_univariate_t() const { return !involves(Var::q) && !involves(Var::p); }
    /// Coefficients c_0..c_deg of a univariate polynomial in t.
    std::vector<mpz_class> t_coeffs() const;

    /// Set v := value and collect.
    MVPoly substitute(Var v, long value) const;
    /// Multiply by t^shift; a negative shift requires divisibility.
    MVPoly shift_t(long shift) const;
    MVPoly pow(unsigned exponent) const;
    /// True iff every integer coefficient is >= 0.
    bool nonnegative() const;

    void add_term(Exponent e, const mpz_class& c);

    MVPoly& operator+=(const MVPoly& o);
    MVPoly& operator-=(const MVPoly& o);
    MVPoly& operator*=(const MVPoly& o);
    MVPoly operator-() const;

    friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
    friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
    friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
    friend bool operator==(const MVPoly& a, const MVPoly& b) { return a.terms_ == b.terms_; }

    /// "c*t^a*q^b*p^c + ..." in canonical order; "0" for zero.
    std::string to_string() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MVPoly& f);

/// [n]_t = 1 + t + ... + t^{n-1}; zero for n = 0.
MVPoly t_integer(unsigned n);

/// (1+t)^d.
MVPoly one_plus_t_pow(unsigned d);

/// t^k (1+t)^{d-2k}; DomainError when 2k > d.
MVPoly gamma_basis(unsigned k, unsigned d);

/// Gaussian binomial coefficient in q; DomainError when k > n.
MVPoly gaussian_binomial(unsigned n, unsigned k);

struct GammaVector {
    unsigned degree = 0;
    /// gamma[k] is the coefficient of t^k (1+t)^{degree-2k}; free of t.
    std::vector<MVPoly> gamma;

    MVPoly reconstruct() const;
    bool nonnegative() const;
    friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

bool is_palindromic(const MVPoly& f, unsigned d);

/// DomainError unless f is univariate in t.
bool is_unimodal(const MVPoly& f);

/// Unique expansion in the basis t^k (1+t)^{d-2k}; PalindromyError on failure.
GammaVector gamma_expand(const MVPoly& f, unsigned d);

}  // namespace chowgamma
