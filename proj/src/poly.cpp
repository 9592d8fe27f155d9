#include "chowgamma/poly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "chowgamma/errors.hpp"

namespace chowgamma {

namespace {

constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 31;

std::uint32_t checked_exponent(std::uint64_t e) {
    if (e >= kMaxExponent) throw DomainError("polynomial exponent exceeds 2^31");
    return static_cast<std::uint32_t>(e);
}

std::uint32_t& component(Exponent& e, Var v) {
    switch (v) {
        case Var::t: return e.t;
        case Var::q: return e.q;
        case Var::p: return e.p;
    }
    return e.t;
}

std::uint32_t component(const Exponent& e, Var v) {
    switch (v) {
        case Var::t: return e.t;
        case Var::q: return e.q;
        case Var::p: return e.p;
    }
    return e.t;
}

void append_power(std::ostringstream& os, bool& first, char name, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << name;
    if (e > 1) os << '^' << e;
    first = false;
}

}  // namespace

MVPoly::MVPoly(long constant) {
    if (constant != 0) terms_.emplace(Exponent{}, mpz_class(constant));
}

MVPoly::MVPoly(const mpz_class& constant) {
    if (constant != 0) terms_.emplace(Exponent{}, constant);
}

MVPoly MVPoly::monomial(const mpz_class& coeff, Exponent e) {
    MVPoly f;
    f.add_term(e, coeff);
    return f;
}

MVPoly MVPoly::from_t_coeffs(const std::vector<mpz_class>& coeffs) {
    MVPoly f;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        f.add_term({checked_exponent(j), 0, 0}, coeffs[j]);
    return f;
}

mpz_class MVPoly::coeff(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

MVPoly MVPoly::coeff_t(std::uint32_t j) const {
    MVPoly out;
    auto lo = terms_.lower_bound(Exponent{j, 0, 0});
    for (auto it = lo; it != terms_.end() && it->first.t == j; ++it)
        out.terms_.emplace_hint(out.terms_.end(), Exponent{0, it->first.q, it->first.p}, it->second);
    return out;
}

long MVPoly::degree_t() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.t;
}

long MVPoly::degree(Var v) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, component(e, v));
    return d;
}

bool MVPoly::involves(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [v](const auto& kv) { return component(kv.first, v) != 0; });
}

std::vector<mpz_class> MVPoly::t_coeffs() const {
    if (!is_univariate_t()) throw DomainError("t_coeffs: polynomial involves q or p");
    std::vector<mpz_class> out(static_cast<std::size_t>(degree_t() + 1), mpz_class(0));
    for (const auto& [e, c] : terms_) out[e.t] = c;
    return out;
}

MVPoly MVPoly::substitute(Var v, long value) const {
    MVPoly out;
    for (const auto& [e, c] : terms_) {
        Exponent reduced = e;
        std::uint32_t power = component(reduced, v);
        component(reduced, v) = 0;
        mpz_class factor;
        mpz_pow_ui(factor.get_mpz_t(), mpz_class(value).get_mpz_t(), power);
        out.add_term(reduced, c * factor);
    }
    return out;
}

MVPoly MVPoly::shift_t(long shift) const {
    MVPoly out;
    for (const auto& [e, c] : terms_) {
        long te = static_cast<long>(e.t) + shift;
        if (te < 0) throw DomainError("shift_t: negative t exponent");
        out.terms_.emplace_hint(out.terms_.end(),
                                Exponent{checked_exponent(static_cast<std::uint64_t>(te)), e.q, e.p}, c);
    }
    return out;
}

MVPoly MVPoly::pow(unsigned exponent) const {
    MVPoly result(1);
    MVPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool MVPoly::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

void MVPoly::add_term(Exponent e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MVPoly& MVPoly::operator+=(const MVPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MVPoly& MVPoly::operator*=(const MVPoly& o) {
    *this = *this * o;
    return *this;
}

MVPoly MVPoly::operator-() const {
    MVPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
    MVPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{checked_exponent(std::uint64_t{ea.t} + eb.t),
                       checked_exponent(std::uint64_t{ea.q} + eb.q),
                       checked_exponent(std::uint64_t{ea.p} + eb.p)};
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string MVPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool leading = true;
    for (const auto& [e, c] : terms_) {
        mpz_class magnitude = abs(c);
        if (leading) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        leading = false;
        bool constant = e == Exponent{};
        bool first = true;
        if (magnitude != 1 || constant) {
            os << magnitude.get_str();
            first = false;
        }
        append_power(os, first, 't', e.t);
        append_power(os, first, 'q', e.q);
        append_power(os, first, 'p', e.p);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MVPoly& f) { return os << f.to_string(); }

MVPoly t_integer(unsigned n) {
    std::vector<mpz_class> coeffs(n, mpz_class(1));
    return MVPoly::from_t_coeffs(coeffs);
}

MVPoly one_plus_t_pow(unsigned d) {
    std::vector<mpz_class> coeffs(d + 1);
    coeffs[0] = 1;
    for (unsigned j = 1; j <= d; ++j) coeffs[j] = coeffs[j - 1] * (d - j + 1) / j;
    return MVPoly::from_t_coeffs(coeffs);
}

MVPoly gamma_basis(unsigned k, unsigned d) {
    if (2 * k > d) throw DomainError("gamma_basis: 2k exceeds d");
    return one_plus_t_pow(d - 2 * k).shift_t(k);
}

MVPoly gaussian_binomial(unsigned n, unsigned k) {
    if (k > n) throw DomainError("gaussian_binomial: k > n");
    // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k], row by row.
    std::vector<MVPoly> row{MVPoly(1)};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<MVPoly> next(m + 1);
        next[0] = MVPoly(1);
        next[m] = MVPoly(1);
        for (unsigned j = 1; j < m; ++j) next[j] = row[j - 1] + MVPoly::q(j) * row[j];
        row = std::move(next);
    }
    return row[k];
}

MVPoly GammaVector::reconstruct() const {
    MVPoly f;
    for (unsigned k = 0; k < gamma.size(); ++k) f += gamma[k] * gamma_basis(k, degree);
    return f;
}

bool GammaVector::nonnegative() const {
    return std::all_of(gamma.begin(), gamma.end(), [](const MVPoly& g) { return g.nonnegative(); });
}

bool is_palindromic(const MVPoly& f, unsigned d) {
    if (f.degree_t() > static_cast<long>(d)) return false;
    for (unsigned j = 0; 2 * j < d; ++j)
        if (!(f.coeff_t(j) == f.coeff_t(d - j))) return false;
    return true;
}

bool is_unimodal(const MVPoly& f) {
    if (!f.is_univariate_t()) throw DomainError("is_unimodal: polynomial must be univariate in t");
    auto a = f.t_coeffs();
    std::size_t j = 0;
    while (j + 1 < a.size() && a[j] <= a[j + 1]) ++j;
    while (j + 1 < a.size() && a[j] >= a[j + 1]) ++j;
    return j + 1 >= a.size();
}

GammaVector gamma_expand(const MVPoly& f, unsigned d) {
    if (f.degree_t() > static_cast<long>(d))
        throw PalindromyError(d + 1, "gamma_expand: t-degree exceeds " + std::to_string(d));
    for (unsigned j = 0; 2 * j < d; ++j) {
        if (!(f.coeff_t(j) == f.coeff_t(d - j)))
            throw PalindromyError(j, "gamma_expand: coefficient of t^" + std::to_string(j) +
                                         " differs from t^" + std::to_string(d - j));
    }
    GammaVector out;
    out.degree = d;
    MVPoly rest = f;
    for (unsigned k = 0; 2 * k <= d; ++k) {
        MVPoly lead = rest.coeff_t(k);
        rest -= lead * gamma_basis(k, d);
        out.gamma.push_back(std::move(lead));
    }
    if (!rest.is_zero()) throw ConsistencyError("gamma_expand: nonzero remainder " + rest.to_string());
    return out;
}

}  // namespace chowgamma
