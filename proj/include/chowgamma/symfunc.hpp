#pragma once

// Symmetric functions of a fixed degree in the Schur and fundamental
// quasisymmetric bases, with coefficients in Z[t, q, p].
//
// The fundamental basis uses the reversed convention:
//   F_{S,n} = sum over i_1 >= i_2 >= ... >= i_n with i_j > i_{j+1} for j in S
// of x_{i_1} ... x_{i_n}.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chowgamma/group.hpp"
#include "chowgamma/matroid.hpp"
#include "chowgamma/poly.hpp"

namespace chowgamma {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

bool is_partition(const Partition& lambda);
int weight(const Partition& lambda);
/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);
std::string to_string_partition(const Partition& lambda);

struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
    /// i such that i+1 sits in a strictly lower row than i.
    RankSet descents;

    int des() const { return static_cast<int>(descents.size()); }
    int maj() const;
};

std::vector<Tableau> syt_list(const Partition& lambda);
/// Hook length formula.
mpz_class syt_count(const Partition& lambda);

/// Descent set {i : w_i > w_{i+1}} of a word or one-line permutation,
/// 1-based positions.
RankSet descent_set(const std::vector<int>& w);

class SymF {
public:
    enum class Basis { schur, fundamental };
    /// Partition for schur, descent set for fundamental.
    using Key = std::vector<int>;
    using Terms = std::map<Key, MVPoly>;

    SymF(Basis basis, int degree) : basis_(basis), degree_(degree) {}

    static SymF schur(const Partition& lambda, const MVPoly& coeff = 1);
    static SymF fundamental(const RankSet& s, int n, const MVPoly& coeff = 1);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    MVPoly coeff(const Key& k) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const MVPoly& c);
    SymF& operator+=(const SymF& o);
    SymF& operator-=(const SymF& o);
    /// Multiply every coefficient by c.
    SymF scaled(const MVPoly& c) const;
    /// Apply f to every coefficient, dropping zeros.
    SymF map_coefficients(const std::function<MVPoly(const MVPoly&)>& f) const;
    friend SymF operator+(SymF a, const SymF& b) { return a += b; }
    friend SymF operator-(SymF a, const SymF& b) { return a -= b; }

    /// Same basis and identical terms. Use symf_equal across bases.
    friend bool operator==(const SymF& a, const SymF& b) {
        return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// e.g. "s[2,1]*(1 + t) + s[3]" or "F{1} + F{2}"; "0" if empty.
    std::string to_string() const;

private:
    Basis basis_;
    int degree_;
    Terms terms_;
};

/// s_lambda = sum over SYT P of F_{DES(P)}.
SymF to_fundamental(const SymF& f);
/// Compares after converting both sides to the fundamental basis.
bool symf_equal(const SymF& a, const SymF& b);

/// Coefficient of s_lambda is #{P in SYT(lambda) : DES(P) = R}.
SymF ribbon_to_schur(const RankSet& r, int n);
/// sum over sigma in S_n with DES(sigma) = R of F_{DES(sigma^-1)}.
SymF ribbon_to_fundamental(const RankSet& r, int n);
/// Every ribbon of size n in the fundamental basis from one sweep of S_n.
std::map<RankSet, SymF> all_ribbons_fundamental(int n);

/// Monomial expansion in x_1..x_m: exponent vector -> coefficient. The
/// argument must be in the fundamental basis with integer coefficients.
std::map<std::vector<int>, mpz_class> monomial_expansion(const SymF& f, int m);
/// sum of x_w over words w in [m]^n with DES(w) = R.
std::map<std::vector<int>, mpz_class> ribbon_word_expansion(const RankSet& r, int n, int m);

/// h_m * f for f in the Schur basis (horizontal strips).
SymF pieri_h(int m, const SymF& f);

/// chi^lambda(mu) by the border-strip rule; DomainError if |lambda| != |mu|.
mpz_class sn_character(const Partition& lambda, const Partition& mu);

/// Schur expansion of a class function of S_n given by cycle type.
/// ConsistencyError for a non-integral multiplicity.
SymF frobenius_ch(const std::map<Partition, mpz_class>& by_cycle_type, int n);
/// Same, for a class function (one value per class) on a full symmetric
/// group; DomainError if the group is not all of S_n.
SymF frobenius_ch(const PermGroup& group, const std::vector<mpz_class>& values);

/// prod_{i=1}^n (1 - q^i) ps_q(f): F_S contributes q^{sum S}.
MVPoly ps_stable_normalized(const SymF& f, int n);
/// Numerator of sum_{m>=1} ps_{q,m}(f) p^{m-1} over prod_{i=0}^n (1 - p q^i).
/// Fundamental terms give p^{|S|} q^{sum S}; Schur terms give
/// sum over SYT P of p^{des P} q^{maj P}.
MVPoly ps_principal_numerator(const SymF& f, int n);
/// Direct x_i = q^{i-1}, i <= m, in F_{S,n}.
MVPoly principal_specialization(const RankSet& s, int n, int m);

}  // namespace chowgamma
