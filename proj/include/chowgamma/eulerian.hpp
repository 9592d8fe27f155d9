#pragma once

// Permutation statistics, Eulerian-type polynomials and their gamma
// expansions, with the Eulerian quasisymmetric functions built from ribbons.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chowgamma/poly.hpp"
#include "chowgamma/report.hpp"
#include "chowgamma/symfunc.hpp"

namespace chowgamma {

/// One-line permutations on {1, ..., n}.
using OneLine = std::vector<int>;

struct PermStats {
    RankSet descents;
    int des = 0;
    int maj = 0;
    int inv = 0;
    int exc = 0;
    /// des - 1 when the first letter exceeds 1, des otherwise.
    int desstar = 0;
};

PermStats stats(const OneLine& sigma);
OneLine inverse_one_line(const OneLine& sigma);
bool is_derangement(const OneLine& sigma);
/// Every permutation of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const OneLine&)>& visit);

/// A_n(q, t) = sum over S_n of q^{maj - exc} t^{exc}.
MVPoly q_eulerian(int n);
/// d_n(q, t), the same sum over derangements.
MVPoly q_derangement(int n);
/// 1 + t * sum_{k=1}^n [n choose k]_q A_k(q, t).
MVPoly q_binomial_eulerian(int n);
/// The same recursion without the factor t.
MVPoly q_binomial_eulerian_untwisted(int n);

enum class XiWindow { chow, augmented, derangement, no_first, no_last, full };
enum class XiWeight { count, q_maj_inverse, q_inv, pq };
enum class XiPopulation { all, derangements };

struct XiSpec {
    int n = 1;
    int k = 0;
    XiWindow window = XiWindow::full;
    int r = 0;  // only for chow and augmented windows
    XiWeight weight = XiWeight::count;
    XiPopulation population = XiPopulation::all;
};

/// Descent-set window: chow(r) -> Stab([2,r-1]), augmented(r) -> Stab([r-1]),
/// derangement -> Stab([2,n-2]), no_first -> Stab([2,n-1]),
/// no_last -> Stab([n-2]), full -> Stab([n-1]).
std::vector<RankSet> xi_window(const XiSpec& spec);
bool in_xi_window(const XiSpec& spec, const RankSet& des);

MVPoly xi(const XiSpec& spec);
/// xi for every k = 0..kmax from one sweep of S_n.
std::vector<MVPoly> xi_all(XiSpec spec, int kmax);

XiWindow parse_xi_window(const std::string& s, int* r);
XiWeight parse_xi_weight(const std::string& s);

struct QFunctions {
    int n = 0;
    SymF q0{SymF::Basis::schur, 0};      // zero for n = 1
    SymF q{SymF::Basis::schur, 0};
    SymF qtilde{SymF::Basis::schur, 0};  // from ribbons
    SymF qtilde_recursive{SymF::Basis::schur, 0};  // h_n + t sum h_{n-k} Q_k
};

/// The sum over R in window of s_{H_{R,n}} t^{|R| + shift} (1+t)^{d - 2|R|}.
SymF ribbon_gamma_sum(int n, const std::vector<RankSet>& window, int shift, int d);

QFunctions q_functions(int n);

/// Coefficient of s_lambda in Q~_n (recursive definition).
MVPoly n_lambda(const Partition& lambda, int n);
/// Sum over SYT P with DES(P) stable of t^{des P} (1+t)^{n - 2 des P}.
MVPoly n_lambda_tableaux(const Partition& lambda);

Report verify_corollaries(int n);
Report verify_pq_eulerian(int n);
Report verify_schur_coeff(int n);
Report verify_pq_binomial(int n);

/// Hilbert series of Chow rings of U_{n,n} and U_{n-1,n} against A_n, A~_n, d_n.
Report verify_hilbert_bridges(int n);
/// ch(beta_{B_n}(R)) against the Schur expansion of the ribbon H_{R,n}.
Report verify_ribbon_bridge(int n);

}  // namespace chowgamma
