#include "chowgamma/symfunc.hpp"

#include <algorithm>
#include <numeric>

#include "chowgamma/errors.hpp"

namespace chowgamma {

bool is_partition(const Partition& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1) return false;
        if (i > 0 && lambda[i] > lambda[i - 1]) return false;
    }
    return true;
}

int weight(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

std::vector<Partition> partitions(int n) {
    if (n < 0) throw DomainError("negative partition weight");
    std::vector<Partition> out;
    Partition current;
    std::function<void(int, int)> grow = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            grow(remaining - part, part);
            current.pop_back();
        }
    };
    grow(n, n);
    return out;
}

std::string to_string_partition(const Partition& lambda) {
    std::string out = "[";
    for (std::size_t i = 0; i < lambda.size(); ++i) out += (i ? "," : "") + std::to_string(lambda[i]);
    return out + "]";
}

int Tableau::maj() const { return std::accumulate(descents.begin(), descents.end(), 0); }

std::vector<Tableau> syt_list(const Partition& lambda) {
    if (!is_partition(lambda)) throw DomainError("not a partition: " + to_string_partition(lambda));
    const int n = weight(lambda);
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(lambda.size());
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1);
    std::function<void(int)> place = [&](int k) {
        if (k > n) {
            Tableau t;
            t.shape = lambda;
            t.rows = rows;
            for (int i = 1; i < n; ++i)
                if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)]) t.descents.push_back(i);
            out.push_back(std::move(t));
            return;
        }
        for (std::size_t r = 0; r < lambda.size(); ++r) {
            if (static_cast<int>(rows[r].size()) >= lambda[r]) continue;
            if (r > 0 && rows[r - 1].size() <= rows[r].size()) continue;
            rows[r].push_back(k);
            row_of[static_cast<std::size_t>(k)] = static_cast<int>(r);
            place(k + 1);
            rows[r].pop_back();
        }
    };
    place(1);
    return out;
}

mpz_class syt_count(const Partition& lambda) {
    if (!is_partition(lambda)) throw DomainError("not a partition: " + to_string_partition(lambda));
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(weight(lambda)));
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = 0;
            for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return num / hooks;
}

RankSet descent_set(const std::vector<int>& w) {
    RankSet out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
    return out;
}

SymF SymF::schur(const Partition& lambda, const MVPoly& coeff) {
    if (!is_partition(lambda)) throw DomainError("not a partition: " + to_string_partition(lambda));
    SymF f(Basis::schur, weight(lambda));
    f.add_term(lambda, coeff);
    return f;
}

SymF SymF::fundamental(const RankSet& s, int n, const MVPoly& coeff) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] < 1 || s[i] > n - 1 || (i > 0 && s[i] <= s[i - 1]))
            throw DomainError("descent set " + chowgamma::to_string(s) + " not inside [1, n-1]");
    SymF f(Basis::fundamental, n);
    f.add_term(s, coeff);
    return f;
}

MVPoly SymF::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? MVPoly{} : it->second;
}

void SymF::add_term(const Key& k, const MVPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymF& SymF::operator+=(const SymF& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        basis_ = o.basis_;
        degree_ = o.degree_;
    }
    if (o.basis_ != basis_ || o.degree_ != degree_) throw DomainError("adding symmetric functions of different type");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SymF& SymF::operator-=(const SymF& o) { return *this += o.scaled(-1); }

SymF SymF::scaled(const MVPoly& c) const {
    return map_coefficients([&c](const MVPoly& x) { return x * c; });
}

SymF SymF::map_coefficients(const std::function<MVPoly(const MVPoly&)>& f) const {
    SymF out(basis_, degree_);
    for (const auto& [k, x] : terms_) out.add_term(k, f(x));
    return out;
}

std::string SymF::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string key = basis_ == Basis::schur ? "s" + to_string_partition(k) : "F" + chowgamma::to_string(k);
        out += c == MVPoly(1) ? key : key + "*(" + c.to_string() + ")";
    }
    return out;
}

SymF to_fundamental(const SymF& f) {
    if (f.basis() == SymF::Basis::fundamental) return f;
    SymF out(SymF::Basis::fundamental, f.degree());
    for (const auto& [lambda, c] : f.terms())
        for (const Tableau& t : syt_list(lambda)) out.add_term(t.descents, c);
    return out;
}

bool symf_equal(const SymF& a, const SymF& b) {
    SymF x = to_fundamental(a);
    SymF y = to_fundamental(b);
    if (x.is_zero() || y.is_zero()) return x.terms() == y.terms();
    return x == y;
}

SymF ribbon_to_schur(const RankSet& r, int n) {
    SymF::fundamental(r, n);  // validates R
    SymF out(SymF::Basis::schur, n);
    for (const Partition& lambda : partitions(n))
        for (const Tableau& t : syt_list(lambda))
            if (t.descents == r) out.add_term(lambda, 1);
    return out;
}

std::map<RankSet, SymF> all_ribbons_fundamental(int n) {
    if (n < 1) throw DomainError("ribbons need n >= 1");
    std::map<RankSet, SymF> out;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        std::vector<int> inv(sigma.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) inv[static_cast<std::size_t>(sigma[i] - 1)] = static_cast<int>(i) + 1;
        auto it = out.try_emplace(descent_set(sigma), SymF::Basis::fundamental, n).first;
        it->second.add_term(descent_set(inv), 1);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

SymF ribbon_to_fundamental(const RankSet& r, int n) {
    SymF::fundamental(r, n);  // validates R
    auto all = all_ribbons_fundamental(n);
    auto it = all.find(r);
    return it == all.end() ? SymF(SymF::Basis::fundamental, n) : it->second;
}

std::map<std::vector<int>, mpz_class> monomial_expansion(const SymF& f, int m) {
    if (f.basis() != SymF::Basis::fundamental) throw DomainError("monomial expansion expects the fundamental basis");
    const int n = f.degree();
    std::map<std::vector<int>, mpz_class> out;
    for (const auto& [s, c] : f.terms()) {
        if (!c.is_univariate_t() || c.degree_t() > 0) throw DomainError("monomial expansion needs integer coefficients");
        mpz_class value = c.coeff({0, 0, 0});
        std::vector<bool> strict(static_cast<std::size_t>(n) + 1, false);
        for (int j : s) strict[static_cast<std::size_t>(j)] = true;
        std::vector<int> exps(static_cast<std::size_t>(m), 0);
        std::function<void(int, int)> grow = [&](int j, int prev) {  // position j (1-based) to fill
            if (j > n) {
                out[exps] += value;
                return;
            }
            int hi = j == 1 ? m : (strict[static_cast<std::size_t>(j - 1)] ? prev - 1 : prev);
            for (int v = 1; v <= hi; ++v) {
                ++exps[static_cast<std::size_t>(v - 1)];
                grow(j + 1, v);
                --exps[static_cast<std::size_t>(v - 1)];
            }
        };
        grow(1, m);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<std::vector<int>, mpz_class> ribbon_word_expansion(const RankSet& r, int n, int m) {
    std::map<std::vector<int>, mpz_class> out;
    std::vector<int> w(static_cast<std::size_t>(n), 1);
    while (true) {
        if (descent_set(w) == r) {
            std::vector<int> exps(static_cast<std::size_t>(m), 0);
            for (int v : w) ++exps[static_cast<std::size_t>(v - 1)];
            out[exps] += 1;
        }
        std::size_t i = 0;
        while (i < w.size() && w[i] == m) w[i++] = 1;
        if (i == w.size()) break;
        ++w[i];
    }
    return out;
}

SymF pieri_h(int m, const SymF& f) {
    if (f.basis() != SymF::Basis::schur) throw DomainError("Pieri rule expects the Schur basis");
    if (m < 0) throw DomainError("negative Pieri degree");
    SymF out(SymF::Basis::schur, f.degree() + m);
    for (const auto& [mu, c] : f.terms()) {
        Partition lambda(mu.size() + 1, 0);
        std::function<void(std::size_t, int)> grow = [&](std::size_t i, int remaining) {
            if (i == lambda.size()) {
                if (remaining != 0) return;
                Partition key;
                for (int x : lambda)
                    if (x > 0) key.push_back(x);
                out.add_term(key, c);
                return;
            }
            int base = i < mu.size() ? mu[i] : 0;
            int cap = i == 0 ? base + remaining : std::min(base + remaining, mu[i - 1]);
            for (int x = base; x <= cap; ++x) {
                lambda[i] = x;
                grow(i + 1, remaining - (x - base));
            }
        };
        grow(0, m);
    }
    return out;
}

namespace {

using BetaKey = std::pair<std::vector<int>, std::size_t>;

mpz_class mn_rule(const std::vector<int>& beads, const Partition& mu, std::size_t next,
                  std::map<BetaKey, mpz_class>& memo) {
    if (next == mu.size()) return 1;
    BetaKey key{beads, next};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = mu[next];
    mpz_class total = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
        int to = beads[i] - k;
        if (to < 0 || std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
        int height = 0;
        for (int b : beads)
            if (b > to && b < beads[i]) ++height;
        std::vector<int> moved = beads;
        moved[i] = to;
        std::sort(moved.rbegin(), moved.rend());
        mpz_class sub = mn_rule(moved, mu, next + 1, memo);
        total += height % 2 == 0 ? sub : mpz_class(-sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

mpz_class centralizer_size(const Partition& mu) {
    mpz_class z = 1;
    std::map<int, unsigned long> mult;
    for (int part : mu) {
        z *= part;
        ++mult[part];
    }
    for (const auto& [part, m] : mult) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m);
        z *= f;
    }
    return z;
}

}  // namespace

mpz_class sn_character(const Partition& lambda, const Partition& mu) {
    if (!is_partition(lambda) || !is_partition(mu)) throw DomainError("character arguments must be partitions");
    if (weight(lambda) != weight(mu)) throw DomainError("character arguments have different weights");
    std::vector<int> beads;
    const int len = static_cast<int>(lambda.size());
    for (int i = 0; i < len; ++i) beads.push_back(lambda[static_cast<std::size_t>(i)] + len - 1 - i);
    std::map<BetaKey, mpz_class> memo;
    return mn_rule(beads, mu, 0, memo);
}

SymF frobenius_ch(const std::map<Partition, mpz_class>& by_cycle_type, int n) {
    const auto shapes = partitions(n);
    if (by_cycle_type.size() != shapes.size()) throw DomainError("class function must give a value on every cycle type");
    SymF out(SymF::Basis::schur, n);
    for (const Partition& lambda : shapes) {
        mpq_class inner = 0;
        for (const auto& [mu, value] : by_cycle_type) {
            if (weight(mu) != n) throw DomainError("cycle type of the wrong weight");
            inner += mpq_class(value * sn_character(lambda, mu), centralizer_size(mu));
        }
        inner.canonicalize();
        if (inner.get_den() != 1)
            throw ConsistencyError("non-integral multiplicity " + inner.get_str() + " of s" + to_string_partition(lambda));
        out.add_term(lambda, MVPoly(mpz_class(inner.get_num())));
    }
    return out;
}

SymF frobenius_ch(const PermGroup& group, const std::vector<mpz_class>& values) {
    const int n = group.degree();
    mpz_class full;
    mpz_fac_ui(full.get_mpz_t(), static_cast<unsigned long>(n));
    if (mpz_class(static_cast<unsigned long>(group.order())) != full)
        throw DomainError("Frobenius characteristic needs the full symmetric group");
    if (values.size() != group.class_count()) throw DomainError("class function has the wrong length");
    std::map<Partition, mpz_class> by_type;
    for (std::size_t c = 0; c < group.class_count(); ++c)
        if (!by_type.emplace(cycle_type(group.classes()[c].representative), values[c]).second)
            throw ConsistencyError("two conjugacy classes share a cycle type");
    return frobenius_ch(by_type, n);
}

namespace {

void require_degree(const SymF& f, int n) {
    if (f.degree() != n && !f.is_zero()) throw DomainError("symmetric function is not of degree " + std::to_string(n));
}

}  // namespace

MVPoly ps_stable_normalized(const SymF& f, int n) {
    require_degree(f, n);
    MVPoly out;
    const SymF fundamental = to_fundamental(f);
    for (const auto& [s, c] : fundamental.terms())
        out += c * MVPoly::q(static_cast<std::uint32_t>(std::accumulate(s.begin(), s.end(), 0)));
    return out;
}

MVPoly ps_principal_numerator(const SymF& f, int n) {
    require_degree(f, n);
    MVPoly out;
    if (f.basis() == SymF::Basis::fundamental) {
        for (const auto& [s, c] : f.terms()) {
            Exponent e{0, static_cast<std::uint32_t>(std::accumulate(s.begin(), s.end(), 0)),
                       static_cast<std::uint32_t>(s.size())};
            out += c * MVPoly::monomial(1, e);
        }
        return out;
    }
    for (const auto& [lambda, c] : f.terms()) {
        MVPoly tableaux;
        for (const Tableau& t : syt_list(lambda))
            tableaux += MVPoly::monomial(1, {0, static_cast<std::uint32_t>(t.maj()), static_cast<std::uint32_t>(t.des())});
        out += c * tableaux;
    }
    return out;
}

MVPoly principal_specialization(const RankSet& s, int n, int m) {
    SymF::fundamental(s, n);  // validates S
    if (m < 0) throw DomainError("negative variable count");
    std::vector<bool> strict(static_cast<std::size_t>(n) + 1, false);
    for (int j : s) strict[static_cast<std::size_t>(j)] = true;
    // ending[v]: words so far whose last letter is v
    std::vector<MVPoly> ending(static_cast<std::size_t>(m) + 1);
    for (int v = 1; v <= m; ++v) ending[static_cast<std::size_t>(v)] = MVPoly::q(static_cast<std::uint32_t>(v - 1));
    for (int j = 1; j < n; ++j) {
        std::vector<MVPoly> next(ending.size());
        MVPoly suffix;  // sum of ending[u] for u >= w (or > w when strict)
        for (int w = m; w >= 1; --w) {
            if (!strict[static_cast<std::size_t>(j)]) suffix += ending[static_cast<std::size_t>(w)];
            next[static_cast<std::size_t>(w)] = suffix * MVPoly::q(static_cast<std::uint32_t>(w - 1));
            if (strict[static_cast<std::size_t>(j)]) suffix += ending[static_cast<std::size_t>(w)];
        }
        ending = std::move(next);
    }
    MVPoly out;
    for (const auto& x : ending) out += x;
    return out;
}

}  // namespace chowgamma
