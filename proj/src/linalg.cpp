#include "chowgamma/linalg.hpp"

#include <algorithm>
#include <map>

#include "chowgamma/errors.hpp"

namespace chowgamma {

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total;
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, const mpz_class& v) {
    if (i >= rows_.size() || j >= cols_) throw DomainError("SparseIntMatrix::add index out of range");
    if (v == 0) return;
    Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        it->second += v;
        if (it->second == 0) r.erase(it);
    } else {
        r.insert(it, Entry{j, v});
    }
}

mpz_class SparseIntMatrix::at(std::size_t i, std::size_t j) const {
    const Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : mpz_class(0);
}

std::vector<mpz_class> SparseIntMatrix::multiply(const std::vector<mpz_class>& x) const {
    std::vector<mpz_class> y(rows_.size(), mpz_class(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, v] : rows_[i]) y[i] += v * x[j];
    return y;
}

std::vector<mpq_class> SparseIntMatrix::multiply(const std::vector<mpq_class>& x) const {
    std::vector<mpq_class> y(rows_.size(), mpq_class(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, v] : rows_[i]) y[i] += mpq_class(v) * x[j];
    return y;
}

namespace {

using Row = SparseIntMatrix::Row;

void make_primitive(Row& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y, merged by column.
Row combine(const mpz_class& a, const Row& x, const mpz_class& b, const Row& y) {
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            mpz_class v = a * x[i].second - b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::vector<std::size_t> Echelon::pivot_columns() const {
    std::vector<std::size_t> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.front().first);
    return out;
}

std::vector<std::size_t> Echelon::free_columns() const {
    std::vector<bool> pivot(cols, false);
    for (const auto& r : rows) pivot[r.front().first] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols; ++c)
        if (!pivot[c]) out.push_back(c);
    return out;
}

Echelon echelon(const SparseIntMatrix& m) {
    std::map<std::size_t, Row> pivots;  // leading column -> primitive row
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row r = m.row(i);
        make_primitive(r);
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) break;
            const Row& p = it->second;
            mpz_class a = p.front().second;
            mpz_class b = r.front().second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
            r = combine(a, r, b, p);
            make_primitive(r);
        }
        if (!r.empty()) {
            std::size_t lead = r.front().first;
            pivots.emplace(lead, std::move(r));
        }
    }
    Echelon e;
    e.cols = m.cols();
    e.rows.reserve(pivots.size());
    for (auto& [lead, r] : pivots) e.rows.push_back(std::move(r));
    return e;
}

std::size_t rank(const SparseIntMatrix& m) { return echelon(m).rank(); }

std::size_t rank_bareiss_dense(const SparseIntMatrix& m) {
    std::size_t rows = m.rows();
    std::size_t cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols, mpz_class(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (const auto& [j, v] : m.row(i)) a[i][j] = v;

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

KernelBasis kernel_basis(const SparseIntMatrix& m) {
    Echelon e = echelon(m);
    KernelBasis kb;
    kb.free_columns = e.free_columns();
    kb.vectors.reserve(kb.free_columns.size());
    for (std::size_t f : kb.free_columns) {
        std::vector<mpq_class> x(m.cols(), mpq_class(0));
        x[f] = 1;
        for (auto it = e.rows.rbegin(); it != e.rows.rend(); ++it) {
            const Row& r = *it;
            mpq_class acc = 0;
            for (std::size_t k = 1; k < r.size(); ++k)
                if (x[r[k].first] != 0) acc += mpq_class(r[k].second) * x[r[k].first];
            if (acc != 0) {
                x[r.front().first] = -acc / mpq_class(r.front().second);
                x[r.front().first].canonicalize();
            }
        }
        kb.vectors.push_back(std::move(x));
    }
    return kb;
}

}  // namespace chowgamma
