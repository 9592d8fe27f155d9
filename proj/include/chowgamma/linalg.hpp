#pragma once

// Exact integer/rational linear algebra for boundary matrices.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace chowgamma {

class SparseIntMatrix {
public:
    using Entry = std::pair<std::size_t, mpz_class>;  // (column, value)
    using Row = std::vector<Entry>;                   // sorted by column, no zeros

    SparseIntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Row& row(std::size_t i) const { return rows_[i]; }
    std::size_t nonzeros() const;

    /// Adds v to entry (i, j).
    void add(std::size_t i, std::size_t j, const mpz_class& v);
    mpz_class at(std::size_t i, std::size_t j) const;

    std::vector<mpz_class> multiply(const std::vector<mpz_class>& x) const;
    std::vector<mpq_class> multiply(const std::vector<mpq_class>& x) const;

private:
    std::size_t cols_;
    std::vector<Row> rows_;
};

/// Row echelon form from fraction-free elimination: rows are integer and
/// primitive, leading columns strictly distinct.
struct Echelon {
    std::vector<SparseIntMatrix::Row> rows;  // sorted by leading column
    std::size_t cols = 0;

    std::size_t rank() const { return rows.size(); }
    std::vector<std::size_t> pivot_columns() const;
    std::vector<std::size_t> free_columns() const;
};

/// Rows are inserted in order; each is reduced against existing pivots by
/// integer cross-multiplication (row := a*row - b*pivot, then divided by its
/// content) until its leading column is new.
Echelon echelon(const SparseIntMatrix& m);

std::size_t rank(const SparseIntMatrix& m);

/// Dense Bareiss elimination; independent route used to cross-check rank().
std::size_t rank_bareiss_dense(const SparseIntMatrix& m);

/// Basis of the right kernel. Vector j has 1 at free column j, 0 at the other
/// free columns, so coordinates of any kernel vector are its free entries.
struct KernelBasis {
    std::vector<std::size_t> free_columns;
    std::vector<std::vector<mpq_class>> vectors;
};

KernelBasis kernel_basis(const SparseIntMatrix& m);

}  // namespace chowgamma
