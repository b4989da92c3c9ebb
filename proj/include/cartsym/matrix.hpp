#pragma once

#include <cstddef>
#include <vector>

#include "cartsym/cyclo.hpp"

namespace cartsym {

/// Dense row-major matrix over the cyclotomic numbers.
class CycloMatrix {
public:
    CycloMatrix() = default;
    CycloMatrix(std::size_t rows, std::size_t cols);

    static CycloMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Cyclotomic> column(std::size_t c) const;

    /// Conjugate transpose.
    CycloMatrix adjoint() const;
    Cyclotomic trace() const;

    friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
    friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cyclotomic> data_;
};

/// Rank of a set of column vectors over Q(zeta), by exact Gaussian elimination.
std::size_t rank_of_columns(const std::vector<std::vector<Cyclotomic>>& columns);

/// Incremental echelon basis: add() reports whether a vector extends the span.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t dimension) : dimension_(dimension) {}

    /// Adds v if it is independent of the vectors added so far; returns whether it was.
    bool add(std::vector<Cyclotomic> v);
    std::size_t rank() const { return basis_.size(); }

private:
    std::size_t dimension_;
    std::vector<std::vector<Cyclotomic>> basis_; // each normalized with 1 at pivots_[k]
    std::vector<std::size_t> pivots_;
};

/// Hermitian inner product sum conj(x_k) y_k: conjugate-linear in the first argument.
Cyclotomic hermitian_inner(const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y);

} // namespace cartsym
