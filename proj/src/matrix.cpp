#include "cartsym/matrix.hpp"

#include "cartsym/error.hpp"

namespace cartsym {

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

CycloMatrix CycloMatrix::identity(std::size_t n)
{
    CycloMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out(k, k) = Cyclotomic(1);
    }
    return out;
}

std::vector<Cyclotomic> CycloMatrix::column(std::size_t c) const
{
    std::vector<Cyclotomic> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.push_back((*this)(r, c));
    }
    return out;
}

CycloMatrix CycloMatrix::adjoint() const
{
    CycloMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c).conj();
        }
    }
    return out;
}

Cyclotomic CycloMatrix::trace() const
{
    Cyclotomic sum;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) {
        sum += (*this)(k, k);
    }
    return sum;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b)
{
    if (a.cols_ != b.rows_) {
        throw DomainError("matrix dimensions do not match for multiplication");
    }
    CycloMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(r, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const auto& y = b(k, c);
                if (!y.is_zero()) {
                    out(r, c) += x * y;
                }
            }
        }
    }
    return out;
}

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DomainError("matrix dimensions do not match for addition");
    }
    CycloMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) {
        out.data_[k] += b.data_[k];
    }
    return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool SpanBuilder::add(std::vector<Cyclotomic> v)
{
    if (v.size() != dimension_) {
        throw DomainError("vector length does not match the ambient dimension");
    }
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const auto p = pivots_[k];
        if (v[p].is_zero()) {
            continue;
        }
        const Cyclotomic f = v[p];
        for (std::size_t i = 0; i < dimension_; ++i) {
            if (!basis_[k][i].is_zero()) {
                v[i] -= f * basis_[k][i];
            }
        }
    }
    std::size_t pivot = 0;
    while (pivot < dimension_ && v[pivot].is_zero()) {
        ++pivot;
    }
    if (pivot == dimension_) {
        return false;
    }
    const Cyclotomic inv = v[pivot].inverse();
    for (auto& x : v) {
        if (!x.is_zero()) {
            x *= inv;
        }
    }
    // keep the basis fully reduced at the new pivot
    for (auto& b : basis_) {
        if (b[pivot].is_zero()) {
            continue;
        }
        const Cyclotomic f = b[pivot];
        for (std::size_t i = 0; i < dimension_; ++i) {
            if (!v[i].is_zero()) {
                b[i] -= f * v[i];
            }
        }
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

std::size_t rank_of_columns(const std::vector<std::vector<Cyclotomic>>& columns)
{
    if (columns.empty()) {
        return 0;
    }
    SpanBuilder span(columns.front().size());
    for (const auto& c : columns) {
        span.add(c);
    }
    return span.rank();
}

Cyclotomic hermitian_inner(const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y)
{
    if (x.size() != y.size()) {
        throw DomainError("inner product of vectors of different lengths");
    }
    Cyclotomic sum;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!x[k].is_zero() && !y[k].is_zero()) {
            sum += x[k].conj() * y[k];
        }
    }
    return sum;
}

} // namespace cartsym
