#include "rbtensor/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rbtensor/errors.hpp"

namespace rbt {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw DimensionError("CMatrix: data length " + std::to_string(data_.size()) +
                             " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::size_t rows, std::size_t cols, std::span<const cplx> diag) {
    CMatrix m(rows, cols);
    const std::size_t n = std::min({rows, cols, diag.size()});
    for (std::size_t i = 0; i < n; ++i) m(i, i) = diag[i];
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    require_same_shape(*this, o, "CMatrix +");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] += o.data_[n];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    require_same_shape(*this, o, "CMatrix -");
    for (std::size_t n = 0; n < data_.size(); ++n) data_[n] -= o.data_[n];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("CMatrix *: inner dimensions " + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + " differ");
    }
    CMatrix c(a.rows(), b.cols());
    const std::size_t m = a.rows();
    for (std::size_t j = 0; j < b.cols(); ++j) {
        cplx* cj = c.data().data() + j * m;
        for (std::size_t p = 0; p < a.cols(); ++p) {
            const cplx bpj = b(p, j);
            if (bpj == cplx{}) continue;
            const cplx* ap = a.data().data() + p * m;
            for (std::size_t i = 0; i < m; ++i) cj[i] += ap[i] * bpj;
        }
    }
    return c;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("CMatrix::block out of range");
    CMatrix b(nr, nc);
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t r = 0; r < nr; ++r) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("CMatrix::set_block out of range");
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (std::size_t r = 0; r < b.rows(); ++r) (*this)(r0 + r, c0 + c) = b(r, c);
}

CMatrix conj_transpose(const CMatrix& m) {
    CMatrix t(m.cols(), m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) t(c, r) = std::conj(m(r, c));
    return t;
}

CMatrix transpose(const CMatrix& m) {
    CMatrix t(m.cols(), m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) t(c, r) = m(r, c);
    return t;
}

double frobenius_norm(const CMatrix& m) {
    double s = 0.0;
    for (const cplx& v : m.data()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const CMatrix& m) {
    double best = 0.0;
    for (const cplx& v : m.data()) best = std::max(best, std::abs(v));
    return best;
}

bool all_finite(const CMatrix& m) {
    return std::all_of(m.data().begin(), m.data().end(),
                       [](const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

}  // namespace rbt
