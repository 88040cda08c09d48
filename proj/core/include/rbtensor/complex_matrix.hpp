#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rbt {

using cplx = std::complex<double>;

/// Dense complex matrix, column-major: element (r, c) lives at data()[r + c * rows()].
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

    static CMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static CMatrix identity(std::size_t n);
    /// Diagonal matrix of shape rows x cols with `diag` on the main diagonal.
    static CMatrix diagonal(std::size_t rows, std::size_t cols, std::span<const cplx> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r + c * rows_]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r + c * rows_]; }

    std::span<cplx> data() noexcept { return data_; }
    std::span<const cplx> data() const noexcept { return data_; }
    std::span<cplx> col(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
    std::span<const cplx> col(std::size_t c) const { return {data_.data() + c * rows_, rows_}; }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

    /// Submatrix of `nr` x `nc` starting at (r0, c0).
    CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix conj_transpose(const CMatrix& m);
CMatrix transpose(const CMatrix& m);
double frobenius_norm(const CMatrix& m);
/// Largest entry modulus.
double max_abs(const CMatrix& m);
bool all_finite(const CMatrix& m);

}  // namespace rbt
