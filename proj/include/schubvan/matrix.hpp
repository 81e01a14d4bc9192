#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace schubvan {

using BigInt = mpz_class;

/// Dense row-major matrix over a commutative ring T. T must be constructible
/// from an int and support +, -, *.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    DenseMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != cols_)
                throw std::invalid_argument("ragged matrix literal");
            for (long v : row) data_.emplace_back(T(static_cast<int>(v)));
        }
    }

    static DenseMatrix identity(int n) {
        DenseMatrix id(n, n);
        for (int i = 0; i < n; ++i) id(i, i) = T(1);
        return id;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == T(0))) return false;
        return true;
    }

    bool is_unitriangular() const {
        if (!square()) return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c <= r; ++c)
                if (!((*this)(r, c) == T(c == r ? 1 : 0))) return false;
        return true;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        a.check_same_shape(b);
        DenseMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
        return out;
    }
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        a.check_same_shape(b);
        DenseMatrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
        return out;
    }
    DenseMatrix operator-() const {
        DenseMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = T(0) - data_[i];
        return out;
    }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        DenseMatrix out(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                const T& lhs = a(r, k);
                if (lhs == T(0)) continue;
                for (int c = 0; c < b.cols_; ++c) {
                    if (b(k, c) == T(0)) continue;
                    out(r, c) += T(lhs * b(k, c));
                }
            }
        return out;
    }

private:
    void check_same_shape(const DenseMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = DenseMatrix<BigInt>;

/// Solves U X = B for X, U upper unitriangular. Back-substitution never
/// divides, so the result stays in the ring.
template <class T>
DenseMatrix<T> unitriangular_solve(const DenseMatrix<T>& u, const DenseMatrix<T>& b) {
    if (!u.square() || u.rows() != b.rows())
        throw std::invalid_argument("unitriangular_solve: dimension mismatch");
    if (!u.is_unitriangular())
        throw std::invalid_argument("unitriangular_solve: matrix is not upper unitriangular");
    const int n = u.rows();
    DenseMatrix<T> x = b;
    for (int r = n - 1; r >= 0; --r)
        for (int k = r + 1; k < n; ++k) {
            if (u(r, k) == T(0)) continue;
            for (int c = 0; c < b.cols(); ++c) {
                if (x(k, c) == T(0)) continue;
                x(r, c) -= T(u(r, k) * x(k, c));
            }
        }
    return x;
}

template <class T>
DenseMatrix<T> unitriangular_inverse(const DenseMatrix<T>& u) {
    return unitriangular_solve(u, DenseMatrix<T>::identity(u.rows()));
}

std::string to_string(const IntMatrix& a);

/// Exact product; throws std::invalid_argument on dimension mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

BigInt max_abs(const IntMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
BigInt det_exact(const IntMatrix& a);

/// Determinant modulo a prime q < 2^63 by Gaussian elimination over F_q.
/// Throws std::invalid_argument if q is not prime.
std::uint64_t det_mod(const IntMatrix& a, std::uint64_t q);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Uniform random prime in [2^61, 2^62).
std::uint64_t random_prime_62(std::mt19937_64& rng);

/// ceil((sqrt(s) * max|entry|)^s): an upper bound on |det| of an s x s matrix.
BigInt hadamard_bound(const IntMatrix& a);

}  // namespace schubvan
