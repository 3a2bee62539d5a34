#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burau {

// Square n x n matrix (n = 2 or 3) over an exact ring. T must be constructible
// from an integer literal and provide +, -, * and ==.
template <class T>
class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) { check_size(n); }

    Matrix(std::size_t n, std::vector<T> row_major) : n_(n), data_(std::move(row_major)) {
        check_size(n);
        if (data_.size() != n * n) throw std::invalid_argument("matrix entry count does not match dimension");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    const std::vector<T>& entries() const noexcept { return data_; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    Matrix& operator*=(const Matrix& b) { return *this = *this * b; }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

    Matrix scaled(const T& s) const {
        Matrix m = *this;
        for (auto& x : m.data_) x = s * x;
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != n_) throw std::invalid_argument("matrix/vector dimension mismatch");
        std::vector<T> out(n_, T(0));
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
        }
        return out;
    }

    // Cofactor expansion along the first row.
    T det() const {
        const Matrix& m = *this;
        if (n_ == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    bool is_identity() const { return *this == identity(n_); }

    // Entrywise ring homomorphism.
    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(n_, std::move(out));
    }

private:
    static void check_size(std::size_t n) {
        if (n != 2 && n != 3) throw std::invalid_argument("only 2x2 and 3x3 matrices are supported");
    }

    std::size_t n_;
    std::vector<T> data_;
};

// m^e for e >= 0 by repeated squaring.
template <class T>
Matrix<T> power(Matrix<T> m, unsigned long long e) {
    Matrix<T> result = Matrix<T>::identity(m.size());
    while (e > 0) {
        if (e & 1) result *= m;
        e >>= 1;
        if (e > 0) m *= m;
    }
    return result;
}

}  // namespace burau
