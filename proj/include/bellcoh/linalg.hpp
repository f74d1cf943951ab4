#pragma once

// Fixed-size dense complex matrices for one- and two-qubit operators.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace bellcoh {

using Complex = std::complex<double>;

template <std::size_t N>
class SquareMatrix {
public:
    static constexpr std::size_t dim = N;

    constexpr SquareMatrix() : data_{} {}

    // Row-major initializer; missing trailing entries are zero.
    SquareMatrix(std::initializer_list<Complex> row_major) : data_{} {
        std::size_t k = 0;
        for (const auto& v : row_major) {
            if (k == N * N) break;
            data_[k++] = v;
        }
    }

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static SquareMatrix diagonal(const std::array<double, N>& d) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

    const std::array<Complex, N * N>& entries() const { return data_; }

    SquareMatrix adjoint() const {
        SquareMatrix out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
        return out;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    std::array<double, N> real_diagonal() const {
        std::array<double, N> d{};
        for (std::size_t i = 0; i < N; ++i) d[i] = (*this)(i, i).real();
        return d;
    }

    SquareMatrix& operator+=(const SquareMatrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
        return *this;
    }
    SquareMatrix& operator-=(const SquareMatrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
        return *this;
    }
    SquareMatrix& operator*=(Complex s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
    friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        SquareMatrix out;
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t k = 0; k < N; ++k) {
                const Complex ark = a(r, k);
                if (ark == Complex{}) continue;
                for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
            }
        return out;
    }

private:
    std::array<Complex, N * N> data_;
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

// Kronecker product A ⊗ B with the first factor on the most significant
// index bit (basis order |00>, |01>, |10>, |11>).
Mat4 kron(const Mat2& a, const Mat2& b);

// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) {
        const double d = std::abs(a.entries()[k] - b.entries()[k]);
        if (d > m) m = d;
    }
    return m;
}

// max |m - m^dagger|
template <std::size_t N>
double hermiticity_defect(const SquareMatrix<N>& m) {
    return max_abs_diff(m, m.adjoint());
}

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
}  // namespace pauli

}  // namespace bellcoh
