#include "bellcoh/linalg.hpp"

namespace bellcoh {

Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

namespace pauli {

Mat2 identity() { return Mat2::identity(); }
Mat2 x() { return Mat2{0.0, 1.0, 1.0, 0.0}; }
Mat2 y() { return Mat2{0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}; }
Mat2 z() { return Mat2{1.0, 0.0, 0.0, -1.0}; }

}  // namespace pauli

}  // namespace bellcoh
