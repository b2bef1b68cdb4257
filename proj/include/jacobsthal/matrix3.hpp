#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

#include "jacobsthal/scalar.hpp"

namespace jacobsthal {

/// Dense 3x3 matrix over an exact commutative ring, row-major.
template <Scalar S>
class Matrix3 {
public:
    using Row = std::array<S, 3>;

    Matrix3() { entries_.fill(S(0)); }
    Matrix3(std::initializer_list<Row> rows) {
        std::size_t r = 0;
        for (const Row& row : rows) {
            for (std::size_t c = 0; c < 3; ++c) entries_[3 * r + c] = row[c];
            ++r;
        }
        for (std::size_t i = 3 * r; i < 9; ++i) entries_[i] = S(0);
    }

    static Matrix3 identity() {
        Matrix3 out;
        for (std::size_t i = 0; i < 3; ++i) out(i, i) = S(1);
        return out;
    }

    S& operator()(std::size_t row, std::size_t col) { return entries_[3 * row + col]; }
    const S& operator()(std::size_t row, std::size_t col) const { return entries_[3 * row + col]; }

    Matrix3& operator+=(const Matrix3& rhs) {
        for (std::size_t i = 0; i < 9; ++i) entries_[i] = entries_[i] + rhs.entries_[i];
        return *this;
    }
    Matrix3& operator-=(const Matrix3& rhs) {
        for (std::size_t i = 0; i < 9; ++i) entries_[i] = entries_[i] - rhs.entries_[i];
        return *this;
    }

    friend Matrix3 operator+(Matrix3 lhs, const Matrix3& rhs) { return lhs += rhs; }
    friend Matrix3 operator-(Matrix3 lhs, const Matrix3& rhs) { return lhs -= rhs; }
    friend Matrix3 operator*(const Matrix3& lhs, const Matrix3& rhs) { return mat3_mul(lhs, rhs); }
    friend Matrix3 operator*(const S& s, Matrix3 m) {
        for (S& e : m.entries_) e = s * e;
        return m;
    }

    friend bool operator==(const Matrix3&, const Matrix3&) = default;

    friend Matrix3 mat3_mul(const Matrix3& a, const Matrix3& b) {
        Matrix3 out;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                S sum = a(i, 0) * b(0, j);
                sum = sum + a(i, 1) * b(1, j);
                sum = sum + a(i, 2) * b(2, j);
                out(i, j) = std::move(sum);
            }
        }
        return out;
    }

    /// Entries rendered with the scalar's canonical text form.
    std::array<std::array<std::string, 3>, 3> render() const {
        std::array<std::array<std::string, 3>, 3> out;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) out[i][j] = (*this)(i, j).to_string();
        }
        return out;
    }

private:
    std::array<S, 9> entries_;
};

/// Cofactor expansion along the first row.
template <Scalar S>
S mat3_det(const Matrix3<S>& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Transpose of the cofactor matrix: m * adj(m) == det(m) * I.
template <Scalar S>
Matrix3<S> mat3_adjugate(const Matrix3<S>& m) {
    Matrix3<S> out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r0 = (j + 1) % 3;
            const std::size_t r1 = (j + 2) % 3;
            const std::size_t c0 = (i + 1) % 3;
            const std::size_t c1 = (i + 2) % 3;
            // Cyclic index order folds the (-1)^(i+j) sign into the minor.
            out(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
        }
    }
    return out;
}

/// Adjugate divided by the determinant. The determinant must be a unit of S.
template <Scalar S>
Matrix3<S> mat3_inverse(const Matrix3<S>& m) {
    const S det = mat3_det(m);
    if (!is_unit(det)) {
        throw SingularMatrix("singular or non-unit determinant '" + det.to_string() + "'");
    }
    return unit_inverse(det) * mat3_adjugate(m);
}

/// m^n by square-and-multiply on |n|; negative n inverts once up front.
template <Scalar S>
Matrix3<S> mat3_pow(const Matrix3<S>& m, long n) {
    if (n == 0) return Matrix3<S>::identity();
    Matrix3<S> square = n < 0 ? mat3_inverse(m) : m;
    unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    Matrix3<S> result = Matrix3<S>::identity();
    bool have_result = false;
    for (; e != 0; e >>= 1) {
        if (e & 1U) {
            result = have_result ? mat3_mul(result, square) : square;
            have_result = true;
        }
        if (e > 1) square = mat3_mul(square, square);
    }
    return result;
}

}  // namespace jacobsthal
