// Small dense matrix helpers: complex 2x2 spinor maps and real 4x4 blocks.
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace spinfall {

using cplx = std::complex<double>;

using Mat4 = std::array<std::array<double, 4>, 4>;

// 2x2 complex matrix with value semantics; indices are (row, col).
struct Mat2 {
    std::array<std::array<cplx, 2>, 2> m{};

    cplx& operator()(int i, int j) { return m[i][j]; }
    const cplx& operator()(int i, int j) const { return m[i][j]; }
};

inline Mat2 mat2_identity() {
    Mat2 out;
    out(0, 0) = 1.0;
    out(1, 1) = 1.0;
    return out;
}

// sigma1 = ((0,1),(1,0)).
inline Mat2 pauli1() {
    Mat2 out;
    out(0, 1) = 1.0;
    out(1, 0) = 1.0;
    return out;
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return out;
}

inline Mat2 operator*(cplx s, const Mat2& a) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = s * a(i, j);
    return out;
}

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

inline Mat2 dagger(const Mat2& a) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

inline double frobenius(const Mat2& a) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

inline cplx trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

inline bool finite(const Mat2& a) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    return true;
}

inline double frobenius4(const Mat4& a) {
    double s = 0.0;
    for (const auto& row : a)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

inline Mat4 mat4_zero() { return Mat4{}; }

inline Mat4 mat4_identity() {
    Mat4 out{};
    for (int i = 0; i < 4; ++i) out[i][i] = 1.0;
    return out;
}

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const double aik = a[i][k];
            if (aik == 0.0) continue;
            for (int j = 0; j < 4; ++j) out[i][j] += aik * b[k][j];
        }
    return out;
}

inline Mat4 mat4_transpose(const Mat4& a) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = a[j][i];
    return out;
}

// Minkowski metric diag(-1, 1, 1, 1).
inline Mat4 minkowski() {
    Mat4 out{};
    out[0][0] = -1.0;
    out[1][1] = out[2][2] = out[3][3] = 1.0;
    return out;
}

}  // namespace spinfall
