#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace spinhalf {

using Complex = std::complex<double>;

/// 2-component complex column vector.
struct Vec2c {
    std::array<Complex, 2> c{};

    Complex& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const Complex& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Vec2c&, const Vec2c&) = default;
};

/// 2x2 complex matrix, row-major.
struct Mat2c {
    std::array<Complex, 4> m{};

    Complex& operator()(int row, int col) { return m[static_cast<std::size_t>(2 * row + col)]; }
    const Complex& operator()(int row, int col) const {
        return m[static_cast<std::size_t>(2 * row + col)];
    }

    friend bool operator==(const Mat2c&, const Mat2c&) = default;
};

inline Vec2c operator*(const Mat2c& m, const Vec2c& v) {
    return {{m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]}};
}

inline Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline Mat2c operator+(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (int i = 0; i < 4; ++i) r.m[static_cast<std::size_t>(i)] = a.m[static_cast<std::size_t>(i)] + b.m[static_cast<std::size_t>(i)];
    return r;
}

inline Mat2c operator-(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (int i = 0; i < 4; ++i) r.m[static_cast<std::size_t>(i)] = a.m[static_cast<std::size_t>(i)] - b.m[static_cast<std::size_t>(i)];
    return r;
}

inline Mat2c operator*(Complex s, const Mat2c& a) {
    Mat2c r;
    for (int i = 0; i < 4; ++i) r.m[static_cast<std::size_t>(i)] = s * a.m[static_cast<std::size_t>(i)];
    return r;
}

inline Vec2c operator*(Complex s, const Vec2c& v) { return {{s * v[0], s * v[1]}}; }

inline Vec2c operator-(const Vec2c& a, const Vec2c& b) { return {{a[0] - b[0], a[1] - b[1]}}; }

/// Hermitian inner product <u, v> = u^dagger v (conjugate-linear in the first argument).
inline Complex inner(const Vec2c& u, const Vec2c& v) {
    return std::conj(u[0]) * v[0] + std::conj(u[1]) * v[1];
}

inline double norm(const Vec2c& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

inline Mat2c adjoint(const Mat2c& a) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline Complex trace(const Mat2c& a) { return a(0, 0) + a(1, 1); }

inline Complex det(const Mat2c& a) { return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0); }

inline Mat2c identity2() { return {{Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)}}; }

/// Largest entrywise modulus; max-norm distance is max_abs(a - b).
inline double max_abs(const Mat2c& a) {
    double r = 0.0;
    for (const Complex& e : a.m) r = std::max(r, std::abs(e));
    return r;
}

inline double max_abs(const Vec2c& v) { return std::max(std::abs(v[0]), std::abs(v[1])); }

}  // namespace spinhalf
