#include "spinhalf/oracle.hpp"

#include <cmath>

namespace spinhalf::oracle {

namespace {

Vec2c eigenvector(Projection m, const Direction& n) {
    const double ch = std::cos(0.5 * n.theta());
    const double sh = std::sin(0.5 * n.theta());
    const Complex ph = std::polar(1.0, n.phi());
    if (m == Projection::up) return {{ch, sh * ph}};
    return {{sh, -ch * ph}};
}

}  // namespace

PauliTriple pauli_matrices() {
    const Complex i(0.0, 1.0);
    PauliTriple p;
    p.x = {{0.0, 1.0, 1.0, 0.0}};
    p.y = {{0.0, -i, i, 0.0}};
    p.z = {{1.0, 0.0, 0.0, -1.0}};
    return p;
}

Mat2c sigma_n(const Direction& n) {
    const double ct = std::cos(n.theta());
    const double st = std::sin(n.theta());
    Mat2c m;
    m(0, 0) = ct;
    m(0, 1) = st * std::polar(1.0, -n.phi());
    m(1, 0) = st * std::polar(1.0, n.phi());
    m(1, 1) = -ct;
    return m;
}

std::pair<Vec2c, Vec2c> eigenvectors(const Direction& n) {
    return {eigenvector(Projection::up, n), eigenvector(Projection::down, n)};
}

Complex amplitude(Projection mi, const Direction& a, Projection mf,
                         const Direction& c) {
    return inner(eigenvector(mf, c), eigenvector(mi, a));
}

Mat2c operator_in_basis(const Direction& c, const Direction& b) {
    const Mat2c sc = sigma_n(c);
    const Vec2c bu = eigenvector(Projection::up, b);
    const Vec2c bd = eigenvector(Projection::down, b);
    Mat2c m;
    m(0, 0) = inner(bu, sc * bu);
    m(0, 1) = inner(bu, sc * bd);
    m(1, 0) = inner(bd, sc * bu);
    m(1, 1) = inner(bd, sc * bd);
    return m;
}

double expectation(Projection mi, const Direction& a, const Direction& c) {
    const Vec2c xi = eigenvector(mi, a);
    return inner(xi, sigma_n(c) * xi).real();
}

}  // namespace spinhalf::oracle
