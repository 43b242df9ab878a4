#pragma once

// 50-digit reference arithmetic for the disc. Geodesics are built as
// Euclidean circumcircles through (a, b, 1/conj(a)) and intersected with the
// textbook two-circle formula, so nothing here shares a code path with the
// library's coefficient-based construction.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using HComplex = boost::multiprecision::cpp_complex_50;

inline HComplex hc(std::complex<double> z) { return HComplex(Real(z.real()), Real(z.imag())); }
inline HComplex hc(double re, double im) { return HComplex(Real(re), Real(im)); }
inline std::complex<double> to_double(const HComplex& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline HComplex add(const HComplex& a, const HComplex& b) { return (a + b) / (Real(1) + conj(a) * b); }
inline Real distance(const HComplex& a, const HComplex& b) { return abs((a - b) / (Real(1) - conj(a) * b)); }
inline Real gamma(const Real& v) { return v / (Real(1) - v * v); }

/// Geodesic through two points: a Euclidean line through 0, or a circle.
struct Geodesic {
    bool through_origin = false;
    HComplex direction;  // when through_origin
    HComplex center;
    Real radius;
};

inline Real cross(const HComplex& u, const HComplex& w) { return u.real() * w.imag() - u.imag() * w.real(); }

inline Geodesic geodesic(const HComplex& a, const HComplex& b) {
    using boost::multiprecision::abs;
    if (abs(cross(a, b)) < Real("1e-40")) {
        const HComplex far = abs(a) > abs(b) ? a : b;
        return Geodesic{true, far / abs(far), {}, Real(0)};
    }
    // Circumcenter of a, b and the inverse point 1/conj(a).
    const HComplex c3 = Real(1) / conj(a);
    const Real ax = a.real(), ay = a.imag(), bx = b.real(), by = b.imag(), cx = c3.real(), cy = c3.imag();
    const Real d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const Real a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    const Real ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    const Real uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    const HComplex center(ux, uy);
    return Geodesic{false, {}, center, abs(a - center)};
}

inline std::vector<HComplex> line_circle(const HComplex& dir, const HComplex& c, const Real& r) {
    // t real: |t·dir - c|² = r²  →  t² - 2t Re(conj(dir) c) + |c|² - r² = 0
    const Real p = (conj(dir) * c).real();
    const Real q = norm(c) - r * r;
    const Real disc = p * p - q;
    if (disc < 0) return {};
    const Real root = sqrt(disc);
    return {(p - root) * dir, (p + root) * dir};
}

inline std::vector<HComplex> circle_circle(const HComplex& c1, const Real& r1, const HComplex& c2, const Real& r2) {
    const Real d = abs(c2 - c1);
    const Real a = (r1 * r1 - r2 * r2 + d * d) / (2 * d);
    const Real h2 = r1 * r1 - a * a;
    if (h2 < 0) return {};
    const Real h = sqrt(h2);
    const HComplex e = (c2 - c1) / d;
    const HComplex base = c1 + a * e;
    const HComplex perp = HComplex(Real(0), Real(1)) * e;
    return {base + h * perp, base - h * perp};
}

/// The intersection point strictly inside the unit disc, if any.
inline std::optional<HComplex> meet(const Geodesic& g1, const Geodesic& g2) {
    std::vector<HComplex> roots;
    if (g1.through_origin && g2.through_origin) return HComplex(Real(0), Real(0));
    if (g1.through_origin) roots = line_circle(g1.direction, g2.center, g2.radius);
    else if (g2.through_origin) roots = line_circle(g2.direction, g1.center, g1.radius);
    else roots = circle_circle(g1.center, g1.radius, g2.center, g2.radius);
    for (const auto& z : roots) {
        if (abs(z) < Real(1)) return z;
    }
    return std::nullopt;
}

inline HComplex meet_points(const HComplex& a, const HComplex& b, const HComplex& p, const HComplex& q) {
    const auto hit = meet(geodesic(a, b), geodesic(p, q));
    if (!hit) throw std::runtime_error("oracle: geodesics do not meet inside the disc");
    return *hit;
}

inline Real ratio(const HComplex& n1, const HComplex& n2, const HComplex& d1, const HComplex& d2) {
    return gamma(distance(n1, n2)) / gamma(distance(d1, d2));
}

struct TriangleProduct {
    HComplex D, E, F;
    Real product;
};

inline TriangleProduct triangle(const HComplex& A, const HComplex& B, const HComplex& C, const HComplex& P,
                                const HComplex& Q) {
    const HComplex D = meet_points(B, C, P, Q);
    const HComplex E = meet_points(C, A, P, Q);
    const HComplex F = meet_points(A, B, P, Q);
    return {D, E, F, ratio(A, F, B, F) * ratio(B, D, C, D) * ratio(C, E, A, E)};
}

struct QuadProduct {
    HComplex X, Y, Z, W;
    Real product;
};

inline QuadProduct quad(const HComplex& A, const HComplex& B, const HComplex& C, const HComplex& D, const HComplex& P,
                        const HComplex& Q) {
    const HComplex X = meet_points(A, B, P, Q);
    const HComplex Y = meet_points(B, C, P, Q);
    const HComplex Z = meet_points(C, D, P, Q);
    const HComplex W = meet_points(D, A, P, Q);
    return {X, Y, Z, W, ratio(A, X, B, X) * ratio(B, Y, C, Y) * ratio(C, Z, D, Z) * ratio(D, W, A, W)};
}

/// a ⊕ (t ⊗ (⊖a ⊕ b)) with ⊗ from tanh/artanh.
inline HComplex gyroline_point(const HComplex& a, const HComplex& b, const Real& t) {
    const HComplex u = add(-a, b);
    const Real n = abs(u);
    return add(a, tanh(t * atanh(n)) * (u / n));
}

struct TransversalProduct {
    HComplex M, N, P;
    Real product;
};

inline TransversalProduct transversal(const HComplex& A, const HComplex& B, const HComplex& C, const HComplex& D,
                                      const HComplex& L1, const HComplex& L2) {
    const HComplex M = meet_points(A, B, L1, L2);
    const HComplex N = meet_points(A, C, L1, L2);
    const HComplex P = meet_points(A, D, L1, L2);
    return {M, N, P, ratio(B, D, C, D) * ratio(C, A, N, A) * ratio(N, P, M, P) * ratio(M, A, B, A)};
}

}  // namespace oracle
