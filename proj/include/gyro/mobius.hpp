#pragma once

// Möbius gyrovector arithmetic on the open s-ball {z : |z| < s}.
//
// Every operation rescales its inputs to the unit disc, applies the
// unit-disc formula and scales the result back, so there is a single code
// path for all s.

#include <complex>

#include "gyro/error.hpp"

namespace gyro {

using Complex = std::complex<double>;

/// Componentwise point-equality tolerance, relative to s.
inline constexpr double kPointTolerance = 1e-12;

class BallParam {
public:
    constexpr BallParam() = default;
    explicit BallParam(double s);

    constexpr double s() const noexcept { return s_; }

    friend constexpr bool operator==(BallParam, BallParam) = default;

private:
    double s_ = 1.0;
};

/// A point of the open s-ball. Construction rejects |z| >= s.
class DiscPoint {
public:
    DiscPoint() = default;
    DiscPoint(Complex z, BallParam ball = {});
    DiscPoint(double re, double im, BallParam ball = {}) : DiscPoint(Complex{re, im}, ball) {}

    /// Builds the point s·u from unit-disc coordinates u.
    static DiscPoint from_unit(Complex u, BallParam ball);

    Complex z() const noexcept { return z_; }
    double re() const noexcept { return z_.real(); }
    double im() const noexcept { return z_.imag(); }
    BallParam ball() const noexcept { return ball_; }

    /// Coordinates in the unit disc, z / s.
    Complex unit() const noexcept { return z_ / ball_.s(); }

    /// Exact coordinate equality (same ball, bitwise-equal components).
    friend bool operator==(const DiscPoint&, const DiscPoint&) = default;

private:
    Complex z_{0.0, 0.0};
    BallParam ball_{};
};

/// The unimodular factor gyr[a,b]; acts on points by complex multiplication.
struct GyrationFactor {
    Complex u{1.0, 0.0};

    DiscPoint apply(const DiscPoint& p) const;
};

/// A gyrolength v in [0, s) together with v_γ = v / (1 - v²/s²).
struct GammaLength {
    double v = 0.0;
    double v_gamma = 0.0;
};

DiscPoint mobius_add(const DiscPoint& a, const DiscPoint& b);
DiscPoint mobius_neg(const DiscPoint& a);
/// a ⊖ b = a ⊕ (⊖b).
DiscPoint mobius_sub(const DiscPoint& a, const DiscPoint& b);
GyrationFactor gyr(const DiscPoint& a, const DiscPoint& b);

/// r ⊗ a = s·tanh(r·artanh(|a|/s))·a/|a|, and 0 for a = 0.
DiscPoint mobius_scalar_mul(double r, const DiscPoint& a);

/// Gyrodistance |a ⊖ b| with its gamma-corrected value.
GammaLength hyp_distance(const DiscPoint& a, const DiscPoint& b);
GammaLength gamma_correct(double v, BallParam ball = {});

DiscPoint rescale(const DiscPoint& p, BallParam target);

/// Componentwise equality within kPointTolerance·s.
bool points_equal(const DiscPoint& a, const DiscPoint& b, double tol = kPointTolerance);

/// Gyroline parametrization a ⊕ (t ⊗ (⊖a ⊕ b)); t = 0 gives a, t = 1 gives b.
DiscPoint gyroline_point(const DiscPoint& a, const DiscPoint& b, double t);

/// The disc isometry z ↦ e^{iθ}(z0 ⊕ z).
struct DiscIsometry {
    DiscPoint translation;
    double rotation = 0.0;

    DiscPoint operator()(const DiscPoint& z) const;
};

namespace unit {

// Unit-disc kernels used by the rescaling wrappers and by other modules.

inline Complex add(Complex a, Complex b) { return (a + b) / (1.0 + std::conj(a) * b); }
inline Complex sub(Complex a, Complex b) { return add(a, -b); }
inline Complex gyr(Complex a, Complex b) {
    return (1.0 + a * std::conj(b)) / (1.0 + std::conj(a) * b);
}
Complex scalar_mul(double r, Complex a);
inline double distance(Complex a, Complex b) { return std::abs(sub(a, b)); }

}  // namespace unit

}  // namespace gyro
