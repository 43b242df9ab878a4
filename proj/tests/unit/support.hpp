#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gyro/mobius.hpp"

namespace test {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    gyro::DiscPoint point(double radius = 0.95, gyro::BallParam ball = {}) {
        const double r = radius * std::sqrt(uniform());
        return gyro::DiscPoint(std::polar(r * ball.s(), uniform(0.0, 2.0 * std::numbers::pi)), ball);
    }

private:
    std::mt19937_64 engine_;
};

inline double gap(std::complex<double> a, std::complex<double> b) {
    return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}
inline double gap(const gyro::DiscPoint& a, const gyro::DiscPoint& b) { return gap(a.z(), b.z()); }

}  // namespace test
