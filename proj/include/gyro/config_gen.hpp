#pragma once

// Seeded rejection samplers for valid Menelaus configurations.
//
// Randomness comes from std::mt19937_64 (sequence fixed by the C++ standard);
// doubles are formed from the top 53 bits of each draw, so a seed yields the
// same configuration on every conforming platform.

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "gyro/gyroline.hpp"
#include "gyro/menelaus.hpp"

namespace gyro {

inline constexpr double kNearBoundary = 1e-6;

struct GenPolicy {
    std::uint64_t seed = 0;
    double max_radius = 0.9;
    double vertex_guard = kVertexGuard;
    int max_retries = 1000;
    bool require_simple = true;  ///< quadrilaterals only

    void validate() const;
};

/// Rejection bookkeeping for one generator call.
struct GenStats {
    int attempts = 0;
    std::map<std::string, int> rejections;
};

class GeneratorExhausted : public GyroError {
public:
    GeneratorExhausted(const std::string& what, GenStats stats)
        : GyroError(ErrorKind::GeneratorExhausted, what), stats_(std::move(stats)) {}

    const GenStats& stats() const noexcept { return stats_; }

private:
    GenStats stats_;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Area-uniform point of the Euclidean disc |z| <= radius.
    Complex in_disc(double radius);

private:
    std::mt19937_64 engine_;
};

/// Seed of case `index` in a campaign with base seed `seed` (SplitMix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct TriangleCase {
    TriangleConfig config;
    DiscPoint P, Q;  ///< transversal = gyroline_through(P, Q)
    Gyroline line() const { return gyroline_through(P, Q); }
    GenStats stats;
};

struct QuadCase {
    QuadConfig config;
    DiscPoint P, Q;
    Gyroline line() const { return gyroline_through(P, Q); }
    bool diagonal_meets = true;  ///< diagonal DB meets the transversal inside the ball
    GenStats stats;
};

struct CevianCase {
    TriangleConfig config;
    double t = 0.5;  ///< D = gyroline_point(B, C, t)
    DiscPoint D;
    DiscPoint P, Q;
    Gyroline line() const { return gyroline_through(P, Q); }
    GenStats stats;
};

TriangleCase gen_triangle_transversal(const GenPolicy& policy);
QuadCase gen_quad_transversal(const GenPolicy& policy);
CevianCase gen_cevian_config(const GenPolicy& policy);

/// True iff non-adjacent sides AB/CD and BC/DA do not cross as segments.
bool is_simple(const QuadConfig& quad);

}  // namespace gyro
