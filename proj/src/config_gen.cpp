#include "gyro/config_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace gyro {

namespace {

// Transversal anchor points closer than this (gyrodistance) are redrawn.
constexpr double kMinAnchorSeparation = 1e-3;

class Rejected {
public:
    explicit Rejected(std::string reason) : reason(std::move(reason)) {}
    std::string reason;
};

void check_boundary(const MenelausReport& report, double s) {
    for (const auto& hit : report.intersections) {
        if (std::abs(hit.point.z()) > (1.0 - kNearBoundary) * s) throw Rejected("near-boundary");
    }
}

struct Anchors {
    DiscPoint P, Q;
};

Anchors draw_anchors(Rng& rng, double radius) {
    const DiscPoint p(rng.in_disc(radius));
    const DiscPoint q(rng.in_disc(radius));
    if (hyp_distance(p, q).v < kMinAnchorSeparation) throw Rejected("anchor-separation");
    return {p, q};
}

// Runs attempt() until it succeeds, counting each failure reason.
template <typename Result, typename Attempt>
Result sample(const GenPolicy& policy, const char* what, Attempt attempt) {
    policy.validate();
    Rng rng(policy.seed);
    GenStats stats;
    while (stats.attempts < policy.max_retries) {
        ++stats.attempts;
        try {
            Result result = attempt(rng, stats);
            result.stats = stats;
            return result;
        } catch (const Rejected& r) {
            ++stats.rejections[r.reason];
        } catch (const GyroError& e) {
            ++stats.rejections[std::string(to_string(e.kind()))];
        }
    }
    std::string msg = std::string(what) + ": retry budget of " + std::to_string(policy.max_retries) +
                      " exhausted (";
    bool first = true;
    for (const auto& [reason, count] : stats.rejections) {
        msg += (first ? "" : ", ") + reason + "=" + std::to_string(count);
        first = false;
    }
    msg += ")";
    throw GeneratorExhausted(msg, stats);
}

bool segments_cross(const DiscPoint& a, const DiscPoint& b, const DiscPoint& c, const DiscPoint& d) {
    const auto hit = intersect(gyroline_through(a, b), gyroline_through(c, d));
    return hit && on_segment(a, b, *hit) && on_segment(c, d, *hit);
}

}  // namespace

void GenPolicy::validate() const {
    if (!(max_radius > 0.0 && max_radius < 1.0)) throw GyroError(ErrorKind::Domain, "max_radius must lie in (0, 1)");
    if (!(vertex_guard > 0.0)) throw GyroError(ErrorKind::Domain, "vertex_guard must be positive");
    if (max_retries < 1) throw GyroError(ErrorKind::Domain, "max_retries must be positive");
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Complex Rng::in_disc(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, theta);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

bool is_simple(const QuadConfig& quad) {
    try {
        return !segments_cross(quad.A, quad.B, quad.C, quad.D) && !segments_cross(quad.B, quad.C, quad.D, quad.A);
    } catch (const GyroError&) {
        return false;
    }
}

TriangleCase gen_triangle_transversal(const GenPolicy& policy) {
    return sample<TriangleCase>(policy, "triangle generator", [&](Rng& rng, GenStats&) {
        const Anchors line = draw_anchors(rng, policy.max_radius);
        const TriangleConfig cfg{DiscPoint(rng.in_disc(policy.max_radius)), DiscPoint(rng.in_disc(policy.max_radius)),
                                 DiscPoint(rng.in_disc(policy.max_radius))};
        const MenelausReport report = triangle_menelaus(cfg, gyroline_through(line.P, line.Q), policy.vertex_guard);
        check_boundary(report, 1.0);
        return TriangleCase{cfg, line.P, line.Q, {}};
    });
}

QuadCase gen_quad_transversal(const GenPolicy& policy) {
    const int diagonal_budget = std::max(1, policy.max_retries / 2);
    return sample<QuadCase>(policy, "quadrilateral generator", [&](Rng& rng, GenStats& stats) {
        const Anchors line = draw_anchors(rng, policy.max_radius);
        std::array<Complex, 4> v{rng.in_disc(policy.max_radius), rng.in_disc(policy.max_radius),
                                 rng.in_disc(policy.max_radius), rng.in_disc(policy.max_radius)};
        if (policy.require_simple) {
            // Angular order around the centroid makes most draws simple.
            const Complex centroid = (v[0] + v[1] + v[2] + v[3]) / 4.0;
            std::sort(v.begin(), v.end(),
                      [&](Complex a, Complex b) { return std::arg(a - centroid) < std::arg(b - centroid); });
        }
        const QuadConfig cfg{DiscPoint(v[0]), DiscPoint(v[1]), DiscPoint(v[2]), DiscPoint(v[3])};
        cfg.validate();
        if (policy.require_simple && !is_simple(cfg)) throw Rejected("not-simple");
        const MenelausReport report = quad_menelaus(cfg, gyroline_through(line.P, line.Q), policy.vertex_guard);
        check_boundary(report, 1.0);
        const bool meets = report.decomposition.has_value();
        if (!meets && stats.attempts < diagonal_budget) throw Rejected("diagonal-misses");
        return QuadCase{cfg, line.P, line.Q, meets, {}};
    });
}

CevianCase gen_cevian_config(const GenPolicy& policy) {
    return sample<CevianCase>(policy, "cevian generator", [&](Rng& rng, GenStats&) {
        const Anchors line = draw_anchors(rng, policy.max_radius);
        const TriangleConfig cfg{DiscPoint(rng.in_disc(policy.max_radius)), DiscPoint(rng.in_disc(policy.max_radius)),
                                 DiscPoint(rng.in_disc(policy.max_radius))};
        const double t = rng.uniform(0.1, 0.9);
        cfg.validate();
        const DiscPoint D = gyroline_point(cfg.B, cfg.C, t);
        const Gyroline l = gyroline_through(line.P, line.Q);
        const MenelausReport report = transversal_product(cfg, D, l, policy.vertex_guard);
        check_boundary(report, 1.0);
        // The quadrilateral cross-check must be evaluable as well.
        check_boundary(transversal_via_quad(cfg, D, l, policy.vertex_guard), 1.0);
        return CevianCase{cfg, t, D, line.P, line.Q, {}};
    });
}

}  // namespace gyro
