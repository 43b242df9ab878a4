#pragma once

// Evaluators for gamma-corrected Menelaus products on gyrotriangles and
// gyroquadrilaterals, the converse collinearity check, the transversal
// identity for a cevian, and the large-s Euclidean limit.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/gyroline.hpp"
#include "gyro/mobius.hpp"

namespace gyro {

inline constexpr double kVerificationTolerance = 1e-9;
inline constexpr double kStressTolerance = 1e-6;
inline constexpr double kVertexGuard = 1e-6;

enum class Theorem { Triangle, Quadrilateral, Converse, Transversal };

/// "T2", "T3", "T4", "T5".
std::string_view theorem_code(Theorem theorem) noexcept;

struct TriangleConfig {
    DiscPoint A, B, C;

    /// Throws Degenerate for coincident or collinear vertices. Tolerances are
    /// the module defaults times `scale`.
    void validate(double scale = 1.0) const;
};

struct QuadConfig {
    DiscPoint A, B, C, D;

    /// Throws Degenerate for coincident vertices or three consecutive collinear ones.
    void validate(double scale = 1.0) const;
};

struct RatioTerm {
    std::string label;  ///< e.g. "AX/BX"
    GammaLength numerator;
    GammaLength denominator;
    double ratio = 0.0;  ///< numerator.v_gamma / denominator.v_gamma
};

struct SideIntersection {
    std::string side;  ///< e.g. "AB"
    std::string label; ///< e.g. "X"
    DiscPoint point;
    bool interior = false;
};

/// The auxiliary point T on the diagonal DB and the two triangle sub-products.
struct QuadDecomposition {
    DiscPoint T;
    double abd_product = 0.0;  ///< (AX/BX)(BT/DT)(DW/AW)
    double bcd_product = 0.0;  ///< (DT/BT)(CZ/DZ)(BY/CY)
};

struct MenelausReport {
    Theorem theorem = Theorem::Triangle;
    std::vector<RatioTerm> ratios;
    double product = 1.0;
    double deviation = 0.0;
    std::vector<SideIntersection> intersections;
    std::optional<QuadDecomposition> decomposition;
};

/// Product of Menelaus ratios, one per side of triangle ABC cut by line.
/// Sides are full gyrolines; the report flags segment-interior intersections.
MenelausReport triangle_menelaus(const TriangleConfig& cfg, const Gyroline& line,
                                 double vertex_guard = kVertexGuard);

MenelausReport quad_menelaus(const QuadConfig& cfg, const Gyroline& line,
                             double vertex_guard = kVertexGuard);

/// Four-ratio quadrilateral product from explicit points X∈AB, Y∈BC, Z∈CD, W∈DA.
MenelausReport quad_product(const QuadConfig& cfg, const DiscPoint& X, const DiscPoint& Y,
                            const DiscPoint& Z, const DiscPoint& W);

struct ConverseResult {
    DiscPoint Y;             ///< common gyroline of X, Z, W cut with BC
    DiscPoint Y_from_ratio;  ///< Y recovered by inverting f on the required ratio
    double recovery_gap = 0.0;  ///< gyrodistance between the two derivations
    MenelausReport report;
};

ConverseResult converse_check(const QuadConfig& cfg, const DiscPoint& X, const DiscPoint& Z,
                              const DiscPoint& W, double incidence_tol = kIncidenceTolerance);

/// f(x) = x/(1-x²) : (b⊖x)/(1-(b⊖x)²) evaluated from the gamma ratio and from
/// the closed form x(1-b²)/((b-x)(1-bx)).
struct FValue {
    double gamma_form = 0.0;
    double closed_form = 0.0;
};

FValue f_eval(double x, double b);

/// f(x) - f(y) minus b(1-b²)(1-xy)(x-y)/((b-x)(1-bx)(b-y)(1-by)).
double f_difference_residual(double x, double y, double b);

/// Monotone branches of f on (-1, 1) \ {0, b} by sign of f.
enum class FBranch {
    BeyondStart,  ///< x in (-1, 0]: point beyond B
    Interior,     ///< x in [0, b): point between B and C
    BeyondEnd,    ///< x in (b, 1): point beyond C
};

/// Solves |f(x)| = target on a branch by bisection. Throws Domain when the
/// branch does not attain the target.
double f_inverse(double target, double b, FBranch branch);

MenelausReport transversal_product(const TriangleConfig& cfg, const DiscPoint& D, const Gyroline& line,
                                   double vertex_guard = kVertexGuard);

/// The transversal product recomputed as the quadrilateral product of BCNM cut by
/// gyroline AD, which meets its sides at D, A, P and A.
MenelausReport transversal_via_quad(const TriangleConfig& cfg, const DiscPoint& D, const Gyroline& line,
                                    double vertex_guard = kVertexGuard);

/// Quadrilateral and transversal given as raw coordinates, re-embedded in each ball.
struct EuclideanQuad {
    Complex A, B, C, D;
    Complex P, Q;  ///< two points defining the transversal
};

struct LimitRow {
    double s = 1.0;
    double gyro_deviation = 0.0;
    double euclidean_deviation = 0.0;
};

std::vector<LimitRow> euclidean_limit_sweep(const EuclideanQuad& config, const std::vector<double>& s_values);

/// Least-squares slope of log(euclidean deviation) against log(s).
double loglog_slope(const std::vector<LimitRow>& rows);

}  // namespace gyro
