#include "gyro/menelaus.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace gyro {

namespace {

void require_distinct(const DiscPoint& p, const DiscPoint& q, std::string_view names, double scale) {
    if (p.ball() != q.ball()) throw GyroError(ErrorKind::BallMismatch, "configuration mixes balls");
    if (points_equal(p, q, kPointTolerance * scale)) {
        throw GyroError(ErrorKind::Degenerate, "vertices " + std::string(names) + " coincide");
    }
}

void require_not_collinear(const DiscPoint& p, const DiscPoint& q, const DiscPoint& r,
                           std::string_view names, double scale) {
    const std::array<DiscPoint, 3> pts{p, q, r};
    if (collinear(pts, kIncidenceTolerance * scale)) {
        throw GyroError(ErrorKind::Degenerate, "vertices " + std::string(names) + " are collinear");
    }
}

void guard_vertex(const Gyroline& line, const DiscPoint& v, std::string_view name, double guard) {
    const double d = distance_to_line(line, v);
    if (!(d > guard * v.ball().s())) {
        std::ostringstream msg;
        msg << "transversal passes within " << d << " of vertex " << name;
        throw GyroError(ErrorKind::VertexProximity, msg.str());
    }
}

// Intersection of the transversal with the side pq, whose full gyroline is `carrier`.
SideIntersection cut_carrier(const Gyroline& line, const Gyroline& carrier, const DiscPoint& p, const DiscPoint& q,
                             std::string side, std::string label) {
    const auto hit = intersect(carrier, line);
    if (!hit) {
        throw GyroError(ErrorKind::NonTransversal, "transversal does not meet side " + side + " inside the ball");
    }
    return SideIntersection{std::move(side), std::move(label), *hit, on_segment(p, q, *hit)};
}

SideIntersection cut_side(const Gyroline& line, const DiscPoint& p, const DiscPoint& q,
                          std::string side, std::string label) {
    return cut_carrier(line, gyroline_through(p, q), p, q, std::move(side), std::move(label));
}

RatioTerm ratio(std::string label, const DiscPoint& num_from, const DiscPoint& num_to,
                const DiscPoint& den_from, const DiscPoint& den_to) {
    RatioTerm term{std::move(label), hyp_distance(num_from, num_to), hyp_distance(den_from, den_to), 0.0};
    if (!(term.numerator.v_gamma > 0.0) || !(term.denominator.v_gamma > 0.0) ||
        !std::isfinite(term.numerator.v_gamma) || !std::isfinite(term.denominator.v_gamma)) {
        throw GyroError(ErrorKind::Degenerate, "ratio " + term.label + " has a vanishing or non-finite length");
    }
    term.ratio = term.numerator.v_gamma / term.denominator.v_gamma;
    return term;
}

void finish(MenelausReport& report) {
    double product = 1.0;
    for (const auto& r : report.ratios) product *= r.ratio;
    report.product = product;
    report.deviation = std::abs(product - 1.0);
}

double closed_f(double x, double b) { return x * (1.0 - b * b) / ((b - x) * (1.0 - b * x)); }

}  // namespace

std::string_view theorem_code(Theorem theorem) noexcept {
    switch (theorem) {
        case Theorem::Triangle: return "T2";
        case Theorem::Quadrilateral: return "T3";
        case Theorem::Converse: return "T4";
        case Theorem::Transversal: return "T5";
    }
    return "T?";
}

void TriangleConfig::validate(double scale) const {
    require_distinct(A, B, "A,B", scale);
    require_distinct(B, C, "B,C", scale);
    require_distinct(C, A, "C,A", scale);
    require_not_collinear(A, B, C, "A,B,C", scale);
}

void QuadConfig::validate(double scale) const {
    require_distinct(A, B, "A,B", scale);
    require_distinct(A, C, "A,C", scale);
    require_distinct(A, D, "A,D", scale);
    require_distinct(B, C, "B,C", scale);
    require_distinct(B, D, "B,D", scale);
    require_distinct(C, D, "C,D", scale);
    require_not_collinear(A, B, C, "A,B,C", scale);
    require_not_collinear(B, C, D, "B,C,D", scale);
    require_not_collinear(C, D, A, "C,D,A", scale);
    require_not_collinear(D, A, B, "D,A,B", scale);
}

MenelausReport triangle_menelaus(const TriangleConfig& cfg, const Gyroline& line, double vertex_guard) {
    cfg.validate();
    guard_vertex(line, cfg.A, "A", vertex_guard);
    guard_vertex(line, cfg.B, "B", vertex_guard);
    guard_vertex(line, cfg.C, "C", vertex_guard);

    MenelausReport report;
    report.theorem = Theorem::Triangle;
    const auto d = cut_side(line, cfg.B, cfg.C, "BC", "D");
    const auto e = cut_side(line, cfg.C, cfg.A, "CA", "E");
    const auto f = cut_side(line, cfg.A, cfg.B, "AB", "F");
    report.ratios.push_back(ratio("AF/BF", cfg.A, f.point, cfg.B, f.point));
    report.ratios.push_back(ratio("BD/CD", cfg.B, d.point, cfg.C, d.point));
    report.ratios.push_back(ratio("CE/AE", cfg.C, e.point, cfg.A, e.point));
    report.intersections = {f, d, e};
    finish(report);
    return report;
}

MenelausReport quad_product(const QuadConfig& cfg, const DiscPoint& X, const DiscPoint& Y,
                            const DiscPoint& Z, const DiscPoint& W) {
    MenelausReport report;
    report.theorem = Theorem::Quadrilateral;
    report.ratios.push_back(ratio("AX/BX", cfg.A, X, cfg.B, X));
    report.ratios.push_back(ratio("BY/CY", cfg.B, Y, cfg.C, Y));
    report.ratios.push_back(ratio("CZ/DZ", cfg.C, Z, cfg.D, Z));
    report.ratios.push_back(ratio("DW/AW", cfg.D, W, cfg.A, W));
    report.intersections = {
        {"AB", "X", X, on_segment(cfg.A, cfg.B, X)},
        {"BC", "Y", Y, on_segment(cfg.B, cfg.C, Y)},
        {"CD", "Z", Z, on_segment(cfg.C, cfg.D, Z)},
        {"DA", "W", W, on_segment(cfg.D, cfg.A, W)},
    };
    finish(report);
    return report;
}

namespace {

// Degeneracy tolerances and the vertex guard are multiplied by `scale`, the
// configuration's extent relative to s when it is much smaller than the ball.
MenelausReport quad_menelaus_scaled(const QuadConfig& cfg, const Gyroline& line, double vertex_guard, double scale) {
    cfg.validate(scale);
    vertex_guard *= scale;
    guard_vertex(line, cfg.A, "A", vertex_guard);
    guard_vertex(line, cfg.B, "B", vertex_guard);
    guard_vertex(line, cfg.C, "C", vertex_guard);
    guard_vertex(line, cfg.D, "D", vertex_guard);

    const auto x = cut_side(line, cfg.A, cfg.B, "AB", "X");
    const auto y = cut_side(line, cfg.B, cfg.C, "BC", "Y");
    const auto z = cut_side(line, cfg.C, cfg.D, "CD", "Z");
    const auto w = cut_side(line, cfg.D, cfg.A, "DA", "W");
    MenelausReport report = quad_product(cfg, x.point, y.point, z.point, w.point);

    // Auxiliary point on the diagonal DB; absent when the diagonal misses the line.
    if (const auto t = intersect(gyroline_through(cfg.D, cfg.B), line)) {
        const RatioTerm bt_dt = ratio("BT/DT", cfg.B, *t, cfg.D, *t);
        const double r_ax = report.ratios[0].ratio;
        const double r_by = report.ratios[1].ratio;
        const double r_cz = report.ratios[2].ratio;
        const double r_dw = report.ratios[3].ratio;
        report.decomposition = QuadDecomposition{
            *t,
            r_ax * bt_dt.ratio * r_dw,
            (1.0 / bt_dt.ratio) * r_cz * r_by,
        };
    }
    return report;
}

}  // namespace

MenelausReport quad_menelaus(const QuadConfig& cfg, const Gyroline& line, double vertex_guard) {
    return quad_menelaus_scaled(cfg, line, vertex_guard, 1.0);
}

ConverseResult converse_check(const QuadConfig& cfg, const DiscPoint& X, const DiscPoint& Z,
                              const DiscPoint& W, double incidence_tol) {
    cfg.validate();
    if (!contains(gyroline_through(cfg.A, cfg.B), X, incidence_tol)) {
        throw GyroError(ErrorKind::Incidence, "X does not lie on gyroline AB");
    }
    if (!contains(gyroline_through(cfg.C, cfg.D), Z, incidence_tol)) {
        throw GyroError(ErrorKind::Incidence, "Z does not lie on gyroline CD");
    }
    if (!contains(gyroline_through(cfg.D, cfg.A), W, incidence_tol)) {
        throw GyroError(ErrorKind::Incidence, "W does not lie on gyroline DA");
    }
    const std::array<DiscPoint, 3> triple{X, Z, W};
    if (!collinear(triple, incidence_tol)) {
        throw GyroError(ErrorKind::NotCollinear, "X, Z, W are not collinear");
    }

    // The common gyroline through the most separated pair.
    const double xz = hyp_distance(X, Z).v;
    const double xw = hyp_distance(X, W).v;
    const double zw = hyp_distance(Z, W).v;
    const Gyroline line = (xz >= xw && xz >= zw) ? gyroline_through(X, Z)
                          : (xw >= zw)           ? gyroline_through(X, W)
                                                 : gyroline_through(Z, W);
    const auto y = intersect(gyroline_through(cfg.B, cfg.C), line);
    if (!y) throw GyroError(ErrorKind::NonTransversal, "the common gyroline of X, Z, W misses BC");

    ConverseResult result{*y, *y, 0.0, quad_product(cfg, X, *y, Z, W)};
    result.report.theorem = Theorem::Converse;

    // Independent route: the ratio BY/CY that closes the product, inverted through f.
    const double r_ax = result.report.ratios[0].ratio;
    const double r_cz = result.report.ratios[2].ratio;
    const double r_dw = result.report.ratios[3].ratio;
    const double target = 1.0 / (r_ax * r_cz * r_dw);
    // A gyroline crosses an even number of segment sides of a closed polygon.
    int interior = 0;
    for (const auto i : {0, 2, 3}) interior += result.report.intersections[i].interior ? 1 : 0;
    const FBranch branch = (interior % 2 == 1) ? FBranch::Interior
                           : (target < 1.0)    ? FBranch::BeyondStart
                                               : FBranch::BeyondEnd;
    const double s = cfg.B.ball().s();
    const Complex direction = unit::add(-cfg.B.unit(), cfg.C.unit());
    const double b = std::abs(direction);
    const double x = f_inverse(target, b, branch);
    result.Y_from_ratio = DiscPoint::from_unit(unit::add(cfg.B.unit(), x * (direction / b)), cfg.B.ball());
    result.recovery_gap = hyp_distance(result.Y, result.Y_from_ratio).v / s;
    return result;
}

FValue f_eval(double x, double b) {
    if (!(b > 0.0 && b < 1.0)) throw GyroError(ErrorKind::Domain, "f requires b in (0, 1)");
    if (!(x > -1.0 && x < 1.0)) throw GyroError(ErrorKind::Domain, "f requires x in (-1, 1)");
    if (x == b) throw GyroError(ErrorKind::Domain, "f has a pole at x = b");
    const auto gamma = [](double v) { return v / ((1.0 - v) * (1.0 + v)); };
    const double b_minus_x = (b - x) / (1.0 - b * x);
    return FValue{gamma(x) / gamma(b_minus_x), closed_f(x, b)};
}

double f_difference_residual(double x, double y, double b) {
    const double lhs = f_eval(x, b).closed_form - f_eval(y, b).closed_form;
    const double rhs = b * (1.0 - b * b) * (1.0 - x * y) /
                       ((b - x) * (1.0 - b * x) * (b - y) * (1.0 - b * y)) * (x - y);
    return lhs - rhs;
}

double f_inverse(double target, double b, FBranch branch) {
    if (!(b > 0.0 && b < 1.0)) throw GyroError(ErrorKind::Domain, "f requires b in (0, 1)");
    if (!(target >= 0.0) || !std::isfinite(target)) throw GyroError(ErrorKind::Domain, "target ratio must be finite and >= 0");
    double lo = 0.0, hi = 0.0, goal = target;
    switch (branch) {
        case FBranch::Interior:
            lo = 0.0;
            hi = b;
            break;
        case FBranch::BeyondStart:
            if (!(target < (1.0 - b) / (1.0 + b))) throw GyroError(ErrorKind::Domain, "target not attained before B");
            lo = -1.0;
            hi = 0.0;
            goal = -target;
            break;
        case FBranch::BeyondEnd:
            if (!(target > (1.0 + b) / (1.0 - b))) throw GyroError(ErrorKind::Domain, "target not attained beyond C");
            lo = b;
            hi = 1.0;
            goal = -target;
            break;
    }
    // f is increasing on (-1, b) and on (b, 1); the open ends are never evaluated.
    for (int i = 0; i < 2000; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (closed_f(mid, b) < goal) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

MenelausReport transversal_product(const TriangleConfig& cfg, const DiscPoint& D, const Gyroline& line,
                                   double vertex_guard) {
    cfg.validate();
    if (!contains(gyroline_through(cfg.B, cfg.C), D)) {
        throw GyroError(ErrorKind::Incidence, "D does not lie on gyroline BC");
    }
    const double s = D.ball().s();
    if (!(hyp_distance(cfg.B, D).v > vertex_guard * s) || !(hyp_distance(cfg.C, D).v > vertex_guard * s)) {
        throw GyroError(ErrorKind::Degenerate, "D coincides with an endpoint of BC");
    }
    guard_vertex(line, cfg.A, "A", vertex_guard);
    guard_vertex(line, cfg.B, "B", vertex_guard);
    guard_vertex(line, cfg.C, "C", vertex_guard);
    guard_vertex(line, D, "D", vertex_guard);

    const auto m = cut_side(line, cfg.A, cfg.B, "AB", "M");
    const auto n = cut_side(line, cfg.A, cfg.C, "AC", "N");
    const auto p = cut_side(line, cfg.A, D, "AD", "P");

    MenelausReport report;
    report.theorem = Theorem::Transversal;
    report.ratios.push_back(ratio("BD/CD", cfg.B, D, cfg.C, D));
    report.ratios.push_back(ratio("CA/NA", cfg.C, cfg.A, n.point, cfg.A));
    report.ratios.push_back(ratio("NP/MP", n.point, p.point, m.point, p.point));
    report.ratios.push_back(ratio("MA/BA", m.point, cfg.A, cfg.B, cfg.A));
    report.intersections = {m, n, p};
    finish(report);
    return report;
}

MenelausReport transversal_via_quad(const TriangleConfig& cfg, const DiscPoint& D, const Gyroline& line,
                                    double vertex_guard) {
    const MenelausReport direct = transversal_product(cfg, D, line, vertex_guard);
    const DiscPoint& M = direct.intersections[0].point;
    const DiscPoint& N = direct.intersections[1].point;
    const QuadConfig quad{cfg.B, cfg.C, N, M};
    quad.validate();
    const Gyroline ad = gyroline_through(cfg.A, D);
    guard_vertex(ad, quad.A, "B", vertex_guard);
    guard_vertex(ad, quad.B, "C", vertex_guard);
    guard_vertex(ad, quad.C, "N", vertex_guard);
    guard_vertex(ad, quad.D, "M", vertex_guard);
    // Gyroline AD meets side BC at D and sides CN, MB (on gyrolines CA, AB) at A by
    // construction; only P, on side NM (on l), has to be computed.
    const auto p = cut_carrier(ad, line, quad.C, quad.D, "NM", "P");
    return quad_product(quad, D, cfg.A, p.point, cfg.A);
}

std::vector<LimitRow> euclidean_limit_sweep(const EuclideanQuad& config, const std::vector<double>& s_values) {
    double extent = 0.0;
    for (const Complex z : {config.A, config.B, config.C, config.D, config.P, config.Q}) {
        extent = std::max(extent, std::abs(z));
    }
    std::vector<LimitRow> rows;
    rows.reserve(s_values.size());
    for (const double s : s_values) {
        const BallParam ball(s);
        if (!(extent < s)) {
            std::ostringstream msg;
            msg << "configuration extent " << extent << " does not fit the ball of radius " << s;
            throw GyroError(ErrorKind::Domain, msg.str());
        }
        const QuadConfig quad{DiscPoint(config.A, ball), DiscPoint(config.B, ball), DiscPoint(config.C, ball),
                              DiscPoint(config.D, ball)};
        const Gyroline line = gyroline_through(DiscPoint(config.P, ball), DiscPoint(config.Q, ball));
        const MenelausReport report = quad_menelaus_scaled(quad, line, kVertexGuard, std::min(1.0, extent / s));
        double plain = 1.0;
        for (const auto& r : report.ratios) plain *= r.numerator.v / r.denominator.v;
        rows.push_back(LimitRow{s, report.deviation, std::abs(plain - 1.0)});
    }
    return rows;
}

double loglog_slope(const std::vector<LimitRow>& rows) {
    if (rows.size() < 2) throw GyroError(ErrorKind::Domain, "slope fit needs at least two rows");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& row : rows) {
        if (!(row.euclidean_deviation > 0.0)) {
            throw GyroError(ErrorKind::Domain, "slope fit needs positive deviations");
        }
        const double lx = std::log(row.s);
        const double ly = std::log(row.euclidean_deviation);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(rows.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace gyro
