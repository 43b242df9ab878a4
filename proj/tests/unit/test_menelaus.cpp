#include <doctest.h>

#include <cmath>

#include "gyro/config_gen.hpp"
#include "gyro/menelaus.hpp"
#include "hp.hpp"
#include "support.hpp"

using namespace gyro;
using test::gap;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const GyroError& e) {
        return e.kind();
    }
    FAIL("expected a GyroError");
    return ErrorKind::Consistency;
}

const QuadConfig kQuad{DiscPoint(0.4, 0.0), DiscPoint(0.0, 0.3), DiscPoint(-0.45, 0.0), DiscPoint(-0.2, -0.3)};
const Gyroline kQuadLine = gyroline_through(DiscPoint(0.05, 0.1), DiscPoint(0.1, 0.3));

// Moves p by gyrodistance eps along the gyroline towards `toward` (away from it for eps < 0).
DiscPoint nudge(const DiscPoint& p, const DiscPoint& toward, double eps) {
    const Complex u = mobius_add(mobius_neg(p), toward).z();
    return mobius_add(p, DiscPoint(eps * u / std::abs(u)));
}

}  // namespace

TEST_CASE("triangle Menelaus on the seeded configuration") {
    const TriangleConfig cfg{DiscPoint(0.3, 0.0), DiscPoint(0.0, 0.4), DiscPoint(-0.35, 0.0)};
    const MenelausReport r = triangle_menelaus(cfg, gyroline_through(DiscPoint(0.1, 0.0), DiscPoint(0.05, 0.2)));
    CHECK(r.theorem == Theorem::Triangle);
    REQUIRE(r.ratios.size() == 3);
    CHECK(r.ratios[0].label == "AF/BF");
    CHECK(r.ratios[1].label == "BD/CD");
    CHECK(r.ratios[2].label == "CE/AE");
    CHECK(r.deviation <= 1e-9);
    CHECK(r.product > 0.0);
    REQUIRE(r.intersections.size() == 3);
    // High-precision intersection points. F is listed with side AB, D with BC, E with CA.
    auto find = [&](const char* label) {
        for (const auto& s : r.intersections)
            if (s.label == label) return s.point.z();
        FAIL("missing intersection");
        return Complex{};
    };
    CHECK(gap(find("D"), {0.0065483439432464505799, 0.41006940390817265194}) <= 1e-12);
    CHECK(gap(find("E"), {0.1, 0.0}) <= 1e-12);
    CHECK(gap(find("F"), {0.012446195259389241172, 0.37875480475631567155}) <= 1e-12);
}

TEST_CASE("triangle Menelaus rejects a transversal through a vertex") {
    const TriangleConfig cfg{DiscPoint(0.3, 0.0), DiscPoint(0.0, 0.4), DiscPoint(-0.35, 0.0)};
    CHECK(kind_of([&] { triangle_menelaus(cfg, gyroline_through(cfg.A, DiscPoint(0.05, 0.2))); }) ==
          ErrorKind::VertexProximity);
    const TriangleConfig flat{DiscPoint(0.1, 0.0), DiscPoint(0.2, 0.0), DiscPoint(0.5, 0.0)};
    CHECK(kind_of([&] { flat.validate(); }) == ErrorKind::Degenerate);
}

TEST_CASE("quadrilateral Menelaus against the oracle") {
    const MenelausReport r = quad_menelaus(kQuad, kQuadLine);
    CHECK(r.theorem == Theorem::Quadrilateral);
    REQUIRE(r.ratios.size() == 4);
    CHECK(r.deviation <= 1e-9);
    REQUIRE(r.intersections.size() == 4);
    CHECK(gap(r.intersections[0].point.z(), {0.081304194121357838241, 0.22624233060160503958}) <= 1e-12);
    CHECK(gap(r.intersections[1].point.z(), {0.13337911839912385927, 0.42883773470628175779}) <= 1e-12);
    CHECK(gap(r.intersections[2].point.z(), {-0.091544976171293870881, -0.52196737879161377909}) <= 1e-12);
    CHECK(gap(r.intersections[3].point.z(), {-0.018972392454676542187, -0.191594442112719362}) <= 1e-12);
    // Diagonal DB misses this transversal, so there is no auxiliary point.
    CHECK_FALSE(r.decomposition);
}

TEST_CASE("the seeded quadrilateral example has a transversal missing BC") {
    const Gyroline l = gyroline_through(DiscPoint(0.05, 0.1), DiscPoint(-0.1, 0.0));
    CHECK(kind_of([&] { quad_menelaus(kQuad, l); }) == ErrorKind::NonTransversal);
}

TEST_CASE("generated quadrilaterals telescope through T") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const QuadCase c = gen_quad_transversal(GenPolicy{derive_seed(1, i)});
        const MenelausReport r = quad_menelaus(c.config, c.line());
        CHECK(r.deviation <= 1e-9);
        if (r.decomposition) CHECK(std::abs(r.decomposition->abd_product * r.decomposition->bcd_product - r.product) <= 1e-12);
        const auto ref = oracle::quad(oracle::hc(c.config.A.z()), oracle::hc(c.config.B.z()), oracle::hc(c.config.C.z()),
                                      oracle::hc(c.config.D.z()), oracle::hc(c.P.z()), oracle::hc(c.Q.z()));
        CHECK(gap(r.intersections[1].point.z(), oracle::to_double(ref.Y)) <= 1e-9);
    }
}

TEST_CASE("converse recovers Y") {
    const MenelausReport fwd = quad_menelaus(kQuad, kQuadLine);
    const DiscPoint X = fwd.intersections[0].point, Y = fwd.intersections[1].point, Z = fwd.intersections[2].point,
                    W = fwd.intersections[3].point;
    const ConverseResult c = converse_check(kQuad, X, Z, W);
    CHECK(c.report.theorem == Theorem::Converse);
    CHECK(hyp_distance(c.Y, Y).v <= 1e-9);
    CHECK(hyp_distance(c.Y_from_ratio, Y).v <= 1e-9);
    CHECK(c.recovery_gap <= 1e-9);
    CHECK(c.report.deviation <= 1e-9);

    const DiscPoint W_off = nudge(W, kQuad.A, 1e-3);  // still on DA, now off the line
    CHECK(kind_of([&] { converse_check(kQuad, X, Z, W_off); }) == ErrorKind::NotCollinear);
    const DiscPoint W_bad = mobius_add(W, DiscPoint(0.0, 1e-3));
    CHECK(kind_of([&] { converse_check(kQuad, X, Z, W_bad); }) == ErrorKind::Incidence);
}

TEST_CASE("converse round-trips on generated quadrilaterals") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const QuadCase qc = gen_quad_transversal(GenPolicy{derive_seed(2, i)});
        const MenelausReport fwd = quad_menelaus(qc.config, qc.line());
        const ConverseResult c =
            converse_check(qc.config, fwd.intersections[0].point, fwd.intersections[2].point, fwd.intersections[3].point);
        const DiscPoint& Y = fwd.intersections[1].point;
        CHECK(hyp_distance(c.Y, Y).v <= 1e-9);
        CHECK(hyp_distance(c.Y_from_ratio, Y).v <= 1e-9);
    }
}

TEST_CASE("displacing Y along BC breaks the product") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const QuadCase qc = gen_quad_transversal(GenPolicy{derive_seed(3, i)});
        const MenelausReport fwd = quad_menelaus(qc.config, qc.line());
        const auto& hits = fwd.intersections;
        // Step away from the nearer endpoint, so Y never crosses B or C.
        const DiscPoint& Y0 = hits[1].point;
        const bool c_nearer = hyp_distance(Y0, qc.config.C).v < hyp_distance(Y0, qc.config.B).v;
        const DiscPoint& nearer = c_nearer ? qc.config.C : qc.config.B;
        const DiscPoint& farther = c_nearer ? qc.config.B : qc.config.C;
        const double room = hits[1].interior ? hyp_distance(Y0, farther).v : 1.0;
        double prev = 0.0;
        for (double eps : {1e-4, 1e-3, 1e-2, 1e-1}) {
            if (eps >= room) break;
            const DiscPoint Y = nudge(Y0, nearer, -eps);
            const double dev = quad_product(qc.config, hits[0].point, Y, hits[2].point, hits[3].point).deviation;
            CHECK(dev > prev);
            prev = dev;
        }
    }
}

TEST_CASE("f evaluations") {
    CHECK(f_eval(0.0, 0.6).closed_form == 0.0);
    CHECK(f_eval(0.0, 0.6).gamma_form == 0.0);
    const FValue v = f_eval(0.2, 0.6);
    CHECK(v.closed_form == doctest::Approx(0.36363636363636363636).epsilon(1e-15));
    CHECK(v.gamma_form == doctest::Approx(0.36363636363636363636).epsilon(1e-14));
    CHECK(std::abs(f_difference_residual(0.2, -0.1, 0.6)) <= 1e-14);
    CHECK(kind_of([] { f_eval(0.6, 0.6); }) == ErrorKind::Domain);
    CHECK(kind_of([] { f_eval(1.0, 0.6); }) == ErrorKind::Domain);
    CHECK(kind_of([] { f_eval(0.1, 1.0); }) == ErrorKind::Domain);
}

TEST_CASE("f is monotone on each branch and f_inverse inverts it") {
    for (double b : {0.2, 0.5, 0.8}) {
        double prev = -INFINITY;
        for (int i = 1; i < 2000; ++i) {
            const double x = -1.0 + (b + 1.0) * i / 2000.0;
            const double f = f_eval(x, b).closed_form;
            CHECK(f > prev);
            prev = f;
        }
        for (double x : {-0.7, -0.1, 0.3 * b, 0.9 * b, (1.0 + b) / 2.0}) {
            const double target = std::abs(f_eval(x, b).closed_form);
            const FBranch branch = x < 0.0 ? FBranch::BeyondStart : (x < b ? FBranch::Interior : FBranch::BeyondEnd);
            CHECK(f_inverse(target, b, branch) == doctest::Approx(x).epsilon(1e-12));
        }
    }
    CHECK(kind_of([] { f_inverse(100.0, 0.5, FBranch::BeyondStart); }) == ErrorKind::Domain);
}

TEST_CASE("transversal identity on the seeded configuration") {
    const TriangleConfig cfg{DiscPoint(0.1, 0.4), DiscPoint(-0.3, -0.1), DiscPoint(0.45, -0.15)};
    const DiscPoint D = gyroline_point(cfg.B, cfg.C, 0.4);
    CHECK(gap(D.z(), {0.010495157381947502786, -0.10605003173221042411}) <= 1e-14);
    const Gyroline l = gyroline_through(DiscPoint(-0.05, 0.15), DiscPoint(0.2, 0.1));
    const MenelausReport r = transversal_product(cfg, D, l);
    CHECK(r.theorem == Theorem::Transversal);
    CHECK(r.deviation <= 1e-9);
    REQUIRE(r.intersections.size() == 3);
    CHECK(gap(r.intersections[0].point.z(), {-0.074377191060368159362, 0.15586262064291258861}) <= 1e-12);
    CHECK(gap(r.intersections[1].point.z(), {0.26022606881760968656, 0.090661615354225794883}) <= 1e-12);
    CHECK(gap(r.intersections[2].point.z(), {0.050012575414858704665, 0.12780000712790667372}) <= 1e-12);
    CHECK(std::abs(transversal_via_quad(cfg, D, l).product - r.product) <= 1e-12);

    const DiscPoint off = mobius_add(D, DiscPoint(0.0, 0.01));
    CHECK(kind_of([&] { transversal_product(cfg, off, l); }) == ErrorKind::Incidence);
}

TEST_CASE("Euclidean limit") {
    const EuclideanQuad cfg{{0.4, 0.0}, {0.0, 0.3}, {-0.45, 0.0}, {-0.2, -0.3}, {0.05, 0.1}, {0.1, 0.3}};
    const auto rows = euclidean_limit_sweep(cfg, {10.0, 100.0, 1000.0, 10000.0});
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].gyro_deviation <= 1e-9);
        if (i > 0) CHECK(rows[i].euclidean_deviation < rows[i - 1].euclidean_deviation);
    }
    CHECK(rows.back().euclidean_deviation <= 1e-7);
    CHECK(loglog_slope(rows) == doctest::Approx(-2.0).epsilon(0.1));

    const auto far = euclidean_limit_sweep(cfg, {1e9});
    CHECK(far[0].euclidean_deviation <= 1e-9);
    CHECK(kind_of([&] { euclidean_limit_sweep(cfg, {0.4}); }) == ErrorKind::Domain);

    // |v_γ − v| = v³/(s² − v²) at v = 0.5, s = 10.
    const GammaLength g = gamma_correct(0.5, BallParam(10.0));
    CHECK(g.v_gamma - g.v == doctest::Approx(0.0012531328320802005).epsilon(1e-12));
}

TEST_CASE("products are invariant under disc isometries") {
    test::Sampler rng(21);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const QuadCase qc = gen_quad_transversal(GenPolicy{derive_seed(4, i)});
        const DiscIsometry iso{rng.point(0.5), rng.uniform(0.0, 6.28)};
        const QuadConfig moved{iso(qc.config.A), iso(qc.config.B), iso(qc.config.C), iso(qc.config.D)};
        const double before = quad_menelaus(qc.config, qc.line()).deviation;
        const double after = quad_menelaus(moved, gyroline_through(iso(qc.P), iso(qc.Q))).deviation;
        CHECK(std::abs(after - before) <= 1e-10);
    }
}

TEST_CASE("general ball quadrilateral") {
    const BallParam ball(3.0);
    const QuadConfig cfg{rescale(kQuad.A, ball), rescale(kQuad.B, ball), rescale(kQuad.C, ball), rescale(kQuad.D, ball)};
    const Gyroline l = gyroline_through(DiscPoint(0.15, 0.3, ball), DiscPoint(0.3, 0.9, ball));
    const MenelausReport r = quad_menelaus(cfg, l);
    CHECK(r.deviation <= 1e-9);
    CHECK(r.product == doctest::Approx(quad_menelaus(kQuad, kQuadLine).product).epsilon(1e-12));
}
