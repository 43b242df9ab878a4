#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gyro/campaign.hpp"
#include "gyro/config_gen.hpp"
#include "gyro/gyroline.hpp"
#include "gyro/menelaus.hpp"
#include "gyro/mobius.hpp"
#include "gyro/report_json.hpp"
#include "gyro/scene.hpp"
#include "gyro/svg.hpp"

namespace py = pybind11;
using namespace gyro;

namespace {

// Reports cross the boundary as plain dicts with the same layout as the CLI JSON.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

DiscPoint pt(Complex z, double s) { return DiscPoint(z, BallParam(s)); }

Gyroline line_through(Complex p, Complex q, double s) { return gyroline_through(pt(p, s), pt(q, s)); }

py::object outcomes_to_python(const std::vector<scene::AssertionOutcome>& outcomes) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& a : outcomes) {
        nlohmann::json figs = nlohmann::json::array();
        for (const auto& f : a.figures) {
            nlohmann::json jf{{"figure", f.figure}, {"passed", f.passed}, {"deviation", f.deviation}};
            if (f.recovery_gap) jf["recovery_gap"] = *f.recovery_gap;
            if (!f.error.empty()) jf["error"] = f.error;
            if (f.report) jf["report"] = to_json(*f.report);
            figs.push_back(std::move(jf));
        }
        out.push_back({{"theorem", std::string(scene::to_string(a.assertion.theorem))},
                       {"bound", a.assertion.bound},
                       {"passed", a.passed},
                       {"figures", std::move(figs)}});
    }
    return to_python(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Möbius gyrovector arithmetic and Menelaus-type identities in the Poincaré disc";

    static py::exception<GyroError> gyro_error(m, "GyroError", PyExc_ValueError);
    static py::exception<scene::ParseError> parse_error(m, "SceneError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const scene::ParseError& e) {
            std::string msg;
            for (const auto& d : e.diagnostics()) msg += (msg.empty() ? "" : "\n") + d.format();
            py::set_error(parse_error, msg.c_str());
        } catch (const GyroError& e) {
            py::set_error(gyro_error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def("mobius_add", [](Complex a, Complex b, double s) { return mobius_add(pt(a, s), pt(b, s)).z(); },
          py::arg("a"), py::arg("b"), py::arg("s") = 1.0);
    m.def("mobius_neg", [](Complex a, double s) { return mobius_neg(pt(a, s)).z(); }, py::arg("a"),
          py::arg("s") = 1.0);
    m.def("gyr", [](Complex a, Complex b, double s) { return gyr(pt(a, s), pt(b, s)).u; }, py::arg("a"),
          py::arg("b"), py::arg("s") = 1.0);
    m.def("scalar_mul", [](double r, Complex a, double s) { return mobius_scalar_mul(r, pt(a, s)).z(); },
          py::arg("r"), py::arg("a"), py::arg("s") = 1.0);
    m.def(
        "distance",
        [](Complex a, Complex b, double s) {
            const GammaLength d = hyp_distance(pt(a, s), pt(b, s));
            return py::make_tuple(d.v, d.v_gamma);
        },
        py::arg("a"), py::arg("b"), py::arg("s") = 1.0, "(v, v_gamma) for the gyrodistance between a and b");
    m.def("gamma_correct", [](double v, double s) { return gamma_correct(v, BallParam(s)).v_gamma; }, py::arg("v"),
          py::arg("s") = 1.0);
    m.def("gyroline_point", [](Complex a, Complex b, double t, double s) { return gyroline_point(pt(a, s), pt(b, s), t).z(); },
          py::arg("a"), py::arg("b"), py::arg("t"), py::arg("s") = 1.0);

    m.def("gyroline_through", [](Complex a, Complex b, double s) { return to_python(to_json(line_through(a, b, s))); },
          py::arg("a"), py::arg("b"), py::arg("s") = 1.0);
    m.def(
        "intersect",
        [](Complex a, Complex b, Complex p, Complex q, double s) -> std::optional<Complex> {
            const auto hit = intersect(line_through(a, b, s), line_through(p, q, s));
            if (!hit) return std::nullopt;
            return hit->z();
        },
        py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"), py::arg("s") = 1.0,
        "Interior intersection of gyrolines ab and pq, or None");
    m.def(
        "collinear",
        [](const std::vector<Complex>& zs, double s) {
            std::vector<DiscPoint> pts;
            for (Complex z : zs) pts.push_back(pt(z, s));
            return collinear(pts);
        },
        py::arg("points"), py::arg("s") = 1.0);

    m.def(
        "triangle_menelaus",
        [](Complex A, Complex B, Complex C, Complex P, Complex Q, double s) {
            return to_python(to_json(triangle_menelaus({pt(A, s), pt(B, s), pt(C, s)}, line_through(P, Q, s))));
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("P"), py::arg("Q"), py::arg("s") = 1.0,
        "Triangle ABC cut by the gyroline PQ");
    m.def(
        "quad_menelaus",
        [](Complex A, Complex B, Complex C, Complex D, Complex P, Complex Q, double s) {
            return to_python(
                to_json(quad_menelaus({pt(A, s), pt(B, s), pt(C, s), pt(D, s)}, line_through(P, Q, s))));
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("P"), py::arg("Q"), py::arg("s") = 1.0,
        "Quadrilateral ABCD cut by the gyroline PQ");
    m.def(
        "converse_check",
        [](Complex A, Complex B, Complex C, Complex D, Complex X, Complex Z, Complex W, double s) {
            const ConverseResult r =
                converse_check({pt(A, s), pt(B, s), pt(C, s), pt(D, s)}, pt(X, s), pt(Z, s), pt(W, s));
            py::dict out;
            out["Y"] = r.Y.z();
            out["Y_from_ratio"] = r.Y_from_ratio.z();
            out["recovery_gap"] = r.recovery_gap;
            out["report"] = to_python(to_json(r.report));
            return out;
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("X"), py::arg("Z"), py::arg("W"),
        py::arg("s") = 1.0);
    m.def(
        "transversal_product",
        [](Complex A, Complex B, Complex C, double t, Complex P, Complex Q, double s) {
            const TriangleConfig cfg{pt(A, s), pt(B, s), pt(C, s)};
            return to_python(to_json(transversal_product(cfg, gyroline_point(cfg.B, cfg.C, t), line_through(P, Q, s))));
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("t"), py::arg("P"), py::arg("Q"), py::arg("s") = 1.0,
        "Triangle ABC with D = gyroline_point(B, C, t), cut by the gyroline PQ");
    m.def(
        "f_eval",
        [](double x, double b) {
            const FValue v = f_eval(x, b);
            return py::make_tuple(v.gamma_form, v.closed_form);
        },
        py::arg("x"), py::arg("b"));
    m.def(
        "euclidean_limit_sweep",
        [](Complex A, Complex B, Complex C, Complex D, Complex P, Complex Q, const std::vector<double>& s_values) {
            py::list rows;
            for (const auto& r : euclidean_limit_sweep({A, B, C, D, P, Q}, s_values)) {
                rows.append(py::make_tuple(r.s, r.gyro_deviation, r.euclidean_deviation));
            }
            return rows;
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("P"), py::arg("Q"),
        py::arg("s_values") = std::vector<double>{10.0, 100.0, 1000.0, 10000.0},
        "Rows of (s, gyro deviation, Euclidean deviation)");

    m.def(
        "run_campaign",
        [](const std::string& theorem, std::size_t n, std::uint64_t seed, double max_radius, double tolerance,
           bool include_cases) {
            const auto kind = campaign_from_string(theorem);
            if (!kind) throw py::value_error("theorem must be one of t2, t3, t5, t4-converse");
            GenPolicy policy{seed};
            policy.max_radius = max_radius;
            return to_python(to_json(run_campaign(*kind, n, policy, tolerance), include_cases));
        },
        py::arg("theorem"), py::arg("n") = 100, py::arg("seed") = 0, py::arg("max_radius") = 0.9,
        py::arg("tolerance") = kVerificationTolerance, py::arg("include_cases") = false);

    m.def("canonical_scene", [](const std::string& text) { return scene::unparse(scene::parse(text)); },
          py::arg("text"), "Parses a .gyro scene and returns its canonical text");
    m.def("verify_scene", [](const std::string& text) { return outcomes_to_python(scene::execute(scene::resolve(scene::parse(text)))); },
          py::arg("text"), "Executes the assertions of a .gyro scene");
    m.def("render_svg", [](const std::string& text) { return render_svg(scene::resolve(scene::parse(text))); },
          py::arg("text"));
}
