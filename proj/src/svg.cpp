#include "gyro/svg.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace gyro {

namespace {

constexpr double kDiscPixels = 500.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Screen {
    double s;
    double x(Complex z) const { return kDiscPixels * z.real() / s; }
    double y(Complex z) const { return -kDiscPixels * z.imag() / s; }
};

std::string path_data(const Gyroline& line, const Screen& screen) {
    const auto [e1, e2] = line.ideal_endpoints();
    std::ostringstream d;
    d << "M " << num(screen.x(e1)) << ' ' << num(screen.y(e1)) << ' ';
    if (line.is_diameter()) {
        d << "L " << num(screen.x(e2)) << ' ' << num(screen.y(e2));
        return d.str();
    }
    const Arc& arc = *line.as_arc();
    const double cx = screen.x(arc.center), cy = screen.y(arc.center);
    const double cross = (screen.x(e1) - cx) * (screen.y(e2) - cy) - (screen.y(e1) - cy) * (screen.x(e2) - cx);
    const double r = kDiscPixels * arc.radius / screen.s;
    d << "A " << num(r) << ' ' << num(r) << " 0 0 " << (cross > 0.0 ? 1 : 0) << ' ' << num(screen.x(e2)) << ' '
      << num(screen.y(e2));
    return d.str();
}

std::string pair_key(const std::string& a, const std::string& b) { return a < b ? a + "|" + b : b + "|" + a; }

}  // namespace

std::string render_svg(const scene::Model& model) {
    const Screen screen{model.ball.s()};
    const double half = kDiscPixels + 50.0;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(2 * half) << "\" height=\"" << num(2 * half)
        << "\" viewBox=\"" << num(-half) << ' ' << num(-half) << ' ' << num(2 * half) << ' ' << num(2 * half)
        << "\">\n";
    out << "<circle class=\"boundary\" cx=\"0.000\" cy=\"0.000\" r=\"" << num(kDiscPixels)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

    std::set<std::string> drawn;  // point-name pairs already drawn
    std::set<std::string> transversals;
    for (const auto& t : model.triangles) transversals.insert(t.line);
    for (const auto& q : model.quads) transversals.insert(q.line);

    auto side = [&](const std::string& a, const std::string& b, const DiscPoint& p, const DiscPoint& q) {
        if (!drawn.insert(pair_key(a, b)).second) return;
        out << "<path class=\"side\" d=\"" << path_data(gyroline_through(p, q), screen)
            << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
    };
    for (const auto& t : model.triangles) {
        side(t.a, t.b, t.config.A, t.config.B);
        side(t.b, t.c, t.config.B, t.config.C);
        side(t.c, t.a, t.config.C, t.config.A);
    }
    for (const auto& q : model.quads) {
        side(q.a, q.b, q.config.A, q.config.B);
        side(q.b, q.c, q.config.B, q.config.C);
        side(q.c, q.d, q.config.C, q.config.D);
        side(q.d, q.a, q.config.D, q.config.A);
    }
    for (const auto& l : model.lines) {
        const bool highlighted = transversals.count(l.name) > 0;
        if (!highlighted && !drawn.insert(pair_key(l.p_name, l.q_name)).second) continue;
        out << "<path class=\"" << (highlighted ? "transversal" : "gyroline") << "\" d=\""
            << path_data(l.line, screen) << "\" fill=\"none\" stroke=\"" << (highlighted ? "#d62728" : "#1f77b4")
            << "\" stroke-width=\"" << (highlighted ? "2.5" : "1.5") << "\"/>\n";
    }

    auto hit = [&](const Gyroline& sideline, const Gyroline& transversal) {
        try {
            if (const auto p = intersect(sideline, transversal)) {
                out << "<circle class=\"intersection\" cx=\"" << num(screen.x(p->z())) << "\" cy=\""
                    << num(screen.y(p->z())) << "\" r=\"4\" fill=\"white\" stroke=\"#d62728\"/>\n";
            }
        } catch (const GyroError&) {
        }
    };
    for (const auto& t : model.triangles) {
        hit(gyroline_through(t.config.A, t.config.B), t.transversal);
        hit(gyroline_through(t.config.B, t.config.C), t.transversal);
        hit(gyroline_through(t.config.C, t.config.A), t.transversal);
    }
    for (const auto& q : model.quads) {
        hit(gyroline_through(q.config.A, q.config.B), q.transversal);
        hit(gyroline_through(q.config.B, q.config.C), q.transversal);
        hit(gyroline_through(q.config.C, q.config.D), q.transversal);
        hit(gyroline_through(q.config.D, q.config.A), q.transversal);
    }

    for (const auto& name : model.point_order) {
        const DiscPoint& p = model.points.at(name);
        const double x = screen.x(p.z()), y = screen.y(p.z());
        out << "<g class=\"marker\"><circle class=\"point\" cx=\"" << num(x) << "\" cy=\"" << num(y)
            << "\" r=\"4\" fill=\"black\"/><text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6)
            << "\" font-size=\"16\">" << name << "</text></g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gyro
