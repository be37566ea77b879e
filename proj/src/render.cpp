#include "cbsg/render.hpp"

#include <cmath>
#include <sstream>

#include "cbsg/polygon_semigroup.hpp"

namespace cbsg {

namespace {

constexpr double kScale = 14.0;
constexpr double kPad = 20.0;

struct Painter {
    std::ostringstream svg;
    double height;

    double X(double x) const { return kPad + kScale * x; }
    double Y(double y) const { return height - kPad - kScale * y; }

    void line(double x1, double y1, double x2, double y2, const char* color, double w,
              const char* dash = nullptr) {
        svg << "<line x1=\"" << X(x1) << "\" y1=\"" << Y(y1) << "\" x2=\"" << X(x2) << "\" y2=\""
            << Y(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << w << "\"";
        if (dash) svg << " stroke-dasharray=\"" << dash << "\"";
        svg << "/>\n";
    }
    void circle(double cx, double cy, double r, const char* stroke, const char* fill,
                double w = 1.0) {
        svg << "<circle cx=\"" << X(cx) << "\" cy=\"" << Y(cy) << "\" r=\"" << r * kScale
            << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\"" << w
            << "\"/>\n";
    }
    void dot(double cx, double cy, double rpx, const char* fill, const char* stroke = "none") {
        svg << "<circle cx=\"" << X(cx) << "\" cy=\"" << Y(cy) << "\" r=\"" << rpx
            << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }
    void poly(const std::vector<Vec2Q>& vs, const char* stroke, const char* fill, double w = 1.0) {
        svg << "<polygon points=\"";
        for (const auto& v : vs) svg << X(v.x.to_double()) << "," << Y(v.y.to_double()) << " ";
        svg << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\"" << w
            << "\"/>\n";
    }
};

}  // namespace

std::string render_svg(const Semigroup& sg, const RenderOptions& opt) {
    const long long wx = opt.window_x, wy = opt.window_y;
    double width = 2 * kPad + kScale * std::max<long long>(wx, 0);
    double height = 2 * kPad + kScale * std::max<long long>(wy, 0);
    Painter p;
    p.height = height;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    if (wx <= 0 || wy <= 0) {
        out << "</svg>\n";
        return out.str();
    }

    // Axes and extremal rays.
    p.line(0, 0, static_cast<double>(wx), 0, "#999", 1);
    p.line(0, 0, 0, static_cast<double>(wy), "#999", 1);
    auto ray_line = [&](const LatticePoint& d, const char* color) {
        double t = 1e18;
        if (d.x > 0) t = std::min(t, static_cast<double>(wx) / d.x);
        if (d.y > 0) t = std::min(t, static_cast<double>(wy) / d.y);
        p.line(0, 0, t * d.x, t * d.y, color, 1.2);
    };
    ray_line(sg.cone().dir1(), "#444");
    ray_line(sg.cone().dir2(), "#444");

    // Dilation chain while it still meets the window.
    if (is_circle(sg.body())) {
        const auto& c = as_circle(sg.body());
        double cx = c.center.x.to_double(), cy = c.center.y.to_double(), r = c.radius.to_double();
        for (long long k = 1; k * (cx - r) <= wx && k * (cy - r) <= wy && k < 400; ++k)
            p.circle(k * cx, k * cy, k * r, "#7a9cc6", "none", 0.8);
    } else {
        const auto& poly = as_polygon(sg.body());
        double minx = poly.vertices[0].x.to_double(), miny = poly.vertices[0].y.to_double();
        for (const auto& v : poly.vertices) {
            minx = std::min(minx, v.x.to_double());
            miny = std::min(miny, v.y.to_double());
        }
        for (long long k = 1; k * minx <= wx && k * miny <= wy && k < 400; ++k) {
            std::vector<Vec2Q> scaled;
            for (const auto& v : poly.vertices) scaled.push_back(Rational(k) * v);
            p.poly(scaled, "#7a9cc6", "none", 0.8);
        }
    }

    if (opt.skeleton && !is_circle(sg.body())) {
        Skeleton sk = polygon_skeleton(sg);
        for (const SkeletonSide* s : {&sk.side1, &sk.side2}) {
            if (!s->point_contact) continue;
            // Parallel line through the meeting points, one period of gap cells,
            // and the wedge outline.
            Vec2Q a = s->meet(0), b = s->meet(1);
            Vec2Q d = b - a;
            double t = 3.0 * std::max(wx, wy);
            p.line(a.x.to_double(), a.y.to_double(), a.x.to_double() + t * d.x.to_double(),
                   a.y.to_double() + t * d.y.to_double(), "#c28f2c", 1.0, "4,3");
            for (long long h = 0; h < s->period; ++h)
                p.poly(s->gap_cell(s->j + h), "#c28f2c", "rgba(194,143,44,0.25)", 0.7);
            if (s->wedge.size() >= 3) p.poly(s->wedge, "#8a62a8", "none", 0.9);
        }
        p.poly(sk.core, "#2e8b57", "none", 1.0);
        p.dot(sk.apex.x.to_double(), sk.apex.y.to_double(), 3.5, "#2e8b57");
    }

    // Lattice classification: members solid, cone gaps ringed, rest faint.
    for (long long x = 0; x <= wx; ++x)
        for (long long y = 0; y <= wy; ++y) {
            LatticePoint q{x, y};
            if (!sg.cone().in_cone(q)) {
                p.dot(static_cast<double>(x), static_cast<double>(y), 1.0, "#ddd");
            } else if (sg.member(q)) {
                p.dot(static_cast<double>(x), static_cast<double>(y), 2.2, "#1f3552");
            } else {
                p.dot(static_cast<double>(x), static_cast<double>(y), 2.6, "none", "#c0392b");
            }
        }

    out << p.svg.str() << "</svg>\n";
    return out.str();
}

}  // namespace cbsg
