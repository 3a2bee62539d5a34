#include "burau/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace burau {
namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string hsl_hex(int hue, double sat, double light) {
    const double c = (1 - std::fabs(2 * light - 1)) * sat;
    const double hp = hue / 60.0;
    const double x = c * (1 - std::fabs(std::fmod(hp, 2.0) - 1));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp)) {
        case 0: r = c, g = x; break;
        case 1: r = x, g = c; break;
        case 2: g = c, b = x; break;
        case 3: g = x, b = c; break;
        case 4: r = x, b = c; break;
        default: r = c, b = x; break;
    }
    const double m = light - c / 2;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((r + m) * 255)),
                  static_cast<int>(std::lround((g + m) * 255)), static_cast<int>(std::lround((b + m) * 255)));
    return buf;
}

double to_double(const Fraction& f) { return static_cast<double>(Rational(f.num, f.den)); }

}  // namespace

std::string orbit_color(const OrbitClass& c) {
    if (c.singleton) return kSingletonColor;
    if (c.n == 1) return kPrincipalColor;
    const BigInt h = (c.n * 137 + c.m * 59) % 360;
    return hsl_hex(static_cast<int>(h), 0.65, 0.55);
}

std::vector<AffinePoint> grid_points(const OrbitMapSpec& spec) {
    if (spec.den < 1) throw std::invalid_argument("grid denominator must be positive");
    std::vector<AffinePoint> out;
    for (std::int64_t i = spec.x_lo; i <= spec.x_hi; ++i) {
        for (std::int64_t j = spec.y_lo; j <= spec.y_hi; ++j) out.emplace_back(Fraction(i, spec.den), Fraction(j, spec.den));
    }
    return out;
}

std::string plot_orbits(const OrbitMapSpec& spec) {
    const std::uint64_t nx = spec.x_hi >= spec.x_lo ? static_cast<std::uint64_t>(spec.x_hi - spec.x_lo + 1) : 0;
    const std::uint64_t ny = spec.y_hi >= spec.y_lo ? static_cast<std::uint64_t>(spec.y_hi - spec.y_lo + 1) : 0;
    if (nx * ny > spec.max_points) throw std::invalid_argument("orbit map resolution exceeds the configured maximum");
    return plot_orbit_points(grid_points(spec), spec);
}

std::string plot_orbit_points(const std::vector<AffinePoint>& points, const OrbitMapSpec& spec) {
    if (points.size() > spec.max_points) throw std::invalid_argument("orbit map resolution exceeds the configured maximum");
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!points.empty()) {
        x0 = x1 = to_double(points.front().first);
        y0 = y1 = to_double(points.front().second);
        for (const auto& [x, y] : points) {
            x0 = std::min(x0, to_double(x)), x1 = std::max(x1, to_double(x));
            y0 = std::min(y0, to_double(y)), y1 = std::max(y1, to_double(y));
        }
    }
    const double pad = 10;
    const double size = spec.size_px;
    const double sx = x1 > x0 ? (size - 2 * pad) / (x1 - x0) : 0;
    const double sy = y1 > y0 ? (size - 2 * pad) / (y1 - y0) : 0;
    const auto px = [&](double x) { return sx == 0 ? size / 2 : pad + (x - x0) * sx; };
    const auto py = [&](double y) { return sy == 0 ? size / 2 : size - pad - (y - y0) * sy; };

    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Rational xa(points[a].first.num, points[a].first.den), xb(points[b].first.num, points[b].first.den);
        if (xa != xb) return xa < xb;
        return Rational(points[a].second.num, points[a].second.den) < Rational(points[b].second.num, points[b].second.den);
    });

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size_px << "\" height=\"" << spec.size_px
       << "\" viewBox=\"0 0 " << spec.size_px << ' ' << spec.size_px << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (std::size_t i : order) {
        const auto& [x, y] = points[i];
        const OrbitClass c = orbit_invariants(ProjPointQ(x.num * y.den, y.num * x.den, x.den * y.den));
        const std::string cx = fmt(px(to_double(x)));
        const std::string cy = fmt(py(to_double(y)));
        if (c.singleton) {
            os << "<rect class=\"singleton\" x=\"" << fmt(px(to_double(x)) - 3) << "\" y=\"" << fmt(py(to_double(y)) - 3)
               << "\" width=\"6\" height=\"6\" fill=\"none\" stroke=\"" << kSingletonColor << "\"/>\n";
            continue;
        }
        os << "<circle class=\"" << (c.n == 1 ? "principal" : "orbit") << "\" data-n=\"" << c.n << "\" data-m=\""
           << c.m << "\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\"" << orbit_color(c) << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string plot_density(const DensityCurve& curve, int width_px, int height_px) {
    if (curve.rows.empty()) throw std::invalid_argument("density plot needs at least one row");
    const double pad = 40;
    const double w = width_px, h = height_px;
    const double dmin = static_cast<double>(curve.rows.front().d);
    const double dmax = static_cast<double>(curve.rows.back().d);
    const auto px = [&](double d) { return dmax > dmin ? pad + (d - dmin) / (dmax - dmin) * (w - 2 * pad) : w / 2; };
    const auto py = [&](double r) { return h - pad - r * (h - 2 * pad); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\"" << height_px
       << "\" viewBox=\"0 0 " << width_px << ' ' << height_px << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    os << "<line class=\"axis\" x1=\"" << fmt(pad) << "\" y1=\"" << fmt(h - pad) << "\" x2=\"" << fmt(w - pad)
       << "\" y2=\"" << fmt(h - pad) << "\" stroke=\"#000000\"/>\n";
    os << "<line class=\"axis\" x1=\"" << fmt(pad) << "\" y1=\"" << fmt(pad) << "\" x2=\"" << fmt(pad) << "\" y2=\""
       << fmt(h - pad) << "\" stroke=\"#000000\"/>\n";
    os << "<line class=\"reference\" x1=\"" << fmt(pad) << "\" y1=\"" << fmt(py(0.75)) << "\" x2=\"" << fmt(w - pad)
       << "\" y2=\"" << fmt(py(0.75)) << "\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";
    os << "<text x=\"" << fmt(w - pad) << "\" y=\"" << fmt(py(0.75) - 4) << "\" font-size=\"10\" text-anchor=\"end\">0.75</text>\n";
    os << "<polyline class=\"density\" fill=\"none\" stroke=\"" << kPrincipalColor << "\" points=\"";
    for (std::size_t i = 0; i < curve.rows.size(); ++i) {
        const auto& r = curve.rows[i];
        if (i) os << ' ';
        os << fmt(px(static_cast<double>(r.d))) << ',' << fmt(py(static_cast<double>(r.ratio)));
    }
    os << "\"/>\n";
    if (curve.rows.size() == 1) {
        const auto& r = curve.rows.front();
        os << "<circle class=\"density\" cx=\"" << fmt(px(static_cast<double>(r.d))) << "\" cy=\""
           << fmt(py(static_cast<double>(r.ratio))) << "\" r=\"2\" fill=\"" << kPrincipalColor << "\"/>\n";
    }
    os << "<text x=\"" << fmt(w / 2) << "\" y=\"" << fmt(h - 8) << "\" font-size=\"12\" text-anchor=\"middle\">d</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace burau
