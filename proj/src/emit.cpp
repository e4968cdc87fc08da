#include "qbm/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qbm/errors.hpp"

namespace qbm {

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_evolve_csv(std::ostream& os, const std::vector<TrajectoryPoint>& traj) {
    os << "gamma_t,g,c,cprime,duan_lhs,separable\n";
    for (const TrajectoryPoint& pt : traj) {
        os << format_number(pt.t) << ',' << format_number(pt.rf.g) << ','
           << format_number(pt.rf.c) << ',' << format_number(pt.rf.cprime) << ','
           << format_number(pt.verdict.lhs) << ',' << (pt.verdict.separable ? 1 : 0) << '\n';
    }
}

void write_fig1_csv(std::ostream& os, const std::vector<double>& t,
                    const std::vector<double>& lhs_a, const std::vector<double>& lhs_b) {
    if (t.size() != lhs_a.size() || t.size() != lhs_b.size())
        throw DomainError("trajectory columns have mismatched lengths");
    os << "gamma_t,duan_lhs_A,duan_lhs_B\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        os << format_number(t[i]) << ',' << format_number(lhs_a[i]) << ','
           << format_number(lhs_b[i]) << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<double>& param,
                     const std::vector<double>& esd) {
    if (param.size() != esd.size()) throw DomainError("sweep columns have mismatched lengths");
    os << "param,esd_gamma_t\n";
    for (std::size_t i = 0; i < param.size(); ++i)
        os << format_number(param[i]) << ',' << format_number(esd[i]) << '\n';
}

void write_kernels_csv(std::ostream& os, const std::vector<double>& t,
                       const std::vector<KernelPoint>& pts, const std::optional<double>& v2) {
    if (t.size() != pts.size()) throw DomainError("kernel columns have mismatched lengths");
    os << "gamma_t,G,Gdot,s,sdot\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        os << format_number(t[i]) << ',' << format_number(pts[i].G) << ','
           << format_number(pts[i].Gdot) << ',' << format_number(pts[i].s) << ','
           << format_number(pts[i].sdot) << '\n';
    os << "v2=" << (v2 ? format_number(*v2) : std::string("divergent")) << '\n';
}

namespace {

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

}  // namespace

std::string fig1_svg(const std::vector<double>& t, const std::vector<double>& lhs_a,
                     const std::vector<double>& lhs_b) {
    if (t.size() != lhs_a.size() || t.size() != lhs_b.size() || t.size() < 2)
        throw DomainError("svg needs two aligned trajectories with at least two points");

    const double width = 840.0, height = 560.0;
    const double ml = 72.0, mr = 24.0, mt = 24.0, mb = 56.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    const double x_min = t.front(), x_max = t.back();
    double y_max = 0.55;
    for (double v : lhs_a) y_max = std::max(y_max, v);
    for (double v : lhs_b) y_max = std::max(y_max, v);
    y_max *= 1.05;
    const double y_min = 0.0;

    auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    auto py = [&](double y) { return mt + ph - (y - y_min) / (y_max - y_min) * ph; };

    auto polyline = [&](const std::vector<double>& ys, const char* color) {
        std::ostringstream p;
        p << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) p << ' ';
            p << fixed2(px(t[i])) << ',' << fixed2(py(ys[i]));
        }
        p << "\"/>\n";
        return p.str();
    };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    s << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // axes
    s << "<line x1=\"" << fixed2(ml) << "\" y1=\"" << fixed2(mt + ph) << "\" x2=\""
      << fixed2(ml + pw) << "\" y2=\"" << fixed2(mt + ph) << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << fixed2(ml) << "\" y1=\"" << fixed2(mt) << "\" x2=\"" << fixed2(ml)
      << "\" y2=\"" << fixed2(mt + ph) << "\" stroke=\"black\"/>\n";

    const int n_ticks = 5;
    for (int i = 0; i <= n_ticks; ++i) {
        const double xv = x_min + (x_max - x_min) * i / n_ticks;
        const double yv = y_min + (y_max - y_min) * i / n_ticks;
        s << "<line x1=\"" << fixed2(px(xv)) << "\" y1=\"" << fixed2(mt + ph) << "\" x2=\""
          << fixed2(px(xv)) << "\" y2=\"" << fixed2(mt + ph + 6) << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << fixed2(px(xv)) << "\" y=\"" << fixed2(mt + ph + 22)
          << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">"
          << tick_label(xv) << "</text>\n";
        s << "<line x1=\"" << fixed2(ml - 6) << "\" y1=\"" << fixed2(py(yv)) << "\" x2=\""
          << fixed2(ml) << "\" y2=\"" << fixed2(py(yv)) << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << fixed2(ml - 10) << "\" y=\"" << fixed2(py(yv) + 4)
          << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"end\">" << tick_label(yv)
          << "</text>\n";
    }

    s << "<text x=\"" << fixed2(ml + pw / 2) << "\" y=\"" << fixed2(height - 12)
      << "\" font-family=\"monospace\" font-size=\"15\" text-anchor=\"middle\">gamma t</text>\n";
    s << "<text x=\"20\" y=\"" << fixed2(mt + ph / 2)
      << "\" font-family=\"monospace\" font-size=\"15\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << fixed2(mt + ph / 2) << ")\">duan lhs</text>\n";

    // separability threshold
    s << "<line x1=\"" << fixed2(ml) << "\" y1=\"" << fixed2(py(0.5)) << "\" x2=\"" << fixed2(ml + pw)
      << "\" y2=\"" << fixed2(py(0.5))
      << "\" stroke=\"#777777\" stroke-dasharray=\"6,4\" stroke-width=\"1\"/>\n";

    s << polyline(lhs_a, "#1f77b4");
    s << polyline(lhs_b, "#d62728");

    // legend
    const double lx = ml + pw - 170.0, ly = mt + 18.0;
    s << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly) << "\" x2=\"" << fixed2(lx + 28)
      << "\" y2=\"" << fixed2(ly) << "\" stroke=\"#1f77b4\" stroke-width=\"1.8\"/>\n";
    s << "<text x=\"" << fixed2(lx + 36) << "\" y=\"" << fixed2(ly + 4)
      << "\" font-family=\"monospace\" font-size=\"13\">pair A</text>\n";
    s << "<line x1=\"" << fixed2(lx) << "\" y1=\"" << fixed2(ly + 20) << "\" x2=\"" << fixed2(lx + 28)
      << "\" y2=\"" << fixed2(ly + 20) << "\" stroke=\"#d62728\" stroke-width=\"1.8\"/>\n";
    s << "<text x=\"" << fixed2(lx + 36) << "\" y=\"" << fixed2(ly + 24)
      << "\" font-family=\"monospace\" font-size=\"13\">pair B</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace qbm
