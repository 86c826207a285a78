#include "mnm/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mnm/error.hpp"

namespace mnm {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 60.0;
constexpr int kTicks = 5;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Range {
    double lo;
    double hi;

    [[nodiscard]] double span() const { return hi - lo; }
};

Range padded(double lo, double hi) {
    if (hi - lo <= 0.0) {
        const double pad = std::max(1.0, std::abs(lo)) * 0.5;
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

}  // namespace

std::string render_scatter_svg(const std::vector<TableRow>& rows, bool loglog) {
    if (rows.empty()) {
        throw DomainError("nothing to plot");
    }
    std::vector<std::pair<double, double>> pts;
    pts.reserve(rows.size());
    for (const auto& r : rows) {
        pts.emplace_back(loglog ? r.log_k : static_cast<double>(r.k), loglog ? r.log_p : r.prob_float);
    }
    const auto [xmin_it, xmax_it] = std::minmax_element(pts.begin(), pts.end(),
                                                        [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto [ymin_it, ymax_it] = std::minmax_element(pts.begin(), pts.end(),
                                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    const Range xr = padded(xmin_it->first, xmax_it->first);
    const Range yr = padded(ymin_it->second, ymax_it->second);
    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - 2 * kMargin;
    auto sx = [&](double x) { return kMargin + (x - xr.lo) / xr.span() * plot_w; };
    auto sy = [&](double y) { return kHeight - kMargin - (y - yr.lo) / yr.span() * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth) << "\" height=\""
        << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double x0 = kMargin;
    const double y0 = kHeight - kMargin;
    svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(kWidth - kMargin) << "\" y2=\""
        << num(y0) << "\"/>\n"
        << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0) << "\" y2=\"" << num(kMargin)
        << "\"/>\n";
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = xr.lo + xr.span() * i / kTicks;
        const double fy = yr.lo + yr.span() * i / kTicks;
        svg << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(sx(fx)) << "\" y2=\""
            << num(y0 + 5) << "\"/>\n";
        svg << "<line x1=\"" << num(x0 - 5) << "\" y1=\"" << num(sy(fy)) << "\" x2=\"" << num(x0) << "\" y2=\""
            << num(sy(fy)) << "\"/>\n";
    }
    svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int i = 0; i <= kTicks; ++i) {
        const double fx = xr.lo + xr.span() * i / kTicks;
        const double fy = yr.lo + yr.span() * i / kTicks;
        svg << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(y0 + 18) << "\" text-anchor=\"middle\">" << num(fx)
            << "</text>\n";
        svg << "<text x=\"" << num(x0 - 8) << "\" y=\"" << num(sy(fy) + 4) << "\" text-anchor=\"end\">" << num(fy)
            << "</text>\n";
    }
    svg << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 15) << "\" text-anchor=\"middle\">"
        << (loglog ? "log k" : "k") << "</text>\n"
        << "<text x=\"15\" y=\"" << num(kHeight / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
        << num(kHeight / 2) << ")\">" << (loglog ? "log P(k,k)" : "P(k,k)") << "</text>\n</g>\n";

    svg << "<g fill=\"steelblue\">\n";
    for (const auto& [x, y] : pts) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        const std::string dx = buf;
        std::snprintf(buf, sizeof buf, "%.17g", y);
        svg << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"2\" data-x=\"" << dx
            << "\" data-y=\"" << buf << "\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace mnm
