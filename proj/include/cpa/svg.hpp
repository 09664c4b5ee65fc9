#pragma once

/// Minimal SVG writer for log-log sweep plots: axes, sample points, and the
/// fitted line.  Purely cosmetic output; nothing downstream consumes it.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cpa::svg {

inline std::string loglog_plot(const std::vector<std::pair<long long, long long>>& samples,
                               double slope, const std::string& title) {
    const double W = 480, H = 360, L = 56, B = 40, T = 28, R = 16;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::vector<std::pair<double, double>> pts;
    for (const auto& [n, p] : samples) {
        double x = std::log10(static_cast<double>(n));
        double y = std::log10(static_cast<double>(p));
        pts.push_back({x, y});
        xmin = std::min(xmin, x); xmax = std::max(xmax, x);
        ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    }
    if (pts.empty()) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
    if (xmax - xmin < 1e-9) { xmin -= 0.5; xmax += 0.5; }
    if (ymax - ymin < 1e-9) { ymin -= 0.5; ymax += 0.5; }
    double padx = 0.06 * (xmax - xmin), pady = 0.06 * (ymax - ymin);
    xmin -= padx; xmax += padx; ymin -= pady; ymax += pady;
    auto sx = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto sy = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - B - T); };

    std::ostringstream os;
    os.precision(4);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\">" << title
       << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << L << "\" y2=\"" << T
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10
       << "\" text-anchor=\"middle\" font-size=\"11\">log10 n</text>\n";
    os << "<text x=\"14\" y=\"" << H / 2
       << "\" text-anchor=\"middle\" font-size=\"11\" transform=\"rotate(-90 14 " << H / 2
       << ")\">log10 p</text>\n";

    if (!pts.empty()) {
        double mx = 0, my = 0;
        for (const auto& [x, y] : pts) { mx += x; my += y; }
        mx /= static_cast<double>(pts.size());
        my /= static_cast<double>(pts.size());
        double x0 = xmin + 0.02 * (xmax - xmin), x1 = xmax - 0.02 * (xmax - xmin);
        double y0 = my + slope * (x0 - mx), y1 = my + slope * (x1 - mx);
        os << "<line x1=\"" << sx(x0) << "\" y1=\"" << sy(y0) << "\" x2=\"" << sx(x1) << "\" y2=\""
           << sy(y1) << "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
        os << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 12
           << "\" text-anchor=\"end\" font-size=\"11\">slope " << slope << "</text>\n";
    }
    for (const auto& [x, y] : pts)
        os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y)
           << "\" r=\"3.2\" fill=\"#1f5fbf\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace cpa::svg
