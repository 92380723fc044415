#include "rotorcom/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "rotorcom/errors.hpp"

namespace rotorcom {

namespace {

const char* kPalette[8] = {"#1f6fb2", "#d1495b", "#2e8b57", "#e0a500",
                           "#7d5ba6", "#c96a2b", "#3aa6a6", "#5c5c5c"};

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

bool plottable(const SweepRow& r) {
  return std::isfinite(r.axis_value) && std::isfinite(r.nbar) && r.nbar > 0;
}

}  // namespace

std::string sweep_plot_svg(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::vector<double> temps;
  for (const auto& r : rows)
    if (std::find(temps.begin(), temps.end(), r.temperature_k) == temps.end())
      temps.push_back(r.temperature_k);

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  std::size_t n_pts = 0;
  for (const auto& r : rows) {
    if (!plottable(r)) continue;
    if (n_pts == 0) {
      xmin = xmax = r.axis_value;
      ymin = ymax = r.nbar;
    } else {
      xmin = std::min(xmin, r.axis_value);
      xmax = std::max(xmax, r.axis_value);
      ymin = std::min(ymin, r.nbar);
      ymax = std::max(ymax, r.nbar);
    }
    ++n_pts;
  }
  if (n_pts < 2) throw ConfigError("nothing to plot: fewer than two finite points");
  if (xmin == xmax) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  double ly0 = std::floor(std::log10(ymin));
  double ly1 = std::ceil(std::log10(ymax));
  if (ly1 - ly0 < 1) ly1 = ly0 + 1;

  const double width = 640, height = 420;
  const double ml = 70, mr = 20, mt = 20, mb = 50;
  auto sx = [&](double x) {
    return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
  };
  auto sy = [&](double y) {
    return height - mb -
           (std::log10(y) - ly0) / (ly1 - ly0) * (height - mt - mb);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n"
      << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  // frame
  svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << width - ml - mr
      << "\" height=\"" << height - mt - mb
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  // x ticks
  for (int i = 0; i <= 4; ++i) {
    const double x = xmin + (xmax - xmin) * i / 4.0;
    const double px = sx(x);
    svg << "<line x1=\"" << px << "\" y1=\"" << height - mb << "\" x2=\"" << px
        << "\" y2=\"" << height - mb + 5 << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << px << "\" y=\"" << height - mb + 18
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << short_num(x) << "</text>\n";
  }
  // y decade ticks
  const int decades = static_cast<int>(ly1 - ly0);
  const int stride = decades > 8 ? (decades + 7) / 8 : 1;
  for (int d = 0; d <= decades; d += stride) {
    const double y = std::pow(10.0, ly0 + d);
    const double py = sy(y);
    svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << py << "\" x2=\"" << ml
        << "\" y2=\"" << py << "\" stroke=\"#333\"/>\n"
        << "<text x=\"" << ml - 8 << "\" y=\"" << py + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">1e"
        << static_cast<int>(ly0) + d << "</text>\n";
  }

  // axis labels
  svg << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
      << axis_name(spec.axis) << "</text>\n"
      << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 16 "
      << (mt + height - mb) / 2 << ")\">roton occupation</text>\n";

  // one polyline per temperature, broken at non-plottable rows
  for (std::size_t ti = 0; ti < temps.size(); ++ti) {
    const char* color = kPalette[ti % 8];
    std::ostringstream seg;
    bool open = false;
    auto flush = [&]() {
      if (open) {
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"" << seg.str() << "\"/>\n";
        seg.str("");
        open = false;
      }
    };
    for (const auto& r : rows) {
      if (r.temperature_k != temps[ti]) continue;
      if (!plottable(r)) {
        flush();
        continue;
      }
      seg << short_num(sx(r.axis_value)) << ',' << short_num(sy(r.nbar)) << ' ';
      open = true;
    }
    flush();
    // legend
    const double lyy = mt + 14 + 16 * static_cast<double>(ti);
    svg << "<line x1=\"" << width - mr - 150 << "\" y1=\"" << lyy << "\" x2=\""
        << width - mr - 125 << "\" y2=\"" << lyy << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n"
        << "<text x=\"" << width - mr - 120 << "\" y=\"" << lyy + 4
        << "\" font-family=\"sans-serif\" font-size=\"11\">T = "
        << short_num(temps[ti]) << " K</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rotorcom
