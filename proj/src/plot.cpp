#include "ctscore/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ctscore {
namespace {

constexpr int kAsciiWidth = 64;
constexpr int kAsciiHeight = 16;
constexpr int kMargin = 10;

struct Point {
  double x;
  double y;
  bool best;
};

std::vector<Point> cv_points(const SweepTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("cannot plot an empty sweep table");
  std::vector<Point> points;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.cv) points.push_back({row.a_crit, *row.cv, table.best_index == r});
  }
  return points;
}

std::string fixed(double v, int precision) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

struct Range {
  double lo;
  double hi;

  double unit(double v) const { return hi > lo ? (v - lo) / (hi - lo) : 0.5; }
};

Range range_of(const std::vector<Point>& points, double Point::*field) {
  Range r{points.front().*field, points.front().*field};
  for (const auto& p : points) {
    r.lo = std::min(r.lo, p.*field);
    r.hi = std::max(r.hi, p.*field);
  }
  return r;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace

PlotStyle parse_plot_style(std::string_view text) {
  if (text == "none") return PlotStyle::none;
  if (text == "ascii") return PlotStyle::ascii;
  if (text == "svg") return PlotStyle::svg;
  throw std::invalid_argument("unknown plot style '" + std::string(text) + "'");
}

std::string ascii_plot(const SweepTable& table) {
  const auto points = cv_points(table);
  std::string out = "cv vs a_crit\n";
  if (points.empty()) return out + "(no row with a defined cv)\n";

  const Range xr = range_of(points, &Point::x);
  const Range yr = range_of(points, &Point::y);
  std::vector<std::string> canvas(kAsciiHeight, std::string(kAsciiWidth, ' '));
  auto col_of = [&](double x) {
    return static_cast<int>(std::lround(xr.unit(x) * (kAsciiWidth - 1)));
  };
  auto line_of = [&](double y) {
    return kAsciiHeight - 1 - static_cast<int>(std::lround(yr.unit(y) * (kAsciiHeight - 1)));
  };

  for (std::size_t p = 1; p < points.size(); ++p) {
    const int c0 = col_of(points[p - 1].x), c1 = col_of(points[p].x);
    for (int c = c0 + 1; c < c1; ++c) {
      const double t = static_cast<double>(c - c0) / (c1 - c0);
      const double y = points[p - 1].y + t * (points[p].y - points[p - 1].y);
      canvas[line_of(y)][c] = '.';
    }
  }
  const Point* best = nullptr;
  for (const auto& p : points) {
    canvas[line_of(p.y)][col_of(p.x)] = p.best ? '@' : '*';
    if (p.best) best = &p;
  }

  for (int l = 0; l < kAsciiHeight; ++l) {
    std::string label;
    if (l == 0) label = fixed(yr.hi, 4);
    if (l == kAsciiHeight - 1) label = fixed(yr.lo, 4);
    out += pad_left(label, kMargin - 2) + " |" + canvas[l] + '\n';
  }
  out += std::string(kMargin - 1, ' ') + '+' + std::string(kAsciiWidth, '-') + '\n';
  const std::string lo = fixed(xr.lo, 4), hi = fixed(xr.hi, 4);
  std::string axis = std::string(kMargin, ' ') + lo;
  axis += std::string(std::max<std::size_t>(1, kAsciiWidth - lo.size() - hi.size()), ' ') + hi;
  out += axis + '\n';
  if (best) out += "@ best: a_crit=" + fixed(best->x, 4) + " cv=" + fixed(best->y, 4) + '\n';
  return out;
}

std::string svg_plot(const SweepTable& table) {
  const auto points = cv_points(table);
  constexpr double left = 70, top = 30, pw = 550, ph = 320;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
                    "viewBox=\"0 0 640 400\">\n";
  out += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  out += "<text x=\"320\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">cv vs a_crit</text>\n";
  out += "<line x1=\"70\" y1=\"350\" x2=\"620\" y2=\"350\" stroke=\"black\"/>\n";
  out += "<line x1=\"70\" y1=\"30\" x2=\"70\" y2=\"350\" stroke=\"black\"/>\n";
  if (points.empty()) return out + "</svg>\n";

  const Range xr = range_of(points, &Point::x);
  const Range yr = range_of(points, &Point::y);
  auto sx = [&](double x) { return fixed(left + xr.unit(x) * pw, 2); };
  auto py = [&](double y) { return top + (1.0 - yr.unit(y)) * ph; };
  auto sy = [&](double y) { return fixed(py(y), 2); };

  out += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (p) out += ' ';
    out += sx(points[p].x) + ',' + sy(points[p].y);
  }
  out += "\"/>\n";
  for (const auto& p : points) {
    out += "<circle cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) + "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  for (const auto& p : points) {
    if (!p.best) continue;
    out += "<circle class=\"best\" cx=\"" + sx(p.x) + "\" cy=\"" + sy(p.y) +
           "\" r=\"7\" fill=\"none\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + sx(p.x) + "\" y=\"" + fixed(py(p.y) - 10, 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">a_crit=" +
           fixed(p.x, 4) + " cv=" + fixed(p.y, 4) + "</text>\n";
  }
  auto label = [&](const std::string& x, const std::string& y, const char* anchor,
                   const std::string& text) {
    out += "<text x=\"" + x + "\" y=\"" + y + "\" text-anchor=\"" + anchor +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + text + "</text>\n";
  };
  label("70", "366", "start", fixed(xr.lo, 4));
  label("620", "366", "end", fixed(xr.hi, 4));
  label("345", "390", "middle", "a_crit");
  label("64", "350", "end", fixed(yr.lo, 4));
  label("64", "34", "end", fixed(yr.hi, 4));
  return out + "</svg>\n";
}

std::string emit_plot(const SweepTable& table, PlotStyle style) {
  switch (style) {
    case PlotStyle::ascii: return ascii_plot(table);
    case PlotStyle::svg: return svg_plot(table);
    default: return {};
  }
}

}  // namespace ctscore
