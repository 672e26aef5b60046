#include "tropsing/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tropsing {

namespace {

constexpr const char* kCellStroke = "#4a5568";
constexpr const char* kMarked = "#000000";
constexpr const char* kUnmarked = "#ffffff";
constexpr const char* kCurve = "#c53030";
constexpr const char* kLabel = "#2b6cb0";
constexpr const char* kSingular = "#2f855a";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

struct Viewport {
  double xmin, ymin, xmax, ymax, size, offset;

  double px(double x) const { return offset + (x - xmin) / (xmax - xmin) * size; }
  double py(double y) const { return (ymax - y) / (ymax - ymin) * size; }
};

// Square viewport around the given points, grown by `padding` of the extent.
Viewport fit(const std::vector<std::pair<double, double>>& pts, double padding, double size, double offset) {
  double xmin = std::numeric_limits<double>::max(), ymin = xmin;
  double xmax = std::numeric_limits<double>::lowest(), ymax = xmax;
  for (const auto& [x, y] : pts) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  if (pts.empty()) xmin = xmax = ymin = ymax = 0;
  const double extent = std::max({xmax - xmin, ymax - ymin, 2.0});
  const double half = extent / 2 * (1 + 2 * padding);
  const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  return {cx - half, cy - half, cx + half, cy + half, size, offset};
}

void line(std::ostringstream& out, const char* cls, double x1, double y1, double x2, double y2, const char* color,
          double width) {
  out << "<line class=\"" << cls << "\" x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
      << "\" y2=\"" << num(y2) << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width) << "\"/>\n";
}

void label(std::ostringstream& out, double x, double y, std::int64_t weight) {
  out << "<text class=\"weight\" x=\"" << num(x + 4) << "\" y=\"" << num(y - 4) << "\" fill=\"" << kLabel
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << weight << "</text>\n";
}

void subdivision_body(std::ostringstream& out, const PointConfiguration& config, const MarkedSubdivision& ms,
                      double size, double offset) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : config.points()) pts.push_back({double(p.i), double(p.j)});
  const Viewport vp = fit(pts, 0.1, size, offset);
  for (const auto& e : edges(ms)) {
    const auto& a = config[e.a];
    const auto& b = config[e.b];
    line(out, "cell-edge", vp.px(a.i), vp.py(a.j), vp.px(b.i), vp.py(b.j), kCellStroke, 1.5);
  }
  std::vector<bool> marked(config.size(), false);
  for (const auto& cell : ms.cells) {
    for (std::size_t k : cell.marked) marked[k] = true;
  }
  for (std::size_t k = 0; k < config.size(); ++k) {
    out << "<circle class=\"" << (marked[k] ? "marked" : "unmarked") << "\" cx=\"" << num(vp.px(config[k].i))
        << "\" cy=\"" << num(vp.py(config[k].j)) << "\" r=\"4\" fill=\"" << (marked[k] ? kMarked : kUnmarked)
        << "\" stroke=\"" << kMarked << "\" stroke-width=\"1\"/>\n";
  }
}

void curve_body(std::ostringstream& out, const TropicalCurve& curve, const SvgOptions& options, double offset) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : curve.vertices) pts.push_back({v.position.x.get_d(), v.position.y.get_d()});
  if (options.singular_point) pts.push_back({options.singular_point->x.get_d(), options.singular_point->y.get_d()});
  const Viewport vp = fit(pts, options.padding, options.panel, offset);
  for (const auto& e : curve.bounded_edges) {
    const auto& p = curve.vertices[e.from].position;
    const auto& q = curve.vertices[e.to].position;
    const double x1 = vp.px(p.x.get_d()), y1 = vp.py(p.y.get_d());
    const double x2 = vp.px(q.x.get_d()), y2 = vp.py(q.y.get_d());
    line(out, "curve-edge", x1, y1, x2, y2, kCurve, 1.5 * double(e.weight));
    if (e.weight >= 2) label(out, (x1 + x2) / 2, (y1 + y2) / 2, e.weight);
  }
  for (const auto& r : curve.rays) {
    const double x = r.vertex < curve.vertices.size() ? curve.vertices[r.vertex].position.x.get_d() : 0;
    const double y = r.vertex < curve.vertices.size() ? curve.vertices[r.vertex].position.y.get_d() : 0;
    double t = std::numeric_limits<double>::max();
    if (r.dx > 0) t = std::min(t, (vp.xmax - x) / double(r.dx));
    if (r.dx < 0) t = std::min(t, (vp.xmin - x) / double(r.dx));
    if (r.dy > 0) t = std::min(t, (vp.ymax - y) / double(r.dy));
    if (r.dy < 0) t = std::min(t, (vp.ymin - y) / double(r.dy));
    const double x1 = vp.px(x), y1 = vp.py(y);
    const double x2 = vp.px(x + t * double(r.dx)), y2 = vp.py(y + t * double(r.dy));
    line(out, "curve-ray", x1, y1, x2, y2, kCurve, 1.5 * double(r.weight));
    if (r.weight >= 2) label(out, (x1 + x2) / 2, (y1 + y2) / 2, r.weight);
  }
  for (const auto& v : curve.vertices) {
    out << "<circle class=\"vertex\" cx=\"" << num(vp.px(v.position.x.get_d())) << "\" cy=\""
        << num(vp.py(v.position.y.get_d())) << "\" r=\"3\" fill=\"" << kCurve << "\"/>\n";
  }
  if (options.singular_point) {
    out << "<circle class=\"singular\" cx=\"" << num(vp.px(options.singular_point->x.get_d())) << "\" cy=\""
        << num(vp.py(options.singular_point->y.get_d())) << "\" r=\"7\" fill=\"none\" stroke=\"" << kSingular
        << "\" stroke-width=\"2\"/>\n";
  }
}

std::string document(double width, double height, const std::string& body) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
      << body << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_subdivision_svg(const PointConfiguration& config, const MarkedSubdivision& ms,
                                   const SvgOptions& options) {
  std::ostringstream body;
  subdivision_body(body, config, ms, options.panel, 0);
  return document(options.panel, options.panel, body.str());
}

std::string render_curve_svg(const PointConfiguration&, const TropicalCurve& curve, const SvgOptions& options) {
  std::ostringstream body;
  curve_body(body, curve, options, 0);
  return document(options.panel, options.panel, body.str());
}

std::string render_svg(const PointConfiguration& config, const TropicalCurve& curve, const SvgOptions& options) {
  std::ostringstream body;
  body << "<g class=\"subdivision\">\n";
  subdivision_body(body, config, curve.subdivision, options.panel, 0);
  body << "</g>\n<g class=\"curve\">\n";
  curve_body(body, curve, options, options.panel);
  body << "</g>\n";
  return document(2 * options.panel, options.panel, body.str());
}

}  // namespace tropsing
