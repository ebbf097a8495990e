#include "troprank/svg.hpp"

#include <algorithm>
#include <sstream>

#include "troprank/core.hpp"
#include "troprank/errors.hpp"

namespace troprank {

namespace {

struct Point {
  Rational x;
  Rational y;
};

Point project(const TropVector& v) { return {v[1] - v[0], -(v[2] - v[0])}; }

// Fixed four-decimal rendering computed from the exact value.
std::string fixed(const Rational& q) {
  Rational scaled = q * 10000;
  mpz_class r;
  mpz_class twice_num = 2 * scaled.get_num() + scaled.get_den();
  mpz_class twice_den = 2 * scaled.get_den();
  mpz_fdiv_q(r.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
  bool negative = r < 0;
  if (negative) r = -r;
  std::string digits = r.get_str();
  if (digits.size() < 5) digits.insert(0, 5 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 4) + "." + digits.substr(digits.size() - 4);
  return (negative && r != 0 ? "-" : "") + out;
}

std::string type_label(const TypeVector& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.sets.size(); ++j) {
    s += j ? ", " : "";
    for (std::size_t k = 0; k < t.sets[j].size(); ++k) s += (k ? " " : "") + std::to_string(t.sets[j][k] + 1);
    if (t.sets[j].empty()) s += "-";
  }
  return s + ")";
}

// Counter-clockwise order around the centroid, compared exactly.
void sort_around(std::vector<Point>& pts) {
  Point c{0, 0};
  for (const auto& p : pts) {
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<long>(pts.size());
  c.y /= static_cast<long>(pts.size());
  auto half = [&](const Point& p) { return (p.y - c.y) < 0 || ((p.y - c.y) == 0 && (p.x - c.x) < 0); };
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    bool ha = half(a), hb = half(b);
    if (ha != hb) return !ha;
    return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x) > 0;
  });
}

}  // namespace

std::string render_hull_svg(const TropMatrix& m, const HullLimits& limits) {
  if (m.rows() != 3) throw DomainError("rendering needs points of TP^2 (three rows)");
  const auto cells = enumerate_hull_cells(m, Execution::serial, limits);

  Rational x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Point p = project(m.column(j));
    if (j == 0 || p.x < x0) x0 = p.x;
    if (j == 0 || p.x > x1) x1 = p.x;
    if (j == 0 || p.y < y0) y0 = p.y;
    if (j == 0 || p.y > y1) y1 = p.y;
  }
  Rational w = x1 - x0, h = y1 - y0;
  Rational span = std::max(w, h);
  if (span == 0) span = 1;
  Rational margin = span / 10;
  Rational vx = x0 - margin, vy = y0 - margin, vw = w + 2 * margin, vh = h + 2 * margin;
  if (w == 0) {
    vx -= span / 2;
    vw += span;
  }
  if (h == 0) {
    vy -= span / 2;
    vh += span;
  }
  const std::string radius = fixed(span / 60), stroke = fixed(span / 150), font = fixed(span / 25);

  std::vector<Point> vertex_points;
  std::vector<const HullCell*> vertices;
  for (const auto& c : cells)
    if (c.dim == 0) {
      vertices.push_back(&c);
      vertex_points.push_back(project(c.witness));
    }
  auto corners = [&](const HullCell& c) {
    std::vector<Point> pts;
    for (std::size_t k = 0; k < vertices.size(); ++k)
      if (type_contains(vertices[k]->type, c.type)) pts.push_back(vertex_points[k]);
    return pts;
  };

  std::vector<TropVector> generators;
  for (std::size_t j = 0; j < m.cols(); ++j) generators.push_back(normalize_projective(m.column(j)));

  const Rational line_height = span / 20;
  std::ostringstream polygons, segments, dots, legend;
  std::size_t line = 0;
  for (const auto& c : cells) {
    if (c.dim == 2) {
      auto pts = corners(c);
      sort_around(pts);
      polygons << "  <polygon class=\"cell\" points=\"";
      for (std::size_t k = 0; k < pts.size(); ++k)
        polygons << (k ? " " : "") << fixed(pts[k].x) << "," << fixed(pts[k].y);
      polygons << "\"/>\n";
    } else if (c.dim == 1) {
      auto pts = corners(c);
      if (pts.size() != 2) throw InternalError("segment cell without two endpoints");
      segments << "  <line class=\"segment\" x1=\"" << fixed(pts[0].x) << "\" y1=\"" << fixed(pts[0].y)
               << "\" x2=\"" << fixed(pts[1].x) << "\" y2=\"" << fixed(pts[1].y) << "\"/>\n";
    } else {
      Point p = project(c.witness);
      std::string label;
      for (std::size_t j = 0; j < generators.size(); ++j)
        if (generators[j] == normalize_projective(c.witness)) label += (label.empty() ? "v" : ",v") + std::to_string(j + 1);
      dots << "  <circle class=\"vertex" << (label.empty() ? "" : " generator") << "\" cx=\"" << fixed(p.x)
           << "\" cy=\"" << fixed(p.y) << "\" r=\"" << radius << "\"/>\n";
      if (!label.empty())
        dots << "  <text class=\"label\" x=\"" << fixed(p.x + span / 40) << "\" y=\"" << fixed(p.y - span / 40)
             << "\">" << label << "</text>\n";
    }
    ++line;
    legend << "    <text x=\"" << fixed(vx) << "\" y=\"" << fixed(vy + vh + line_height * static_cast<long>(line))
           << "\">" << (c.dim == 0 ? "point " : c.dim == 1 ? "segment " : "polygon ") << type_label(c.type)
           << "</text>\n";
  }
  vh += line_height * static_cast<long>(line + 1);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fixed(vx) << " " << fixed(vy)
      << " " << fixed(vw) << " " << fixed(vh) << "\">\n"
      << "  <style>\n"
      << "    .cell { fill: #9ecae1; fill-opacity: 0.6; stroke: none; }\n"
      << "    .segment { stroke: #08519c; stroke-width: " << stroke << "; }\n"
      << "    .vertex { fill: #08519c; }\n"
      << "    .generator { fill: #cb181d; }\n"
      << "    text { font-family: sans-serif; font-size: " << font << "px; }\n"
      << "  </style>\n"
      << polygons.str() << segments.str() << dots.str() << "  <g class=\"legend\">\n"
      << legend.str() << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace troprank
