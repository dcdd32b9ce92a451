#include "markoff/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "markoff/lattice.hpp"

namespace markoff {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

struct Bounds {
  double x0 = std::numeric_limits<double>::max(), y0 = x0;
  double x1 = std::numeric_limits<double>::lowest(), y1 = x1;
  void add(double x, double y) {
    x0 = std::min(x0, x);
    y0 = std::min(y0, y);
    x1 = std::max(x1, x);
    y1 = std::max(y1, y);
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  auto out = os.str();
  if (out == "-0.00") out = "0.00";
  return out;
}

std::string points_attr(const std::vector<HexLayout::Center>& pts, double dx, double dy) {
  std::string out;
  for (const auto& c : pts) {
    if (!out.empty()) out += ' ';
    out += fmt(c.x + dx) + "," + fmt(c.y + dy);
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Axial neighbour offsets of the honeycomb.
constexpr std::int64_t kNeighbours[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};

struct Diagram {
  Bounds bounds;
  std::string body;  // drawn with the diagram origin at (0, 0)
};

Diagram draw(const Slope& s, const CoeffMap& f, const HexLayout& layout) {
  Diagram d;
  std::set<std::pair<std::int64_t, std::int64_t>> filled;
  for (const auto& [pt, v] : f) {
    auto c = HexLayout::cell(s, pt);
    filled.insert({c.u, c.v});
  }
  std::set<std::pair<std::int64_t, std::int64_t>> empty;
  for (const auto& [u, v] : filled)
    for (const auto& n : kNeighbours)
      if (!filled.count({u + n[0], v + n[1]})) empty.insert({u + n[0], v + n[1]});
  if (filled.empty()) empty.insert({0, 0});

  std::ostringstream os;
  os << "<title>" << xml_escape("F_s for s = " + s.str() + ", coefficient sum " + decimal(f.sum()))
     << "</title>\n";
  os << "<g class=\"empty-cells\" fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\">\n";
  for (const auto& [u, v] : empty) {
    auto ctr = layout.center({u, v});
    auto hex = layout.corners(ctr);
    for (const auto& h : hex) d.bounds.add(h.x, h.y);
    os << "  <polygon class=\"empty\" points=\"" << points_attr(hex, 0, 0) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<g class=\"support\" font-family=\"sans-serif\" text-anchor=\"middle\" "
        "dominant-baseline=\"central\">\n";
  const double font = layout.radius * 0.7;
  for (const auto& [pt, v] : f) {
    auto ctr = layout.center(HexLayout::cell(s, pt));
    auto hex = layout.corners(ctr);
    for (const auto& h : hex) d.bounds.add(h.x, h.y);
    const std::string label = decimal(v);
    const double size = label.size() > 3 ? font * 3.0 / static_cast<double>(label.size()) : font;
    os << "  <g class=\"cell\" data-alpha=\"" << pt.alpha << "\" data-beta=\"" << pt.beta << "\">"
       << "<polygon points=\"" << points_attr(hex, 0, 0)
       << "\" fill=\"#fff4c2\" stroke=\"#8a6d00\" stroke-width=\"1\"/>"
       << "<text class=\"value\" x=\"" << fmt(ctr.x) << "\" y=\"" << fmt(ctr.y) << "\" font-size=\""
       << fmt(size) << "\">" << label << "</text></g>\n";
  }
  os << "</g>\n";
  if (f.size() >= 2) {
    std::vector<HexLayout::Center> outline;
    for (const auto& pt : convex_hull(f.support())) outline.push_back(layout.center(HexLayout::cell(s, pt)));
    os << "<polygon class=\"boundary\" fill=\"none\" stroke=\"#b03000\" stroke-width=\"2\" "
          "stroke-dasharray=\"4 3\" points=\""
       << points_attr(outline, 0, 0) << "\"/>\n";
  }
  d.body = os.str();
  return d;
}

std::string wrap(double width, double height, const std::string& body) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height)
     << "\">\n"
     << body << "</svg>\n";
  return os.str();
}

}  // namespace

HexLayout::Cell HexLayout::cell(const Slope& s, LatticePoint pt) {
  return {(pt.alpha - s.q()) / 2, (pt.beta - s.p()) / 2};
}

HexLayout::Center HexLayout::center(Cell c) const {
  const double u = static_cast<double>(c.u), v = static_cast<double>(c.v);
  return {(v - u) * kSqrt3 * radius / 2.0, (u + v) * 1.5 * radius};
}

std::vector<HexLayout::Center> HexLayout::corners(Center c) const {
  std::vector<Center> out;
  for (int i = 0; i < 6; ++i) {
    const double angle = (-90.0 + 60.0 * i) * 3.14159265358979323846 / 180.0;
    out.push_back({c.x + radius * std::cos(angle), c.y + radius * std::sin(angle)});
  }
  return out;
}

std::string render_svg(const Slope& s, const CoeffMap& f, const HexLayout& layout) {
  return render_svg_gallery({{s, f}}, layout);
}

std::string render_svg_gallery(const std::vector<std::pair<Slope, CoeffMap>>& items,
                               const HexLayout& layout) {
  const double margin = layout.radius;
  std::string body;
  double x = margin, height = 0;
  for (const auto& [s, f] : items) {
    Diagram d = draw(s, f, layout);
    const double dx = x - d.bounds.x0, dy = margin - d.bounds.y0;
    body += "<g class=\"diagram\" data-slope=\"" + s.str() + "\" transform=\"translate(" + fmt(dx) +
            "," + fmt(dy) + ")\">\n" + d.body + "</g>\n";
    x += d.bounds.x1 - d.bounds.x0 + margin;
    height = std::max(height, d.bounds.y1 - d.bounds.y0 + 2 * margin);
  }
  return wrap(std::max(x, 2 * margin), std::max(height, 2 * margin), body);
}

std::string render_ascii(const Slope& s, const CoeffMap& f) {
  if (f.empty()) return "\n";
  std::size_t label = 1;
  std::int64_t row0 = std::numeric_limits<std::int64_t>::max(), row1 = std::numeric_limits<std::int64_t>::min();
  std::int64_t col0 = row0;
  for (const auto& [pt, v] : f) {
    auto c = HexLayout::cell(s, pt);
    label = std::max(label, decimal(v).size());
    row0 = std::min(row0, c.u + c.v);
    row1 = std::max(row1, c.u + c.v);
    col0 = std::min(col0, c.v - c.u);
  }
  // Even cell width so that half-cell offsets land on whole characters.
  const std::size_t width = (label + 2) / 2 * 2;
  std::vector<std::string> rows(static_cast<std::size_t>(row1 - row0 + 1));
  for (const auto& [pt, v] : f) {
    auto c = HexLayout::cell(s, pt);
    auto& line = rows[static_cast<std::size_t>(c.u + c.v - row0)];
    const std::string text = decimal(v);
    const std::size_t start = static_cast<std::size_t>(c.v - c.u - col0) * (width / 2) + (label - text.size());
    if (line.size() < start + text.size()) line.resize(start + text.size(), ' ');
    line.replace(start, text.size(), text);
  }
  std::string out;
  for (const auto& line : rows) out += line + "\n";
  return out;
}

}  // namespace markoff
