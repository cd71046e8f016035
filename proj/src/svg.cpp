#include "rigid/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "rigid/error.hpp"
#include "rigid/io.hpp"

namespace rigid {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

Eigen::MatrixXd project(const Framework& f) {
  const auto& p = f.configuration().points();
  const Eigen::Index n = p.rows();
  Eigen::MatrixXd out(n, 2);
  switch (f.dimension()) {
    case 1:
      out.col(0) = p.col(0);
      out.col(1).setZero();
      break;
    case 2:
      out = p;
      break;
    case 3: {
      const double c = std::sqrt(3.0) / 2.0;
      out.col(0) = c * (p.col(0) - p.col(1));
      out.col(1) = p.col(2) - 0.5 * (p.col(0) + p.col(1));
      break;
    }
    default:
      throw UnsupportedError("SVG export supports dimensions up to 3, got " + std::to_string(f.dimension()));
  }
  return out;
}

}  // namespace

std::string render_svg(const Framework& f, const SvgOptions& o) {
  const Eigen::MatrixXd xy = project(f);
  const Eigen::RowVector2d lo = xy.colwise().minCoeff();
  const Eigen::RowVector2d hi = xy.colwise().maxCoeff();
  const Eigen::RowVector2d extent = hi - lo;
  const double usable_w = o.width - 2.0 * o.margin;
  const double usable_h = o.height - 2.0 * o.margin;
  double scale = 1.0;
  if (extent.maxCoeff() > 0.0) {
    scale = std::min(extent(0) > 0 ? usable_w / extent(0) : usable_w / extent.maxCoeff(),
                     extent(1) > 0 ? usable_h / extent(1) : usable_h / extent.maxCoeff());
  }
  const Eigen::RowVector2d centre = 0.5 * (lo + hi);
  auto sx = [&](double x) { return o.width / 2.0 + scale * (x - centre(0)); };
  auto sy = [&](double y) { return o.height / 2.0 - scale * (y - centre(1)); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(o.width) +
         "\" height=\"" + std::to_string(o.height) + "\" viewBox=\"0 0 " + std::to_string(o.width) + " " +
         std::to_string(o.height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<g id=\"members\" stroke-linecap=\"round\">\n";
  for (const Member& m : f.graph().members()) {
    const int i = m.ends.first();
    const int j = m.ends.second();
    std::string style;
    switch (m.kind) {
      case MemberKind::Cable:
        style = "stroke=\"#1f4e9c\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"";
        break;
      case MemberKind::Strut:
        style = "stroke=\"#000000\" stroke-width=\"4\"";
        break;
      case MemberKind::Bar:
        style = "stroke=\"#000000\" stroke-width=\"1.5\"";
        break;
    }
    svg += "<line class=\"" + std::string(to_string(m.kind)) + "\" x1=\"" + fmt(sx(xy(i, 0))) + "\" y1=\"" +
           fmt(sy(xy(i, 1))) + "\" x2=\"" + fmt(sx(xy(j, 0))) + "\" y2=\"" + fmt(sy(xy(j, 1))) + "\" " + style + "/>\n";
  }
  svg += "</g>\n<g id=\"vertices\">\n";
  for (Eigen::Index v = 0; v < xy.rows(); ++v) {
    const std::string cx = fmt(sx(xy(v, 0)));
    const std::string cy = fmt(sy(xy(v, 1)));
    svg += "<circle class=\"vertex\" cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + fmt(o.vertex_radius) +
           "\" fill=\"white\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    if (o.labels) {
      svg += "<text x=\"" + fmt(sx(xy(v, 0)) + o.vertex_radius + 2.0) + "\" y=\"" +
             fmt(sy(xy(v, 1)) - o.vertex_radius - 2.0) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + std::to_string(v) + "</text>\n";
    }
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void export_svg(const Framework& f, const std::string& path, const SvgOptions& options) {
  write_file(path, render_svg(f, options));
}

}  // namespace rigid
