#pragma once

#include <string>

#include "rigid/model.hpp"

namespace rigid {

struct SvgOptions {
  int width = 480;
  int height = 480;
  int margin = 40;
  double vertex_radius = 6.0;
  bool labels = true;
};

/// Static drawing: cables dashed, struts heavy solid, bars regular solid,
/// vertices as labelled circles. Dimension 3 is drawn with a fixed isometric
/// projection; higher dimensions throw UnsupportedError. Output depends only
/// on the inputs.
std::string render_svg(const Framework& f, const SvgOptions& options = {});

void export_svg(const Framework& f, const std::string& path, const SvgOptions& options = {});

}  // namespace rigid
