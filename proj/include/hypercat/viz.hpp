#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hypercat/rational.hpp"
#include "hypercat/subdigon.hpp"

namespace hypercat {

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

enum class EdgeStyle { roof, boundary, diagonal };

struct LayoutEdge {
  int a = 0;
  int b = 0;
  EdgeStyle style = EdgeStyle::boundary;
};

// Geometric scene for one subdigon: all vertices lie on the outer polygon,
// indexed along the boundary walk from the roof's left endpoint (id 0)
// around the non-roof boundary to the roof's right endpoint (last id).
struct Layout {
  std::vector<Point> vertices;
  std::vector<LayoutEdge> edges;
  std::vector<std::vector<int>> faces;  // vertex-index cycles
};

// Vertices on a regular V-gon, roof horizontal at the bottom from the left
// endpoint to the right endpoint, children attached per the fixed chirality
// convention (canvas counter-clockwise; mirror flips it).
Layout layout_subdigon(const Subdigon& s, bool mirror = false);

struct TextMarker {
  Point pos;
  std::string text;
};

struct Frame {
  std::vector<Layout> shapes;
  std::vector<TextMarker> markers;
  int index = 0;
  int stage = 1;  // 1..4
  // distinct vertices with child-roof endpoints identified with their
  // central-polygon corners; meaningful from stage 3 onward
  int merged_vertex_count = 0;
  // fixed scene box shared by all frames of one animation, so the camera
  // does not wobble; emit_svg falls back to the content box when absent
  std::optional<std::array<double, 4>> view;  // min_x, min_y, max_x, max_y
};

struct StagePlan {
  int stage1 = 1;
  int stage2 = 20;
  int stage3 = 30;
  int stage4 = 25;
};

// The four-stage merge animation for a non-null subdigon s with
// decomposition (k, children): the children shown side by side under the
// operator glyph, the glyph morphing into the central (k+1)-gon, each child
// translating until its roof coincides with its side, and the assembled
// shape morphing onto the regular-polygon layout. The final frame equals
// layout_subdigon(s) exactly.
std::vector<Frame> animate_merge(const Subdigon& s, const StagePlan& plan, bool mirror = false);
std::vector<Frame> animate_merge(const Subdigon& s, int frames_per_stage, bool mirror = false);

// weight of the end configuration at frame i of n: i/(n-1), exact
Rational interp_weight(int i, int n);

// c = (1-w)*start + w*end componentwise; exact at both endpoints
std::vector<Point> interpolate(const std::vector<Point>& start, const std::vector<Point>& end,
                               int i, int n);

// Deterministic standalone SVG document. Roof edges are stroked #d62728,
// boundary edges black, diagonals gray.
std::string emit_svg(const Frame& frame);
std::string emit_svg(const Layout& layout);

// single-document animation: every frame as a group toggled by SMIL timers
std::string emit_svg_animation(const std::vector<Frame>& frames, double seconds_per_frame = 0.04);

}  // namespace hypercat
