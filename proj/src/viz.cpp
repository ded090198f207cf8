#include "hypercat/viz.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>

namespace hypercat {

namespace {

struct ChildSlot {
  int left = 0;
  int right = 0;
  int inner_start = 0;
  int inner_count = 0;
};

// Combinatorial skeleton shared by the regular layout and the animation:
// vertex ids follow the boundary walk from the roof's left endpoint (0)
// around the non-roof boundary to the roof's right endpoint (V-1).
struct Comb {
  int V = 0;
  std::vector<LayoutEdge> edges;
  std::vector<std::vector<int>> faces;
  std::vector<int> root_corners;
  std::vector<ChildSlot> root_slots;
};

int inner_vertex_count(const Subdigon& s) { return static_cast<int>(vef(s.type_of()).V) - 2; }

void place(const Subdigon& s, int left, int right, int& next, Comb& comb, bool at_root) {
  if (s.is_null()) return;
  int k = s.arity();
  const auto& children = s.children();
  std::vector<int> corners{left};
  int prev = left;
  for (int i = 1; i <= k; ++i) {
    const Subdigon& child = children[static_cast<std::size_t>(i - 1)];
    int inner = inner_vertex_count(child);
    int corner = (i < k) ? next + inner : right;
    comb.edges.push_back(
        {prev, corner, child.is_null() ? EdgeStyle::boundary : EdgeStyle::diagonal});
    if (at_root) comb.root_slots.push_back({prev, corner, next, inner});
    place(child, prev, corner, next, comb, false);
    if (i < k) next = corner + 1;
    corners.push_back(corner);
    prev = corner;
  }
  comb.faces.push_back(std::move(corners));
  if (at_root) comb.root_corners = comb.faces.back();
}

Comb build_comb(const Subdigon& s) {
  Comb comb;
  comb.V = static_cast<int>(vef(s.type_of()).V);
  comb.edges.push_back({0, comb.V - 1, EdgeStyle::roof});
  int next = 1;
  place(s, 0, comb.V - 1, next, comb, true);
  return comb;
}

// Regular n-gon with one horizontal side at the bottom; index 0 is the
// bottom-left endpoint and indices advance clockwise in y-up coordinates
// (counter-clockwise on the y-down canvas).
std::vector<Point> regular_polygon(int n, bool mirror) {
  std::vector<Point> pts(static_cast<std::size_t>(n));
  double alpha = 2.0 * std::numbers::pi / n;
  for (int j = 0; j < n; ++j) {
    double theta = -std::numbers::pi / 2.0 - alpha / 2.0 - j * alpha;
    pts[static_cast<std::size_t>(j)] = {std::cos(theta) * (mirror ? -1.0 : 1.0),
                                        std::sin(theta)};
  }
  return pts;
}

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();
  void add(const Point& p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  void add(const Box& other) {
    min_x = std::min(min_x, other.min_x);
    min_y = std::min(min_y, other.min_y);
    max_x = std::max(max_x, other.max_x);
    max_y = std::max(max_y, other.max_y);
  }
  bool valid() const { return min_x <= max_x; }
};

Box bbox(const std::vector<Point>& pts) {
  Box b;
  for (const auto& p : pts) b.add(p);
  return b;
}

std::vector<Point> translated(const std::vector<Point>& pts, double dx, double dy) {
  std::vector<Point> out = pts;
  for (auto& p : out) {
    p.x += dx;
    p.y += dy;
  }
  return out;
}

// similarity mapping segment (a, b) onto (ta, tb); endpoints map exactly
std::vector<Point> map_segment(const std::vector<Point>& pts, Point a, Point b, Point ta,
                               Point tb) {
  std::complex<double> za(a.x, a.y), zb(b.x, b.y), wa(ta.x, ta.y), wb(tb.x, tb.y);
  std::complex<double> scale = (wb - wa) / (zb - za);
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    if (p == a) {
      out.push_back(ta);
    } else if (p == b) {
      out.push_back(tb);
    } else {
      std::complex<double> w = wa + scale * (std::complex<double>(p.x, p.y) - za);
      out.push_back({w.real(), w.imag()});
    }
  }
  return out;
}

}  // namespace

Layout layout_subdigon(const Subdigon& s, bool mirror) {
  Comb comb = build_comb(s);
  Layout out;
  out.vertices = regular_polygon(comb.V, mirror);
  out.edges = std::move(comb.edges);
  out.faces = std::move(comb.faces);
  return out;
}

Rational interp_weight(int i, int n) {
  if (n < 2) throw std::invalid_argument("interpolation needs at least 2 frames");
  if (i < 0 || i >= n) throw std::invalid_argument("frame index out of range");
  Rational w(i, n - 1);
  w.canonicalize();
  return w;
}

std::vector<Point> interpolate(const std::vector<Point>& start, const std::vector<Point>& end,
                               int i, int n) {
  if (start.size() != end.size())
    throw std::invalid_argument("interpolation endpoint lists differ in length");
  Rational w = interp_weight(i, n);
  double we = w.get_d();
  double ws = Rational(1 - w).get_d();
  std::vector<Point> out(start.size());
  for (std::size_t j = 0; j < start.size(); ++j) {
    out[j] = {ws * start[j].x + we * end[j].x, ws * start[j].y + we * end[j].y};
  }
  return out;
}

namespace {

struct MergeScene {
  Comb comb;
  std::vector<Point> regular;    // final coordinates per vertex id
  std::vector<Point> assembled;  // stage-3-end coordinates per vertex id
  std::vector<Layout> child_shapes;          // similarity-mapped standalone layouts
  std::vector<Point> child_row_offsets;      // translation placing each child in the row
  std::vector<Point> glyph;                  // k+1 chevron points
  std::vector<Point> central_corners;        // k+1 polygon corner coordinates
  Layout central_shape;                      // the styled central polygon
  int k = 0;
};

MergeScene build_merge_scene(const Subdigon& s, bool mirror) {
  MergeScene scene;
  scene.comb = build_comb(s);
  scene.regular = regular_polygon(scene.comb.V, mirror);

  auto [k, children] = s.decompose();
  scene.k = k;

  std::vector<Point> central = regular_polygon(k + 1, mirror);
  scene.central_corners = central;

  // assembled coordinates: central corners fixed, each child similarity-
  // mapped so its roof covers its side
  scene.assembled.assign(static_cast<std::size_t>(scene.comb.V), Point{});
  for (std::size_t i = 0; i < scene.comb.root_corners.size(); ++i)
    scene.assembled[static_cast<std::size_t>(scene.comb.root_corners[i])] = central[i];

  for (int i = 0; i < k; ++i) {
    const Subdigon& child = children[static_cast<std::size_t>(i)];
    const ChildSlot& slot = scene.comb.root_slots[static_cast<std::size_t>(i)];
    Layout standalone = layout_subdigon(child, mirror);
    int vc = static_cast<int>(standalone.vertices.size());
    Point corner_l = scene.assembled[static_cast<std::size_t>(slot.left)];
    Point corner_r = scene.assembled[static_cast<std::size_t>(slot.right)];
    Layout mapped = standalone;
    mapped.vertices = map_segment(standalone.vertices, standalone.vertices[0],
                                  standalone.vertices[static_cast<std::size_t>(vc - 1)],
                                  corner_l, corner_r);
    for (int j = 0; j < slot.inner_count; ++j)
      scene.assembled[static_cast<std::size_t>(slot.inner_start + j)] =
          mapped.vertices[static_cast<std::size_t>(1 + j)];
    scene.child_shapes.push_back(std::move(mapped));
  }

  // row placement below the central polygon, children side by side
  Box central_box = bbox(central);
  double row_top = central_box.min_y - 0.7;
  double margin = 0.35;
  double total = 0;
  std::vector<Box> boxes;
  for (const auto& shape : scene.child_shapes) {
    boxes.push_back(bbox(shape.vertices));
    total += (boxes.back().max_x - boxes.back().min_x) + margin;
  }
  total -= scene.child_shapes.empty() ? 0 : margin;
  double cursor = -total / 2.0;
  for (std::size_t i = 0; i < scene.child_shapes.size(); ++i) {
    const Box& b = boxes[i];
    scene.child_row_offsets.push_back({cursor - b.min_x, row_top - b.max_y});
    cursor += (b.max_x - b.min_x) + margin;
  }

  // chevron glyph with k+1 points, dipping to a point at the middle
  double width = 1.6, amplitude = 1.2, top = 0.55;
  for (int j = 0; j <= k; ++j) {
    double u = static_cast<double>(j) / k;
    double dip = 1.0 - 2.0 * std::abs(u - 0.5);
    scene.glyph.push_back({(u - 0.5) * width, top - amplitude * dip});
  }

  // styled central polygon: side i is a boundary edge when child i is null,
  // otherwise the diagonal the child roof lands on
  scene.central_shape.vertices = central;
  for (int i = 0; i < k; ++i) {
    bool null_child = children[static_cast<std::size_t>(i)].is_null();
    scene.central_shape.edges.push_back(
        {i, i + 1, null_child ? EdgeStyle::boundary : EdgeStyle::diagonal});
  }
  scene.central_shape.edges.push_back({0, k, EdgeStyle::roof});
  std::vector<int> cycle(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) cycle[static_cast<std::size_t>(i)] = i;
  scene.central_shape.faces.push_back(std::move(cycle));
  return scene;
}

Layout glyph_shape(const std::vector<Point>& pts, int k, bool with_roof) {
  Layout shape;
  shape.vertices = pts;
  for (int i = 0; i < k; ++i) shape.edges.push_back({i, i + 1, EdgeStyle::diagonal});
  if (with_roof) shape.edges.push_back({0, k, EdgeStyle::roof});
  return shape;
}

Layout at_offset(const Layout& shape, Point offset, double fraction) {
  Layout out = shape;
  out.vertices = translated(shape.vertices, offset.x * fraction, offset.y * fraction);
  return out;
}

}  // namespace

std::vector<Frame> animate_merge(const Subdigon& s, const StagePlan& plan, bool mirror) {
  if (s.is_null()) throw std::invalid_argument("cannot animate the null subdigon");
  if (plan.stage1 < 1 || plan.stage2 < 2 || plan.stage3 < 2 || plan.stage4 < 2)
    throw std::invalid_argument("stages 2-4 need at least 2 frames each");

  MergeScene scene = build_merge_scene(s, mirror);
  int literal_count = scene.k + 1;
  for (const auto& shape : scene.child_shapes)
    literal_count += static_cast<int>(shape.vertices.size());

  std::vector<Frame> frames;
  int index = 0;

  auto children_at = [&](double fraction) {
    std::vector<Layout> shapes;
    for (std::size_t i = 0; i < scene.child_shapes.size(); ++i)
      shapes.push_back(at_offset(scene.child_shapes[i], scene.child_row_offsets[i], fraction));
    return shapes;
  };

  // stage 1: the unique decomposition, children in a row under the glyph
  for (int i = 0; i < plan.stage1; ++i) {
    Frame fr;
    fr.stage = 1;
    fr.index = index++;
    fr.shapes = children_at(1.0);
    fr.shapes.push_back(glyph_shape(scene.glyph, scene.k, false));
    fr.markers.push_back({{0.0, 0.85}, "∇" + std::to_string(scene.k)});
    fr.merged_vertex_count = literal_count;
    frames.push_back(std::move(fr));
  }

  // stage 2: glyph morphs into the central (k+1)-gon
  for (int i = 0; i < plan.stage2; ++i) {
    Frame fr;
    fr.stage = 2;
    fr.index = index++;
    fr.shapes = children_at(1.0);
    auto pts = interpolate(scene.glyph, scene.central_corners, i, plan.stage2);
    fr.shapes.push_back(glyph_shape(pts, scene.k, true));
    fr.merged_vertex_count = literal_count;
    frames.push_back(std::move(fr));
  }

  // stage 3: children translate until each roof coincides with its side
  for (int i = 0; i < plan.stage3; ++i) {
    Frame fr;
    fr.stage = 3;
    fr.index = index++;
    double remaining = Rational(1 - interp_weight(i, plan.stage3)).get_d();
    fr.shapes.push_back(scene.central_shape);
    auto moving = children_at(remaining);
    fr.shapes.insert(fr.shapes.end(), moving.begin(), moving.end());
    fr.merged_vertex_count = scene.comb.V;
    frames.push_back(std::move(fr));
  }

  // stage 4: assembled structure morphs onto the regular polygon
  for (int i = 0; i < plan.stage4; ++i) {
    Frame fr;
    fr.stage = 4;
    fr.index = index++;
    Layout merged;
    merged.vertices = interpolate(scene.assembled, scene.regular, i, plan.stage4);
    merged.edges = scene.comb.edges;
    merged.faces = scene.comb.faces;
    fr.shapes.push_back(std::move(merged));
    fr.merged_vertex_count = scene.comb.V;
    frames.push_back(std::move(fr));
  }

  // shared camera box so the scene does not wobble between frames
  Box all;
  for (const auto& fr : frames)
    for (const auto& shape : fr.shapes) all.add(bbox(shape.vertices));
  for (auto& fr : frames) fr.view = {{all.min_x, all.min_y, all.max_x, all.max_y}};
  return frames;
}

std::vector<Frame> animate_merge(const Subdigon& s, int frames_per_stage, bool mirror) {
  if (frames_per_stage < 2)
    throw std::invalid_argument("frames per stage must be >= 2");
  return animate_merge(s, StagePlan{frames_per_stage, frames_per_stage, frames_per_stage,
                                    frames_per_stage},
                       mirror);
}

namespace {

constexpr double kCanvasW = 800, kCanvasH = 600, kPadding = 30;

struct Camera {
  double scale, ox, oy, min_x, max_y;
  Point to_canvas(const Point& p) const {
    return {ox + (p.x - min_x) * scale, oy + (max_y - p.y) * scale};
  }
};

Camera make_camera(const Box& box) {
  double w = std::max(box.max_x - box.min_x, 1e-9);
  double h = std::max(box.max_y - box.min_y, 1e-9);
  double scale = std::min((kCanvasW - 2 * kPadding) / w, (kCanvasH - 2 * kPadding) / h);
  return {scale, (kCanvasW - w * scale) / 2.0, (kCanvasH - h * scale) / 2.0, box.min_x,
          box.max_y};
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

const char* edge_color(EdgeStyle style) {
  switch (style) {
    case EdgeStyle::roof: return "#d62728";
    case EdgeStyle::boundary: return "#000000";
    case EdgeStyle::diagonal: return "#808080";
  }
  return "#000000";
}

const char* edge_width(EdgeStyle style) {
  switch (style) {
    case EdgeStyle::roof: return "2.5";
    case EdgeStyle::boundary: return "1.8";
    case EdgeStyle::diagonal: return "1.2";
  }
  return "1.8";
}

Box frame_box(const Frame& frame) {
  if (frame.view) return {(*frame.view)[0], (*frame.view)[1], (*frame.view)[2], (*frame.view)[3]};
  Box box;
  for (const auto& shape : frame.shapes) box.add(bbox(shape.vertices));
  for (const auto& marker : frame.markers) box.add(marker.pos);
  if (!box.valid()) box = {-1, -1, 1, 1};
  return box;
}

void render_frame_body(const Frame& frame, const Camera& cam, std::string& out) {
  for (const auto& shape : frame.shapes) {
    for (const auto& edge : shape.edges) {
      Point a = cam.to_canvas(shape.vertices[static_cast<std::size_t>(edge.a)]);
      Point b = cam.to_canvas(shape.vertices[static_cast<std::size_t>(edge.b)]);
      out += "  <line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(b.x) +
             "\" y2=\"" + fmt(b.y) + "\" stroke=\"" + edge_color(edge.style) +
             "\" stroke-width=\"" + edge_width(edge.style) + "\" stroke-linecap=\"round\"/>\n";
    }
  }
  for (const auto& marker : frame.markers) {
    Point p = cam.to_canvas(marker.pos);
    out += "  <text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) +
           "\" font-size=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\">" +
           marker.text + "</text>\n";
  }
}

std::string svg_open() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" "
         "width=\"" +
         fmt(kCanvasW) + "\" height=\"" + fmt(kCanvasH) + "\" viewBox=\"0 0 " + fmt(kCanvasW) +
         " " + fmt(kCanvasH) + "\">\n  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

}  // namespace

std::string emit_svg(const Frame& frame) {
  Camera cam = make_camera(frame_box(frame));
  std::string out = svg_open();
  render_frame_body(frame, cam, out);
  out += "</svg>\n";
  return out;
}

std::string emit_svg(const Layout& layout) {
  Frame frame;
  frame.shapes.push_back(layout);
  frame.stage = 4;
  frame.merged_vertex_count = static_cast<int>(layout.vertices.size());
  return emit_svg(frame);
}

std::string emit_svg_animation(const std::vector<Frame>& frames, double seconds_per_frame) {
  Box all;
  for (const auto& frame : frames) all.add(frame_box(frame));
  if (!all.valid()) all = {-1, -1, 1, 1};
  Camera cam = make_camera(all);
  std::string out = svg_open();
  for (std::size_t i = 0; i < frames.size(); ++i) {
    double begin = static_cast<double>(i) * seconds_per_frame;
    out += " <g visibility=\"hidden\">\n  <set attributeName=\"visibility\" to=\"visible\" begin=\"" +
           fmt(begin) + "s\" dur=\"" + fmt(seconds_per_frame) + "s\"" +
           (i + 1 == frames.size() ? " fill=\"freeze\"" : "") + "/>\n";
    render_frame_body(frames[i], cam, out);
    out += " </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hypercat
