#include "lht/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "lht/arctic.hpp"
#include "lht/error.hpp"

namespace lht {

SceneKind parse_scene(const std::string& name) {
  if (name == "paths") return SceneKind::Paths;
  if (name == "dual-paths") return SceneKind::DualPaths;
  if (name == "dimers") return SceneKind::Dimers;
  if (name == "height") return SceneKind::Height;
  throw Error(ErrorCode::InvalidArgument, "unknown scene '" + name + "'");
}

std::string scene_name(SceneKind kind) {
  switch (kind) {
    case SceneKind::Paths: return "paths";
    case SceneKind::DualPaths: return "dual-paths";
    case SceneKind::Dimers: return "dimers";
    case SceneKind::Height: return "height";
  }
  return "";
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double x0, x1, y0, y1;  // world box
  double scale, left, top;
  double divisor;

  Frame(const RenderSpec& spec, double xmin, double xmax, double ymin, double ymax, double n) {
    divisor = spec.rescale ? n : 1.0;
    x0 = xmin / divisor;
    x1 = xmax / divisor;
    y0 = ymin / divisor;
    y1 = ymax / divisor;
    const double margin = 10;
    const double sx = (spec.width - 2 * margin) / (x1 - x0);
    const double sy = (spec.height - 2 * margin) / (y1 - y0);
    scale = std::min(sx, sy);
    left = (spec.width - scale * (x1 - x0)) / 2;
    top = (spec.height - scale * (y1 - y0)) / 2;
  }

  // Lattice coordinates in, canvas pixels out.
  std::string lattice(double x, double y) const { return world(x / divisor, y / divisor); }
  std::string world(double X, double Y) const { return num(px(X)) + "," + num(py(Y)); }
  double px(double X) const { return left + (X - x0) * scale; }
  double py(double Y) const { return top + (y1 - Y) * scale; }
};

double vy(LHVertex v) { return static_cast<double>(v.num) / (v.col + 1); }

void header(std::ostringstream& out, const RenderSpec& spec) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height << "\" fill=\"white\"/>\n";
}

void line(std::ostringstream& out, const Frame& f, double xa, double ya, double xb, double yb) {
  const double d = f.divisor;
  out << "<line x1=\"" << num(f.px(xa / d)) << "\" y1=\"" << num(f.py(ya / d)) << "\" x2=\"" << num(f.px(xb / d))
      << "\" y2=\"" << num(f.py(yb / d)) << "\"/>\n";
}

void polyline_paths(std::ostringstream& out, const Frame& f, const std::vector<std::vector<LHVertex>>& paths,
                    const char* id, const char* colour) {
  out << "<g id=\"" << id << "\" stroke=\"" << colour << "\" stroke-width=\"2\" fill=\"none\">\n";
  for (const auto& p : paths) {
    out << "<polyline points=\"";
    for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << f.lattice(p[k].col, vy(p[k]));
    out << "\"/>\n";
  }
  out << "</g>\n";
}

void skeleton(std::ostringstream& out, const Frame& f, const LectureHallGraph& g, bool dual) {
  out << "<g id=\"skeleton\" stroke=\"#c8c8c8\" stroke-width=\"0.5\" fill=\"none\">\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const LHVertex v = g.vertex(i);
    const auto a = dual ? g.dual_right(v) : g.right(v);
    const auto b = dual ? g.up(v) : g.down(v);
    for (const auto& w : {a, b})
      if (w) line(out, f, v.col, vy(v), w->col, vy(*w));
  }
  out << "</g>\n";
}

void overlay(std::ostringstream& out, const Frame& f, const CurveOverlay& o) {
  out << "<g id=\"curve\" stroke=\"#d62728\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (const auto& pl : sample_curve(o.profile, o.tau, o.points_per_branch)) {
    out << "<polyline data-branch=\"" << branch_name(pl.branch.kind) << "\" points=\"";
    bool first = true;
    for (const auto& p : pl.points) {
      if (!std::isfinite(p.X) || !std::isfinite(p.Y)) continue;
      out << (first ? "" : " ") << f.world(p.X, p.Y);
      first = false;
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
}

Frame lattice_frame(const RenderSpec& spec, int W, int t, int n) {
  return Frame(spec, -0.5, W + 0.5, -0.7, t + 0.4, n);
}

void render_paths(std::ostringstream& out, const RenderSpec& spec, const PathSystem& ps) {
  const Partition shape = validate_paths(ps);
  const int W = truncation_width(shape);
  const Frame f = lattice_frame(spec, W, ps.t, ps.n);
  header(out, spec);
  const LectureHallGraph g(ps.t, W);
  if (g.vertex_count() <= spec.skeleton_limit) skeleton(out, f, g, false);
  if (shape.size() > 0) polyline_paths(out, f, ps.paths, "paths", "#1f4e9c");
  if (spec.overlay) overlay(out, f, *spec.overlay);
}

void render_dual(std::ostringstream& out, const RenderSpec& spec, const DualPathSystem& dps) {
  const Partition shape = validate_dual_paths(dps);
  const int W = std::max(truncation_width(shape), dps.n + dps.m - 1);
  const Frame f = lattice_frame(spec, W, dps.t, dps.n);
  header(out, spec);
  const LectureHallGraph g(dps.t, W);
  if (g.vertex_count() <= spec.skeleton_limit) skeleton(out, f, g, true);
  if (!dps.paths.empty()) polyline_paths(out, f, dps.paths, "dual-paths", "#2a8c3a");
  if (spec.overlay) overlay(out, f, *spec.overlay);
}

void render_dimers(std::ostringstream& out, const RenderSpec& spec, const DimerConfiguration& d) {
  if (!d.lattice) throw Error(ErrorCode::InvalidArgument, "dimer configuration has no lattice");
  const LectureHallLattice& L = *d.lattice;
  const LectureHallGraph& g = L.graph();
  const int n = L.shape().n();
  const int t = L.t();
  const std::size_t V = L.regular_count();
  const Frame f = lattice_frame(spec, g.width(), t, n);

  auto white_at = [&](std::size_t w) -> std::pair<double, double> {
    if (w < V) {
      const LHVertex v = g.vertex(w);
      return {v.col - 0.12, vy(v) + 0.12 / (v.col + 1)};
    }
    const int col = n - 1 - static_cast<int>(w - V);
    return {col - 0.12, t + 0.25};
  };
  auto black_at = [&](std::size_t b) -> std::pair<double, double> {
    if (b < V) {
      const LHVertex v = g.vertex(b);
      return {v.col + 0.12, vy(v) - 0.12 / (v.col + 1)};
    }
    const int r = static_cast<int>(b - V);
    return {L.shape().part(r) + n - 1 - r + 0.12, -0.45};
  };
  auto edge_line = [&](const HEdge& e) {
    const auto [xw, yw] = white_at(e.white);
    const auto [xb, yb] = black_at(e.black);
    line(out, f, xw, yw, xb, yb);
  };

  header(out, spec);
  const bool full = V <= spec.skeleton_limit;
  if (full) {
    out << "<g id=\"skeleton\" stroke=\"#c8c8c8\" stroke-width=\"0.5\" fill=\"none\">\n";
    for (const auto& e : L.edges()) edge_line(e);
    out << "</g>\n";
  }
  out << "<g id=\"dimers\" stroke=\"#1f4e9c\" stroke-width=\"3\" stroke-linecap=\"round\" fill=\"none\">\n";
  for (std::size_t id : d.matching) edge_line(L.edges().at(id));
  out << "</g>\n";
  if (full) {
    const double r = std::max(1.0, 0.06 * f.scale / f.divisor);
    out << "<g id=\"vertices\" stroke=\"black\" stroke-width=\"0.5\">\n";
    for (std::size_t w = 0; w < L.white_count(); ++w) {
      const auto [x, y] = white_at(w);
      out << "<circle cx=\"" << num(f.px(x / f.divisor)) << "\" cy=\"" << num(f.py(y / f.divisor)) << "\" r=\""
          << num(r) << "\" fill=\"white\"/>\n";
    }
    for (std::size_t b = 0; b < L.black_count(); ++b) {
      const auto [x, y] = black_at(b);
      out << "<circle cx=\"" << num(f.px(x / f.divisor)) << "\" cy=\"" << num(f.py(y / f.divisor)) << "\" r=\""
          << num(r) << "\" fill=\"black\"/>\n";
    }
    out << "</g>\n";
  }
  if (spec.overlay) overlay(out, f, *spec.overlay);
}

void render_height(std::ostringstream& out, const RenderSpec& spec, const HeightFunction& h) {
  const int W = h.strips();
  const int t = W > 0 ? h.slots(0) : 1;
  const Frame f = lattice_frame(spec, std::max(W, 1), t, h.n());
  int hmax = 1;
  for (const auto& strip : h.values())
    for (int v : strip) hmax = std::max(hmax, v);
  header(out, spec);
  out << "<g id=\"height\" stroke=\"none\">\n";
  for (int c = 0; c < W; ++c)
    for (int j = 0; j < h.slots(c); ++j) {
      const double ylo = static_cast<double>(j) / (c + 1), yhi = static_cast<double>(j + 1) / (c + 1);
      const double x = f.px(c / f.divisor), y = f.py(yhi / f.divisor);
      const double w = f.px((c + 1) / f.divisor) - x, hh = f.py(ylo / f.divisor) - y;
      const int g = 235 - static_cast<int>(std::lround(200.0 * h.at(c, j) / hmax));
      char fill[8];
      std::snprintf(fill, sizeof fill, "#%02x%02x%02x", g, g, g);
      out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(hh)
          << "\" fill=\"" << fill << "\" data-h=\"" << h.at(c, j) << "\"/>\n";
    }
  out << "</g>\n";
  if (spec.overlay) overlay(out, f, *spec.overlay);
}

}  // namespace

std::string render(const SceneData& scene, const RenderSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0) throw Error(ErrorCode::InvalidArgument, "canvas dimensions must be positive");
  if (spec.overlay && !spec.rescale) throw Error(ErrorCode::InvalidArgument, "a curve overlay needs rescaled coordinates");
  static constexpr SceneKind kinds[] = {SceneKind::Paths, SceneKind::DualPaths, SceneKind::Dimers, SceneKind::Height};
  if (kinds[scene.index()] != spec.scene)
    throw Error(ErrorCode::MismatchedScene, "scene data is not of kind " + scene_name(spec.scene));

  std::ostringstream out;
  std::visit(
      [&](const auto& data) {
        using T = std::decay_t<decltype(data)>;
        if constexpr (std::is_same_v<T, PathSystem>) render_paths(out, spec, data);
        else if constexpr (std::is_same_v<T, DualPathSystem>) render_dual(out, spec, data);
        else if constexpr (std::is_same_v<T, DimerConfiguration>) render_dimers(out, spec, data);
        else render_height(out, spec, data);
      },
      scene);
  out << "</svg>\n";
  return out.str();
}

std::string render_curve(const CurveOverlay& curve, int width, int height) {
  if (width <= 0 || height <= 0) throw Error(ErrorCode::InvalidArgument, "canvas dimensions must be positive");
  if (!(curve.tau > 0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  RenderSpec spec;
  spec.width = width;
  spec.height = height;
  const double U = curve.profile.domain_end();
  const Frame f(spec, -0.05 * U, 1.05 * U, -0.05 * curve.tau, 1.05 * curve.tau, 1);
  std::ostringstream out;
  header(out, spec);
  out << "<rect id=\"domain\" x=\"" << num(f.px(0)) << "\" y=\"" << num(f.py(curve.tau)) << "\" width=\""
      << num(f.px(U) - f.px(0)) << "\" height=\"" << num(f.py(0) - f.py(curve.tau))
      << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  overlay(out, f, curve);
  out << "</svg>\n";
  return out.str();
}

}  // namespace lht
