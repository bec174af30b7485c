#pragma once

#include <optional>
#include <string>
#include <variant>

#include "lht/lattice.hpp"
#include "lht/profile.hpp"

namespace lht {

enum class SceneKind { Paths, DualPaths, Dimers, Height };
SceneKind parse_scene(const std::string& name);
std::string scene_name(SceneKind kind);

struct CurveOverlay {
  Profile profile;
  double tau = 1;
  int points_per_branch = 400;
};

struct RenderSpec {
  SceneKind scene = SceneKind::Paths;
  std::optional<CurveOverlay> overlay;
  int width = 800;
  int height = 800;
  bool rescale = false;
  // Lattice skeletons above this many graph vertices are left out.
  std::size_t skeleton_limit = 20000;
};

using SceneData = std::variant<PathSystem, DualPathSystem, DimerConfiguration, HeightFunction>;

std::string render(const SceneData& scene, const RenderSpec& spec);

// The curve alone, in the frame [0, U] x [0, tau].
std::string render_curve(const CurveOverlay& curve, int width = 800, int height = 800);

}  // namespace lht
