#include "lht/profile.hpp"

#include <cmath>
#include <cstdint>

#include "lht/error.hpp"

namespace lht {

namespace {
constexpr double kTol = 1e-12;
}

Profile Profile::make(std::vector<ProfileSegment> segments) {
  if (segments.empty()) throw Error(ErrorCode::InadmissibleProfile, "no segments");
  if (std::abs(segments.front().u_start) > kTol) throw Error(ErrorCode::InadmissibleProfile, "domain must start at u=0");
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const auto& s = segments[k];
    if (!(s.u_start < s.u_end)) throw Error(ErrorCode::InadmissibleProfile, "segment with u_start >= u_end");
    if (s.slope > 0) throw Error(ErrorCode::InadmissibleProfile, "increasing segment");
    if (s.bottom() < -kTol) throw Error(ErrorCode::InadmissibleProfile, "alpha takes negative values");
    if (k > 0) {
      const auto& prev = segments[k - 1];
      if (std::abs(prev.u_end - s.u_start) > kTol) throw Error(ErrorCode::InadmissibleProfile, "segments leave a gap or overlap");
      if (s.top() > prev.bottom() + kTol) throw Error(ErrorCode::InadmissibleProfile, "upward jump");
    }
  }
  if (segments.back().u_end < 1 - kTol) throw Error(ErrorCode::InadmissibleProfile, "domain end U must be at least 1");
  return Profile(std::move(segments));
}

Profile Profile::square(double p) { return make({{0, 1, -1, p}}); }

Profile Profile::staircase(double p) { return make({{0, 1, -p, p}}); }

Profile Profile::empty_cusp() { return make({{0, 1, -1, 4}, {1, 2, -2, 4}}); }

Profile Profile::vertical_cusp() { return make({{0, 1, -2, 4}, {1, 2, -1, 3}}); }

Profile Profile::builtin(const std::string& name) {
  if (name == "square") return square();
  if (name == "staircase") return staircase();
  if (name == "empty-cusp") return empty_cusp();
  if (name == "vertical-cusp") return vertical_cusp();
  auto param = [&](const std::string& prefix) -> double {
    return std::stod(name.substr(prefix.size()));
  };
  try {
    if (name.rfind("square-", 0) == 0) return square(param("square-"));
    if (name.rfind("staircase-", 0) == 0) return staircase(param("staircase-"));
  } catch (const std::invalid_argument&) {
  }
  throw Error(ErrorCode::InvalidArgument, "unknown profile '" + name + "'");
}

double Profile::value(double u) const {
  for (const auto& s : segments_)
    if (u < s.u_end) return s.at(u);
  return segments_.back().at(u);
}

double Profile::left_limit(double u) const {
  for (const auto& s : segments_)
    if (u <= s.u_end) return s.at(u);
  return segments_.back().at(u);
}

std::vector<ProfileJump> Profile::jumps() const {
  std::vector<ProfileJump> out;
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    double above = segments_[k - 1].bottom();
    double below = segments_[k].top();
    if (above - below > kTol) out.push_back({segments_[k].u_start, above, below});
  }
  return out;
}

Profile profile_from_partition(const Partition& shape, int scale) {
  const std::int64_t n = shape.n();
  if (scale <= 0) scale = static_cast<int>(n);
  if (scale > n) throw Error(ErrorCode::InvalidArgument, "scale larger than the number of parts");
  // Corner points in units of 1/n, grouped into blocks separated by gaps >= 2.
  struct Pt {
    std::int64_t u, v;
  };
  std::vector<std::vector<Pt>> blocks;
  for (int r = 0; r < n; ++r) {
    bool new_block = r == 0 || shape.part(r - 1) - shape.part(r) >= 2;
    if (new_block) blocks.push_back({{r, shape.a(r) + 1}});
    blocks.back().push_back({r + 1, shape.a(r)});
  }
  std::vector<ProfileSegment> segs;
  const double nn = static_cast<double>(scale);
  for (const auto& pts : blocks) {
    std::size_t start = 0;
    while (start + 1 < pts.size()) {
      std::size_t end = start + 1;
      const std::int64_t du = pts[end].u - pts[start].u, dv = pts[end].v - pts[start].v;
      while (end + 1 < pts.size()) {
        const std::int64_t eu = pts[end + 1].u - pts[start].u, ev = pts[end + 1].v - pts[start].v;
        if (du * ev != dv * eu) break;
        ++end;
      }
      const double slope = static_cast<double>(pts[end].v - pts[start].v) / static_cast<double>(pts[end].u - pts[start].u);
      const double u0 = pts[start].u / nn, u1 = pts[end].u / nn;
      const double v0 = pts[start].v / nn;
      segs.push_back({u0, u1, slope, v0 - slope * u0});
      start = end;
    }
  }
  return Profile::make(std::move(segs));
}

}  // namespace lht
