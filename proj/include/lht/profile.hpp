#pragma once

#include <string>
#include <vector>

#include "lht/partition.hpp"

namespace lht {

struct ProfileSegment {
  double u_start = 0;
  double u_end = 0;
  double slope = 0;
  double intercept = 0;

  double at(double u) const { return intercept + slope * u; }
  double top() const { return at(u_start); }
  double bottom() const { return at(u_end); }
  double length() const { return u_end - u_start; }
};

struct ProfileJump {
  double u = 0;
  double above = 0;  // left limit
  double below = 0;  // right value
  double size() const { return above - below; }
};

// Piecewise-linear non-increasing alpha on [0, U]. Segments are half-open [u_start, u_end)
// except the last, so alpha is right-continuous at jumps.
class Profile {
 public:
  static Profile make(std::vector<ProfileSegment> segments);

  static Profile square(double p = 2.0);      // p - u on [0,1]
  static Profile staircase(double p = 2.0);   // p(1 - u) on [0,1]
  static Profile empty_cusp();                // 4 - u on [0,1], 4 - 2u on (1,2]
  static Profile vertical_cusp();             // 4 - 2u on [0,1], 3 - u on (1,2]
  static Profile builtin(const std::string& name);

  const std::vector<ProfileSegment>& segments() const { return segments_; }
  double domain_end() const { return segments_.back().u_end; }
  double value(double u) const;
  double left_limit(double u) const;
  double at_zero() const { return segments_.front().top(); }
  double at_end() const { return segments_.back().bottom(); }
  std::vector<ProfileJump> jumps() const;

 private:
  explicit Profile(std::vector<ProfileSegment> s) : segments_(std::move(s)) {}
  std::vector<ProfileSegment> segments_;
};

// Finite-n profile: cell i occupies [(i-1)/n, i/n]; inside a block without macroscopic gaps
// the corner points ((i-1)/n, (a_i+1)/n) at the block start and (i/n, a_i/n) are joined linearly.
// scale defaults to n; families with kn parts use scale n to get a domain [0, k].
Profile profile_from_partition(const Partition& shape, int scale = 0);

}  // namespace lht
