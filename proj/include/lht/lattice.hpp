#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "lht/partition.hpp"
#include "lht/tableau.hpp"

namespace lht {

// Vertex (col, num/(col+1)) of the lecture hall graph; y stays an exact rational.
struct LHVertex {
  int col = 0;
  std::int64_t num = 0;
  auto operator<=>(const LHVertex&) const = default;
};

// Horizontal steps keep the integer part and the residue: num -> num + floor(num/(col+1)).
inline std::int64_t landing(int col, std::int64_t num) { return num + num / (col + 1); }

class LectureHallGraph {
 public:
  LectureHallGraph(int t, int width);

  int t() const { return t_; }
  int width() const { return width_; }
  std::int64_t column_size(int col) const { return static_cast<std::int64_t>(t_) * (col + 1); }
  std::int64_t top(int col) const { return column_size(col) - 1; }
  std::size_t vertex_count() const { return offsets_.back(); }
  bool contains(LHVertex v) const { return v.col >= 0 && v.col <= width_ && v.num >= 0 && v.num < column_size(v.col); }
  std::size_t index(LHVertex v) const { return offsets_[v.col] + static_cast<std::size_t>(v.num); }
  LHVertex vertex(std::size_t index) const;

  std::optional<LHVertex> right(LHVertex v) const;
  std::optional<LHVertex> down(LHVertex v) const;
  // Dual graph: shifted horizontals and upward verticals.
  std::optional<LHVertex> dual_right(LHVertex v) const;
  std::optional<LHVertex> up(LHVertex v) const;

  bool is_edge(LHVertex from, LHVertex to) const;
  bool is_dual_edge(LHVertex from, LHVertex to) const;
  std::vector<std::pair<LHVertex, LHVertex>> edges() const;

 private:
  int t_;
  int width_;
  std::vector<std::size_t> offsets_;
};

LectureHallGraph build_lh_graph(int t, int width);

// Path i (0-based r) runs from (n-1-r, top) down to (lambda_r + n-1-r, 0).
struct PathSystem {
  int t = 1;
  int n = 1;
  std::vector<std::vector<LHVertex>> paths;
  bool operator==(const PathSystem&) const = default;
};

// Dual path j (0-based) runs from (n+j-lambda'_j, 0) up to the top of column n+j.
struct DualPathSystem {
  int t = 1;
  int n = 1;
  int m = 0;
  std::vector<std::vector<LHVertex>> paths;
  bool operator==(const DualPathSystem&) const = default;
};

int truncation_width(const Partition& shape);

// Both throw MalformedPathSystem; they return the shape encoded by the endpoints.
Partition validate_paths(const PathSystem& ps);
Partition validate_dual_paths(const DualPathSystem& dps);

PathSystem tableau_to_paths(const LectureHallTableau& T);
LectureHallTableau paths_to_tableau(const PathSystem& ps);
DualPathSystem paths_to_dual(const PathSystem& ps);
PathSystem dual_to_paths(const DualPathSystem& dps);

// Faces between columns c and c+1 are indexed by the slot j between the horizontal edges
// leaving (c, j) and (c, j+1); the slot t(c+1)-1 stands for the unbounded face above.
class HeightFunction {
 public:
  HeightFunction(int n, std::vector<std::vector<int>> heights) : n_(n), heights_(std::move(heights)) {}
  int n() const { return n_; }
  int strips() const { return static_cast<int>(heights_.size()); }
  int slots(int strip) const { return static_cast<int>(heights_[strip].size()); }
  int at(int strip, std::int64_t slot) const { return heights_[strip][slot]; }
  int outer_top_right() const;
  const std::vector<std::vector<int>>& values() const { return heights_; }

 private:
  int n_;
  std::vector<std::vector<int>> heights_;
};

HeightFunction height_function(const PathSystem& ps);

enum class HEdgeKind { Internal, Horizontal, Vertical, TopDecoration, BottomDecoration };

struct HEdge {
  std::size_t white = 0;
  std::size_t black = 0;
  HEdgeKind kind = HEdgeKind::Internal;
};

// The decorated lecture hall lattice: each graph vertex v splits into white v and black v
// (same index); top decoration whites and bottom decoration blacks follow, one per path.
class LectureHallLattice {
 public:
  LectureHallLattice(const Partition& shape, int t);

  const Partition& shape() const { return shape_; }
  int t() const { return graph_.t(); }
  const LectureHallGraph& graph() const { return graph_; }
  std::size_t regular_count() const { return graph_.vertex_count(); }
  std::size_t white_count() const { return regular_count() + shape_.n(); }
  std::size_t black_count() const { return regular_count() + shape_.n(); }
  const std::vector<HEdge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_between(std::size_t white, std::size_t black) const;
  // Incident edge ids.
  const std::vector<std::size_t>& white_edges(std::size_t white) const { return white_adj_[white]; }
  const std::vector<std::size_t>& black_edges(std::size_t black) const { return black_adj_[black]; }

  // Bounded faces as closed edge cycles, one per (strip, slot).
  struct Face {
    int strip;
    std::int64_t slot;
    std::vector<std::size_t> edges;
  };
  std::vector<Face> bounded_faces() const;

 private:
  Partition shape_;
  LectureHallGraph graph_;
  std::vector<HEdge> edges_;
  std::vector<std::vector<std::size_t>> white_adj_, black_adj_;
};

struct DimerConfiguration {
  std::shared_ptr<const LectureHallLattice> lattice;
  std::vector<std::size_t> matching;  // sorted edge ids
  bool is_perfect() const;
  bool operator==(const DimerConfiguration& o) const { return matching == o.matching; }
};

DimerConfiguration paths_to_dimers(const PathSystem& ps, std::shared_ptr<const LectureHallLattice> lattice = nullptr);

}  // namespace lht
