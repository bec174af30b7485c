#include <doctest.h>

#include <set>

#include "lht/counting.hpp"
#include "lht/error.hpp"
#include "lht/lattice.hpp"

using namespace lht;

namespace {

PathSystem reference_paths() {
  return {3, 2, {{{1, 5}, {2, 7}, {2, 6}, {3, 8}, {3, 7}, {3, 6}, {3, 5}, {3, 4}, {3, 3}, {3, 2}, {3, 1}, {3, 0}},
                 {{0, 2}, {1, 4}, {1, 3}, {2, 4}, {2, 3}, {2, 2}, {2, 1}, {2, 0}}}};
}

}  // namespace

TEST_CASE("graph steps keep the integer part") {
  const LectureHallGraph g(3, 3);
  CHECK(g.column_size(2) == 9);
  CHECK(*g.right({0, 2}) == LHVertex{1, 4});
  CHECK(*g.right({1, 5}) == LHVertex{2, 7});
  CHECK(*g.right({2, 6}) == LHVertex{3, 8});
  CHECK_FALSE(g.down({1, 0}).has_value());
  CHECK_FALSE(g.right({3, 0}).has_value());
  CHECK(g.is_edge({1, 3}, {2, 4}));
}

TEST_CASE("tableau [[5,6],[2,3]] maps to its two paths") {
  const auto T = LectureHallTableau::make(Partition::make({2, 2}), 3, {{5, 6}, {2, 3}});
  const PathSystem ps = tableau_to_paths(T);
  CHECK(ps == reference_paths());
  CHECK(paths_to_tableau(ps) == T);
  CHECK(validate_paths(ps) == Partition::make({2, 2}));
}

TEST_CASE("round trips over every small tableau") {
  for (const auto& shape : partitions_in_box(3, 2))
    for (int t = 1; t <= 3; ++t) {
      auto lattice = std::make_shared<const LectureHallLattice>(shape, t);
      std::set<std::vector<std::size_t>> images;
      std::size_t k = 0;
      for (const auto& T : enumerate_all(shape, t)) {
        const PathSystem ps = tableau_to_paths(T);
        CHECK(paths_to_tableau(ps) == T);
        CHECK(dual_to_paths(paths_to_dual(ps)) == ps);
        const auto d = paths_to_dimers(ps, lattice);
        CHECK(d.is_perfect());
        images.insert(d.matching);
        ++k;
      }
      CHECK(images.size() == k);
    }
}

TEST_CASE("malformed path systems are rejected") {
  PathSystem ps = reference_paths();
  ps.paths[0][1] = {2, 6};
  CHECK_THROWS_AS(validate_paths(ps), Error);
  PathSystem crossing = reference_paths();
  std::swap(crossing.paths[0], crossing.paths[1]);
  CHECK_THROWS_AS(validate_paths(crossing), Error);
}

TEST_CASE("height function of the [[5,6],[2,3]] paths") {
  const HeightFunction h = height_function(reference_paths());
  const std::vector<std::vector<int>> expected = {{0, 0}, {0, 0, 0, 1, 1}, {1, 1, 1, 1, 1, 1, 2, 2}};
  for (int c = 0; c < 3; ++c)
    for (std::size_t j = 0; j < expected[c].size(); ++j) CHECK(h.at(c, static_cast<std::int64_t>(j)) == expected[c][j]);
  CHECK(h.outer_top_right() == 2);
}

TEST_CASE("heights step by zero or one and reach n at the top right") {
  for (const auto& T : enumerate_all(Partition::make({2, 1, 1}), 2)) {
    const HeightFunction h = height_function(tableau_to_paths(T));
    CHECK(h.outer_top_right() == 3);
    for (int c = 0; c < h.strips(); ++c)
      for (int j = 1; j < h.slots(c); ++j) {
        const int step = h.at(c, j) - h.at(c, j - 1);
        CHECK((step == 0 || step == 1));
      }
  }
}

TEST_CASE("lattice faces and decorations") {
  const LectureHallLattice L(Partition::make({2, 2}), 3);
  CHECK(L.white_count() == L.black_count());
  std::size_t hex = 0, oct = 0;
  for (const auto& f : L.bounded_faces()) {
    if (f.edges.size() == 6) ++hex;
    if (f.edges.size() == 8) ++oct;
  }
  CHECK(hex == 9);
  CHECK(oct == 6);
}

TEST_CASE("a single vertical path uses only decorations and verticals") {
  const Partition p = Partition::make({0});
  const auto T = LectureHallTableau::make(p, 1, {{}});
  const auto d = paths_to_dimers(tableau_to_paths(T));
  CHECK(d.is_perfect());
  REQUIRE(d.matching.size() == 2);
  CHECK(d.lattice->edges()[d.matching[0]].kind == HEdgeKind::TopDecoration);
  CHECK(d.lattice->edges()[d.matching[1]].kind == HEdgeKind::BottomDecoration);
}
