#include <doctest.h>

#include "lht/counting.hpp"
#include "lht/dimer.hpp"
#include "lht/error.hpp"

using namespace lht;

TEST_CASE("|det K| counts tableaux") {
  for (const auto& shape : partitions_in_box(3, 2))
    for (int t = 1; t <= 3; ++t) CHECK(kasteleyn_determinant(kasteleyn_matrix(shape, t)) == count_blht(shape, t));
}

TEST_CASE("face signs alternate correctly") {
  const auto r = check_face_signs(kasteleyn_matrix(Partition::make({3, 2, 1}), 3));
  CHECK(r.faces > 0);
  CHECK(r.faces == r.hexagons + r.octagons);
  CHECK(r.violations.empty());
}

TEST_CASE("edge probabilities equal enumerated frequencies") {
  for (const auto& [parts, t] : std::vector<std::pair<std::vector<int>, int>>{{{1}, 2}, {{2, 1}, 2}, {{2, 2}, 3}}) {
    const Partition shape = Partition::make(parts);
    const KasteleynMatrix K = kasteleyn_matrix(shape, t);
    const auto probs = all_edge_probabilities(K);
    std::vector<long> hits(probs.size(), 0);
    long total = 0;
    for (const auto& T : enumerate_all(shape, t)) {
      for (std::size_t e : paths_to_dimers(tableau_to_paths(T), K.lattice).matching) ++hits[e];
      ++total;
    }
    for (std::size_t e = 0; e < probs.size(); ++e) {
      mpq_class f(hits[e], total);
      f.canonicalize();
      CHECK(probs[e] == f);
    }
  }
}

TEST_CASE("probabilities around a white vertex sum to one") {
  const KasteleynMatrix K = kasteleyn_matrix(Partition::make({2, 2}), 3);
  const auto probs = all_edge_probabilities(K);
  for (std::size_t w = 0; w < K.lattice->white_count(); ++w) {
    mpq_class s = 0;
    for (std::size_t e : K.lattice->white_edges(w)) s += probs[e];
    CHECK(s == 1);
  }
}

TEST_CASE("floating-point route agrees with the exact one") {
  const KasteleynMatrix K = kasteleyn_matrix(Partition::make({2, 2}), 3);
  const auto& e0 = K.lattice->edges()[0];
  const auto& e1 = K.lattice->edges()[K.lattice->edges().size() - 1];
  const std::vector<EdgeRef> edges{{e0.white, e0.black}, {e1.white, e1.black}};
  const auto exact = edge_probability(K, edges);
  const auto approx = edge_probability(K, edges, EdgeProbabilityOptions{0});
  CHECK(exact.exact);
  CHECK_FALSE(approx.exact);
  CHECK(approx.value == doctest::Approx(exact.value).epsilon(1e-10));
  CHECK(exact.value >= 0);
  CHECK(exact.value <= 1);
  CHECK_THROWS_AS(edge_probability(K, {{0, K.size() - 1}}), Error);
}

TEST_CASE("single-row inverse") {
  for (int n : {2, 3})
    for (int kappa : {1, 2}) CHECK(SingleRowKasteleyn(n, kappa).identity_failures() == 0);
  CHECK_THROWS_AS(closed_form_inverse_single_row(3, 4, 2, 0, 2, 0), Error);
  CHECK_THROWS_AS(closed_form_inverse_single_row(3, 3, 9, 0, 2, 0), Error);
}
