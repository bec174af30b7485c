#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "lht/counting.hpp"
#include "lht/lattice.hpp"

namespace lht {

// Rows are blacks, columns whites; one entry per lattice edge, in edge order.
struct KasteleynMatrix {
  std::shared_ptr<const LectureHallLattice> lattice;
  std::vector<int> sign;  // per edge id

  std::size_t size() const { return lattice->black_count(); }
  int at(std::size_t black, std::size_t white) const;
  IntMatrix dense() const;
};

KasteleynMatrix kasteleyn_matrix(const Partition& shape, int t);
BigCount kasteleyn_determinant(const KasteleynMatrix& K);

// Bounded faces whose signs violate the alternating condition (empty when K is Kasteleyn).
struct FaceSignReport {
  std::size_t faces = 0;
  std::size_t hexagons = 0;
  std::size_t octagons = 0;
  std::vector<std::size_t> violations;
};
FaceSignReport check_face_signs(const KasteleynMatrix& K);

// Full inverse, indexed [white][black].
RationalMatrix inverse_exact(const KasteleynMatrix& K);

struct EdgeRef {
  std::size_t white = 0;
  std::size_t black = 0;
};

struct EdgeProbability {
  double value = 0;
  bool exact = false;
  std::optional<mpq_class> rational;
  double rcond = 1;  // reciprocal condition estimate for the floating-point route
  bool ill_conditioned = false;
};

struct EdgeProbabilityOptions {
  std::size_t exact_limit = 400;
};

EdgeProbability edge_probability(const KasteleynMatrix& K, const std::vector<EdgeRef>& edges,
                                 EdgeProbabilityOptions options = {});
// Probabilities of every lattice edge from one exact inverse.
std::vector<mpq_class> all_edge_probabilities(const KasteleynMatrix& K);

// The single-path graph for lambda = (kappa n, 0^{n-1}), t = n: columns n-1 .. n(kappa+1)-1 of the
// lecture hall graph, a source white above the top of column n-1 and a sink black below e = (W, 0).
class SingleRowKasteleyn {
 public:
  SingleRowKasteleyn(int n, int kappa);

  int n() const { return n_; }
  int kappa() const { return kappa_; }
  int last_column() const { return W_; }
  std::size_t regular_count() const { return cols_.back(); }
  std::size_t dimension() const { return regular_count() + 1; }
  std::size_t source_white() const { return regular_count(); }
  std::size_t sink_black() const { return regular_count(); }
  std::size_t index(LHVertex v) const;
  LHVertex vertex(std::size_t i) const;

  int K(std::size_t black, std::size_t white) const;
  // Blacks adjacent to a white, with the matrix entry.
  std::vector<std::pair<std::size_t, int>> white_neighbours(std::size_t white) const;
  std::vector<std::pair<std::size_t, int>> black_neighbours(std::size_t black) const;

  // Exact inverse from vertex-to-vertex path counts.
  const mpq_class& inverse(std::size_t white, std::size_t black) const { return inv_[white][black]; }
  // Number of vertex-to-vertex paths in the restricted graph, source counted as the vertex above top(n-1).
  const mpz_class& paths_between(std::size_t from, std::size_t to) const { return pv_[from][to]; }

  // Exact check of K * Kinv = identity over all black pairs; returns the number of failing entries.
  std::size_t identity_failures() const;

 private:
  int n_, kappa_, W_;
  std::vector<std::size_t> cols_;
  std::vector<std::vector<mpz_class>> pv_;  // [from][to], from includes the source at index regular_count()
  RationalMatrix inv_;
};

// The literal remark formula built on path_count_between.
mpq_class closed_form_inverse_single_row(int n, int kappa_n, long X, long Y, long Xp, long Yp);

}  // namespace lht
