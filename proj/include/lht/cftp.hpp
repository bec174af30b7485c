#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lht/counting.hpp"
#include "lht/tableau.hpp"

namespace lht {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Counter-based: (seed, step) always maps to the same pair in [0,1)^2.
class RandomTape {
 public:
  explicit RandomTape(std::uint64_t seed) : seed_(seed), key_(splitmix64(seed)) {}
  std::uint64_t seed() const { return seed_; }
  std::pair<double, double> at(std::uint64_t step) const;

 private:
  std::uint64_t seed_;
  std::uint64_t key_;
};

std::pair<std::int64_t, std::int64_t> allowed_range(const LectureHallTableau& T, int row, int col);

// Row-major cell numbering with precomputed neighbours, shared by both coupled chains.
class ChainLayout {
 public:
  ChainLayout(const Partition& shape, int t);

  struct Cell {
    std::int64_t d;
    std::int64_t bound;
    std::int64_t left, right, above, below;  // flat indices or -1
  };

  const Partition& shape() const { return shape_; }
  int t() const { return t_; }
  std::size_t cells() const { return cells_.size(); }
  const Cell& cell(std::size_t k) const { return cells_[k]; }
  std::size_t select(double k) const;

  template <class V>
  std::pair<V, V> range(const V* values, std::size_t k) const;

 private:
  Partition shape_;
  int t_;
  std::vector<Cell> cells_;
};

struct ChainState {
  LectureHallTableau lower;
  LectureHallTableau upper;
};

ChainState heat_bath_step(const ChainState& state, double k, double l);

enum class CftpMode { Exact, Approx };

struct CftpOptions {
  CftpMode mode = CftpMode::Exact;
  std::uint64_t max_steps = std::uint64_t{1} << 30;
  // First horizon of the doubling sequence. Exact output does not depend on it.
  std::uint64_t initial_horizon = 1;
  // Approx mode stops once every cell of the two chains differs by at most this much.
  std::int64_t approx_tolerance = 1;
};

struct CftpResult {
  LectureHallTableau sample;
  std::uint64_t horizon;
  bool exact;
};

CftpResult cftp_run(const Partition& shape, int t, std::uint64_t seed, const CftpOptions& options = {});
LectureHallTableau cftp_sample(const Partition& shape, int t, std::uint64_t seed, const CftpOptions& options = {});

std::vector<CftpResult> sample_many(const Partition& shape, int t, std::uint64_t seed, std::size_t count,
                                    unsigned workers, const CftpOptions& options = {});

// Exact transition probabilities P[i][j] of one heat-bath step between enumerated states.
RationalMatrix heat_bath_kernel(const std::vector<LectureHallTableau>& states);

}  // namespace lht
