#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lht/partition.hpp"

namespace lht {

using Rows = std::vector<std::vector<std::int64_t>>;

// Rows and columns are 0-based in code; the denominator of cell (r, c) is n - r + c,
// which is n - i + j for the 1-based cell (i, j) = (r + 1, c + 1).
inline std::int64_t cell_denominator(int n, int row, int col) { return n - row + col; }

bool is_valid_blht(const Rows& entries, const Partition& shape, int t);

class LectureHallTableau {
 public:
  static LectureHallTableau make(const Partition& shape, int t, const Rows& rows);
  // Flat row-major cells; validated.
  static LectureHallTableau from_cells(const Partition& shape, int t, std::vector<std::int64_t> cells);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int t() const { return t_; }
  std::int64_t at(int row, int col) const { return cells_[shape_.row_offset(row) + col]; }
  std::span<const std::int64_t> cells() const { return cells_; }
  Rows rows() const;

  // Cellwise partial order.
  bool leq(const LectureHallTableau& other) const;

  bool operator==(const LectureHallTableau& other) const {
    return t_ == other.t_ && shape_ == other.shape_ && cells_ == other.cells_;
  }

 private:
  LectureHallTableau(Partition shape, int t, std::vector<std::int64_t> cells)
      : shape_(std::move(shape)), t_(t), cells_(std::move(cells)) {}

  Partition shape_;
  int t_;
  std::vector<std::int64_t> cells_;
};

std::pair<LectureHallTableau, LectureHallTableau> extremal_tableaux(const Partition& shape, int t);

}  // namespace lht
