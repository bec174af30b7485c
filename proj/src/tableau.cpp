#include "lht/tableau.hpp"

#include <algorithm>
#include <string>

#include "lht/error.hpp"

namespace lht {

namespace {

void check_shape(const Rows& entries, const Partition& shape) {
  if (static_cast<int>(entries.size()) > shape.n())
    throw Error(ErrorCode::ShapeMismatch, "more rows than parts");
  for (int r = 0; r < shape.n(); ++r) {
    std::size_t len = r < static_cast<int>(entries.size()) ? entries[r].size() : 0;
    if (len != static_cast<std::size_t>(shape.part(r)))
      throw Error(ErrorCode::ShapeMismatch, "row " + std::to_string(r + 1) + " has length " + std::to_string(len) +
                                                ", expected " + std::to_string(shape.part(r)));
  }
}

template <class Get>
bool valid_cells(const Partition& shape, int t, Get get) {
  const int n = shape.n();
  if (t < 1) return false;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < shape.part(r); ++c) {
      const std::int64_t d = cell_denominator(n, r, c);
      const std::int64_t v = get(r, c);
      if (v < 0 || v >= t * d) return false;
      if (c + 1 < shape.part(r) && v * (d + 1) < get(r, c + 1) * d) return false;
      if (r + 1 < n && c < shape.part(r + 1) && v * (d - 1) <= get(r + 1, c) * d) return false;
    }
  }
  return true;
}

}  // namespace

bool is_valid_blht(const Rows& entries, const Partition& shape, int t) {
  check_shape(entries, shape);
  return valid_cells(shape, t, [&](int r, int c) { return entries[r][c]; });
}

LectureHallTableau LectureHallTableau::make(const Partition& shape, int t, const Rows& rows) {
  if (!is_valid_blht(rows, shape, t)) throw Error(ErrorCode::InvalidTableau, "filling violates the lecture hall conditions");
  std::vector<std::int64_t> cells;
  cells.reserve(shape.size());
  for (int r = 0; r < shape.n(); ++r) cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  return LectureHallTableau(shape, t, std::move(cells));
}

LectureHallTableau LectureHallTableau::from_cells(const Partition& shape, int t, std::vector<std::int64_t> cells) {
  if (static_cast<std::int64_t>(cells.size()) != shape.size())
    throw Error(ErrorCode::ShapeMismatch, "cell count does not match |lambda|");
  bool ok = valid_cells(shape, t, [&](int r, int c) { return cells[shape.row_offset(r) + c]; });
  if (!ok) throw Error(ErrorCode::InvalidTableau, "filling violates the lecture hall conditions");
  return LectureHallTableau(shape, t, std::move(cells));
}

Rows LectureHallTableau::rows() const {
  Rows out(shape_.n());
  for (int r = 0; r < shape_.n(); ++r)
    out[r].assign(cells_.begin() + shape_.row_offset(r), cells_.begin() + shape_.row_offset(r + 1));
  return out;
}

bool LectureHallTableau::leq(const LectureHallTableau& other) const {
  for (std::size_t k = 0; k < cells_.size(); ++k)
    if (cells_[k] > other.cells_[k]) return false;
  return true;
}

std::pair<LectureHallTableau, LectureHallTableau> extremal_tableaux(const Partition& shape, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  const int n = shape.n();
  std::vector<std::int64_t> lo(shape.size(), 0), hi(shape.size(), 0);
  auto at = [&](std::vector<std::int64_t>& v, int r, int c) -> std::int64_t& { return v[shape.row_offset(r) + c]; };
  auto floor_div = [](std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); };
  auto ceil_div = [&](std::int64_t a, std::int64_t b) { return -floor_div(-a, b); };

  for (int r = n - 1; r >= 0; --r) {
    for (int c = shape.part(r) - 1; c >= 0; --c) {
      const std::int64_t d = cell_denominator(n, r, c);
      std::int64_t v = 0;
      if (c + 1 < shape.part(r)) v = std::max(v, ceil_div(at(lo, r, c + 1) * d, d + 1));
      if (r + 1 < n && c < shape.part(r + 1)) v = std::max(v, floor_div(at(lo, r + 1, c) * d, d - 1) + 1);
      at(lo, r, c) = v;
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < shape.part(r); ++c) {
      const std::int64_t d = cell_denominator(n, r, c);
      std::int64_t v = t * d - 1;
      if (c > 0) v = std::min(v, floor_div(at(hi, r, c - 1) * d, d - 1));
      if (r > 0) v = std::min(v, ceil_div(at(hi, r - 1, c) * d, d + 1) - 1);
      at(hi, r, c) = v;
    }
  }
  return {LectureHallTableau::from_cells(shape, t, std::move(lo)), LectureHallTableau::from_cells(shape, t, std::move(hi))};
}

}  // namespace lht
