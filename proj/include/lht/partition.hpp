#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lht {

// Parts are weakly decreasing and nonnegative. Trailing zeros count towards n.
class Partition {
 public:
  static Partition make(std::vector<int> parts);

  int n() const { return static_cast<int>(parts_.size()); }
  int part(int row) const { return parts_[row]; }
  std::span<const int> parts() const { return parts_; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  std::int64_t size() const { return size_; }

  // a_i = n + lambda_i - i with 1-based i; row is 0-based here.
  int a(int row) const { return n() + parts_[row] - (row + 1); }

  // Offset of the first cell of a row in row-major numbering.
  std::int64_t row_offset(int row) const { return offsets_[row]; }

  Partition conjugate(int m) const;

  std::string to_string() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

 private:
  explicit Partition(std::vector<int> parts);

  std::vector<int> parts_;
  std::vector<std::int64_t> offsets_;
  std::int64_t size_ = 0;
};

Partition make_partition(std::vector<int> parts);
Partition conjugate(const Partition& p, int m);

// Every partition with at most n parts (exactly n, padded with zeros) and parts <= max_part.
std::vector<Partition> partitions_in_box(int n, int max_part);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace lht
