#include "lht/partition.hpp"

#include <sstream>

#include "lht/error.hpp"

namespace lht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  offsets_.reserve(parts_.size() + 1);
  for (int p : parts_) {
    offsets_.push_back(size_);
    size_ += p;
  }
  offsets_.push_back(size_);
}

Partition Partition::make(std::vector<int> parts) {
  if (parts.empty()) throw Error(ErrorCode::EmptyPartition, "a partition needs at least one part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw Error(ErrorCode::NegativePart, "part " + std::to_string(i + 1) + " is negative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw Error(ErrorCode::NotWeaklyDecreasing, "part " + std::to_string(i + 1) + " exceeds its predecessor");
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate(int m) const {
  if (m < first()) throw Error(ErrorCode::MTooSmall, "declared length " + std::to_string(m) + " < lambda_1");
  if (m < 1) throw Error(ErrorCode::MTooSmall, "declared length must be positive");
  std::vector<int> out(m, 0);
  for (int i = 1; i <= m; ++i) {
    int c = 0;
    for (int p : parts_)
      if (p >= i) ++c;
    out[i - 1] = c;
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition make_partition(std::vector<int> parts) { return Partition::make(std::move(parts)); }

Partition conjugate(const Partition& p, int m) { return p.conjugate(m); }

namespace {

void box_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(Partition::make(cur));
    return;
  }
  int hi = cur.empty() ? max_part : cur.back();
  for (int v = hi; v >= 0; --v) {
    cur.push_back(v);
    box_rec(n, max_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  box_rec(n, max_part, cur, out);
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "not an integer: '" + tok + "'");
    }
    while (pos < tok.size() && tok[pos] == ' ') ++pos;
    if (pos != tok.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace lht
