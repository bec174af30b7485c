#include "lht/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lht/error.hpp"

namespace lht {

LectureHallGraph::LectureHallGraph(int t, int width) : t_(t), width_(width) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  if (width < 0) throw Error(ErrorCode::InvalidArgument, "width must be nonnegative");
  offsets_.push_back(0);
  for (int c = 0; c <= width; ++c) offsets_.push_back(offsets_.back() + static_cast<std::size_t>(column_size(c)));
}

LHVertex LectureHallGraph::vertex(std::size_t index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const int col = static_cast<int>(it - offsets_.begin()) - 1;
  return {col, static_cast<std::int64_t>(index - offsets_[col])};
}

std::optional<LHVertex> LectureHallGraph::right(LHVertex v) const {
  if (!contains(v) || v.col >= width_) return std::nullopt;
  return LHVertex{v.col + 1, landing(v.col, v.num)};
}

std::optional<LHVertex> LectureHallGraph::down(LHVertex v) const {
  if (!contains(v) || v.num == 0) return std::nullopt;
  return LHVertex{v.col, v.num - 1};
}

std::optional<LHVertex> LectureHallGraph::dual_right(LHVertex v) const {
  if (!contains(v) || v.col >= width_) return std::nullopt;
  return LHVertex{v.col + 1, landing(v.col, v.num) + 1};
}

std::optional<LHVertex> LectureHallGraph::up(LHVertex v) const {
  if (!contains(v) || v.num + 1 >= column_size(v.col)) return std::nullopt;
  return LHVertex{v.col, v.num + 1};
}

bool LectureHallGraph::is_edge(LHVertex from, LHVertex to) const {
  return right(from) == std::optional<LHVertex>(to) || down(from) == std::optional<LHVertex>(to);
}

bool LectureHallGraph::is_dual_edge(LHVertex from, LHVertex to) const {
  return dual_right(from) == std::optional<LHVertex>(to) || up(from) == std::optional<LHVertex>(to);
}

std::vector<std::pair<LHVertex, LHVertex>> LectureHallGraph::edges() const {
  std::vector<std::pair<LHVertex, LHVertex>> out;
  for (std::size_t k = 0; k < vertex_count(); ++k) {
    const LHVertex v = vertex(k);
    if (auto r = right(v)) out.emplace_back(v, *r);
    if (auto d = down(v)) out.emplace_back(v, *d);
  }
  return out;
}

LectureHallGraph build_lh_graph(int t, int width) { return LectureHallGraph(t, width); }

int truncation_width(const Partition& shape) { return shape.first() + shape.n() - 1; }

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedPathSystem, why); }

bool in_column(int t, LHVertex v) { return v.col >= 0 && v.num >= 0 && v.num < static_cast<std::int64_t>(t) * (v.col + 1); }

void check_disjoint(std::vector<LHVertex> all) {
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) malformed("paths share a vertex");
}

}  // namespace

Partition validate_paths(const PathSystem& ps) {
  const int n = ps.n, t = ps.t;
  if (t < 1 || n < 1) malformed("t and n must be positive");
  if (static_cast<int>(ps.paths.size()) != n) malformed("expected " + std::to_string(n) + " paths");
  std::vector<int> parts(n);
  std::vector<LHVertex> all;
  for (int r = 0; r < n; ++r) {
    const auto& p = ps.paths[r];
    const int c0 = n - 1 - r;
    if (p.empty()) malformed("empty path");
    if (p.front() != LHVertex{c0, static_cast<std::int64_t>(t) * (c0 + 1) - 1})
      malformed("path " + std::to_string(r + 1) + " does not start at the top of column " + std::to_string(c0));
    if (p.back().num != 0) malformed("path " + std::to_string(r + 1) + " does not end on the bottom row");
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!in_column(t, p[k])) malformed("vertex outside the graph");
      if (k > 0) {
        const LHVertex a = p[k - 1], b = p[k];
        bool ok = (b.col == a.col && b.num == a.num - 1) || (b.col == a.col + 1 && b.num == landing(a.col, a.num));
        if (!ok) malformed("path " + std::to_string(r + 1) + " uses a non-edge");
      }
    }
    parts[r] = p.back().col - c0;
    all.insert(all.end(), p.begin(), p.end());
  }
  check_disjoint(std::move(all));
  try {
    return Partition::make(parts);
  } catch (const Error& e) {
    malformed(std::string("endpoints do not encode a partition: ") + e.what());
  }
}

PathSystem tableau_to_paths(const LectureHallTableau& T) {
  const int n = T.n(), t = T.t();
  PathSystem ps{t, n, std::vector<std::vector<LHVertex>>(n)};
  for (int r = 0; r < n; ++r) {
    auto& path = ps.paths[r];
    LHVertex cur{n - 1 - r, static_cast<std::int64_t>(t) * (n - r) - 1};
    path.push_back(cur);
    for (int c = 0; c < T.shape().part(r); ++c) {
      const std::int64_t target = T.at(r, c);
      if (target > cur.num) throw std::logic_error("tableau_to_paths: entry above current position");
      while (cur.num > target) {
        --cur.num;
        path.push_back(cur);
      }
      cur = {cur.col + 1, landing(cur.col, cur.num)};
      path.push_back(cur);
    }
    while (cur.num > 0) {
      --cur.num;
      path.push_back(cur);
    }
  }
  return ps;
}

LectureHallTableau paths_to_tableau(const PathSystem& ps) {
  const Partition shape = validate_paths(ps);
  Rows rows(ps.n);
  for (int r = 0; r < ps.n; ++r) {
    const auto& p = ps.paths[r];
    for (std::size_t k = 1; k < p.size(); ++k)
      if (p[k].col != p[k - 1].col) rows[r].push_back(p[k - 1].num);
  }
  try {
    return LectureHallTableau::make(shape, ps.t, rows);
  } catch (const Error& e) {
    malformed(std::string("paths do not encode a tableau: ") + e.what());
  }
}

DualPathSystem paths_to_dual(const PathSystem& ps) {
  const LectureHallTableau T = paths_to_tableau(ps);
  const int n = ps.n, t = ps.t, m = T.shape().first();
  DualPathSystem dps{t, n, m, {}};
  if (m == 0) return dps;
  const Partition conj = T.shape().conjugate(m);
  dps.paths.resize(m);
  for (int j = 0; j < m; ++j) {
    const int lj = conj.part(j);
    auto& path = dps.paths[j];
    LHVertex cur{n + j - lj, 0};
    path.push_back(cur);
    for (int k = 0; k < lj; ++k) {
      const int i = lj - 1 - k;
      const std::int64_t v = T.at(i, j);
      if (cur.col != n - i + j - 1 || v < cur.num) throw std::logic_error("paths_to_dual: inconsistent dual step");
      while (cur.num < v) {
        ++cur.num;
        path.push_back(cur);
      }
      cur = {cur.col + 1, landing(cur.col, cur.num) + 1};
      path.push_back(cur);
    }
    const std::int64_t top = static_cast<std::int64_t>(t) * (n + j + 1) - 1;
    while (cur.num < top) {
      ++cur.num;
      path.push_back(cur);
    }
  }
  return dps;
}

Partition validate_dual_paths(const DualPathSystem& dps) {
  const int n = dps.n, t = dps.t, m = dps.m;
  if (t < 1 || n < 1 || m < 0) malformed("t and n must be positive");
  if (static_cast<int>(dps.paths.size()) != m) malformed("expected " + std::to_string(m) + " dual paths");
  std::vector<int> conj(m);
  std::vector<LHVertex> all;
  for (int j = 0; j < m; ++j) {
    const auto& p = dps.paths[j];
    if (p.empty()) malformed("empty dual path");
    if (p.front().num != 0) malformed("dual path does not start on the bottom row");
    conj[j] = n + j - p.front().col;
    if (conj[j] < 0 || conj[j] > n) malformed("dual path starts outside the admissible columns");
    if (p.back() != LHVertex{n + j, static_cast<std::int64_t>(t) * (n + j + 1) - 1})
      malformed("dual path " + std::to_string(j + 1) + " does not end at the top of column " + std::to_string(n + j));
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!in_column(t, p[k])) malformed("vertex outside the graph");
      if (k > 0) {
        const LHVertex a = p[k - 1], b = p[k];
        bool ok = (b.col == a.col && b.num == a.num + 1) || (b.col == a.col + 1 && b.num == landing(a.col, a.num) + 1);
        if (!ok) malformed("dual path " + std::to_string(j + 1) + " uses a non-edge");
      }
    }
    all.insert(all.end(), p.begin(), p.end());
  }
  check_disjoint(std::move(all));
  std::vector<int> parts(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int c : conj)
      if (c >= i) ++parts[i - 1];
  for (int j = 1; j < m; ++j)
    if (conj[j] > conj[j - 1]) malformed("dual start columns do not encode a partition");
  return Partition::make(parts);
}

PathSystem dual_to_paths(const DualPathSystem& dps) {
  const Partition shape = validate_dual_paths(dps);
  const int n = dps.n;
  Rows rows(n);
  for (int r = 0; r < n; ++r) rows[r].assign(shape.part(r), 0);
  for (int j = 0; j < dps.m; ++j) {
    const auto& p = dps.paths[j];
    const int lj = n + j - p.front().col;
    int k = 0;
    for (std::size_t s = 1; s < p.size(); ++s) {
      if (p[s].col == p[s - 1].col) continue;
      const int i = lj - 1 - k;
      if (i < 0 || p[s - 1].col != n - i + j - 1) malformed("dual path has a misplaced horizontal step");
      rows[i][j] = p[s - 1].num;
      ++k;
    }
    if (k != lj) malformed("dual path has the wrong number of horizontal steps");
  }
  try {
    return tableau_to_paths(LectureHallTableau::make(shape, dps.t, rows));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedPathSystem) throw;
    malformed(std::string("dual paths do not encode a tableau: ") + e.what());
  }
}

int HeightFunction::outer_top_right() const {
  if (heights_.empty()) return n_;
  return heights_.back().back();
}

HeightFunction height_function(const PathSystem& ps) {
  const Partition shape = validate_paths(ps);
  const int W = truncation_width(shape);
  const int n = ps.n;
  std::vector<std::vector<int>> h(W);
  for (int c = 0; c < W; ++c) h[c].assign(static_cast<std::size_t>(ps.t) * (c + 1), 0);
  for (const auto& p : ps.paths) {
    const int end_col = p.back().col;
    for (int c = end_col; c < W; ++c)
      for (auto& x : h[c]) ++x;
    for (std::size_t k = 1; k < p.size(); ++k) {
      if (p[k].col == p[k - 1].col) continue;
      auto& strip = h[p[k - 1].col];
      for (std::size_t j = static_cast<std::size_t>(p[k - 1].num); j < strip.size(); ++j) ++strip[j];
    }
  }
  return HeightFunction(n, std::move(h));
}

LectureHallLattice::LectureHallLattice(const Partition& shape, int t)
    : shape_(shape), graph_(t, truncation_width(shape)) {
  const std::size_t V = graph_.vertex_count();
  const int n = shape.n();
  for (std::size_t v = 0; v < V; ++v) edges_.push_back({v, v, HEdgeKind::Internal});
  for (std::size_t v = 0; v < V; ++v)
    if (auto r = graph_.right(graph_.vertex(v))) edges_.push_back({v, graph_.index(*r), HEdgeKind::Horizontal});
  for (std::size_t v = 0; v < V; ++v)
    if (auto d = graph_.down(graph_.vertex(v))) edges_.push_back({v, graph_.index(*d), HEdgeKind::Vertical});
  for (int r = 0; r < n; ++r) {
    const int c = n - 1 - r;
    edges_.push_back({V + r, graph_.index({c, graph_.top(c)}), HEdgeKind::TopDecoration});
  }
  for (int r = 0; r < n; ++r) {
    const int c = shape.part(r) + n - 1 - r;
    edges_.push_back({graph_.index({c, 0}), V + r, HEdgeKind::BottomDecoration});
  }
  white_adj_.resize(white_count());
  black_adj_.resize(black_count());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    white_adj_[edges_[e].white].push_back(e);
    black_adj_[edges_[e].black].push_back(e);
  }
}

std::optional<std::size_t> LectureHallLattice::edge_between(std::size_t white, std::size_t black) const {
  for (std::size_t e : white_adj_[white])
    if (edges_[e].black == black) return e;
  return std::nullopt;
}

std::vector<LectureHallLattice::Face> LectureHallLattice::bounded_faces() const {
  std::vector<Face> out;
  auto edge = [&](std::size_t w, std::size_t b) {
    auto e = edge_between(w, b);
    if (!e) throw std::logic_error("bounded_faces: missing edge");
    return *e;
  };
  for (int c = 0; c < graph_.width(); ++c) {
    for (std::int64_t j = 0; j + 1 < graph_.column_size(c); ++j) {
      Face f{c, j, {}};
      const std::size_t lo = graph_.index({c, j}), hi = graph_.index({c, j + 1});
      const std::int64_t L0 = landing(c, j), L1 = landing(c, j + 1);
      f.edges.push_back(edge(hi, graph_.index({c + 1, L1})));
      for (std::int64_t y = L1; y > L0; --y) {
        const std::size_t v = graph_.index({c + 1, y});
        f.edges.push_back(edge(v, v));
        f.edges.push_back(edge(v, graph_.index({c + 1, y - 1})));
      }
      f.edges.push_back(edge(lo, graph_.index({c + 1, L0})));
      f.edges.push_back(edge(lo, lo));
      f.edges.push_back(edge(hi, lo));
      out.push_back(std::move(f));
    }
  }
  return out;
}

bool DimerConfiguration::is_perfect() const {
  if (!lattice) return false;
  std::vector<int> w(lattice->white_count(), 0), b(lattice->black_count(), 0);
  for (std::size_t e : matching) {
    if (e >= lattice->edges().size()) return false;
    ++w[lattice->edges()[e].white];
    ++b[lattice->edges()[e].black];
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 1; }) &&
         std::all_of(b.begin(), b.end(), [](int x) { return x == 1; });
}

DimerConfiguration paths_to_dimers(const PathSystem& ps, std::shared_ptr<const LectureHallLattice> lattice) {
  const Partition shape = validate_paths(ps);
  if (!lattice) lattice = std::make_shared<LectureHallLattice>(shape, ps.t);
  if (!(lattice->shape() == shape) || lattice->t() != ps.t)
    throw Error(ErrorCode::MalformedPathSystem, "lattice built for a different shape or bound");
  const auto& g = lattice->graph();
  const std::size_t V = lattice->regular_count();
  std::vector<char> used(V, 0);
  DimerConfiguration out{lattice, {}};
  for (const auto& p : ps.paths) {
    for (const auto& v : p) {
      if (!g.contains(v)) throw Error(ErrorCode::MalformedPathSystem, "path leaves the truncated lattice");
      used[g.index(v)] = 1;
    }
    for (std::size_t k = 1; k < p.size(); ++k) out.matching.push_back(*lattice->edge_between(g.index(p[k - 1]), g.index(p[k])));
  }
  for (std::size_t v = 0; v < V; ++v)
    if (!used[v]) out.matching.push_back(v);
  const std::size_t E = lattice->edges().size();
  for (std::size_t k = 0; k < 2 * static_cast<std::size_t>(shape.n()); ++k) out.matching.push_back(E - 2 * shape.n() + k);
  std::sort(out.matching.begin(), out.matching.end());
  return out;
}

}  // namespace lht
