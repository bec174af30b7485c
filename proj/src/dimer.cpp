#include "lht/dimer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "lht/error.hpp"

namespace lht {

int KasteleynMatrix::at(std::size_t black, std::size_t white) const {
  auto e = lattice->edge_between(white, black);
  return e ? sign[*e] : 0;
}

IntMatrix KasteleynMatrix::dense() const {
  const std::size_t N = size();
  IntMatrix m(N, std::vector<mpz_class>(N));
  const auto& edges = lattice->edges();
  for (std::size_t e = 0; e < edges.size(); ++e) m[edges[e].black][edges[e].white] = sign[e];
  return m;
}

KasteleynMatrix kasteleyn_matrix(const Partition& shape, int t) {
  auto lattice = std::make_shared<const LectureHallLattice>(shape, t);
  KasteleynMatrix K{lattice, {}};
  K.sign.reserve(lattice->edges().size());
  for (const auto& e : lattice->edges()) K.sign.push_back(e.kind == HEdgeKind::Internal ? -1 : 1);
  return K;
}

BigCount kasteleyn_determinant(const KasteleynMatrix& K) { return abs(determinant_bareiss(K.dense())); }

FaceSignReport check_face_signs(const KasteleynMatrix& K) {
  FaceSignReport report;
  const auto faces = K.lattice->bounded_faces();
  report.faces = faces.size();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& edges = faces[f].edges;
    const std::size_t negatives = std::count_if(edges.begin(), edges.end(), [&](std::size_t e) { return K.sign[e] < 0; });
    const std::size_t half = edges.size() / 2;
    bool ok = (negatives % 2) == ((half + 1) % 2);
    if (edges.size() == 6) {
      ++report.hexagons;
      ok = ok && negatives == 2;
    } else if (edges.size() == 8) {
      ++report.octagons;
      ok = ok && negatives == 3;
    } else {
      ok = false;
    }
    if (!ok) report.violations.push_back(f);
  }
  return report;
}

namespace {

// Gauss-Jordan over the rationals; a is square, returns a^{-1}.
RationalMatrix invert(RationalMatrix a) {
  const std::size_t N = a.size();
  RationalMatrix inv(N, std::vector<mpq_class>(N, 0));
  for (std::size_t i = 0; i < N; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t p = k;
    while (p < N && a[p][k] == 0) ++p;
    if (p == N) throw Error(ErrorCode::SingularKasteleyn, "Kasteleyn matrix is singular");
    std::swap(a[p], a[k]);
    std::swap(inv[p], inv[k]);
    const mpq_class piv = a[k][k];
    for (std::size_t j = 0; j < N; ++j) {
      if (a[k][j] != 0) a[k][j] /= piv;
      if (inv[k][j] != 0) inv[k][j] /= piv;
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const mpq_class f = a[i][k];
      for (std::size_t j = 0; j < N; ++j) {
        if (a[k][j] != 0) a[i][j] -= f * a[k][j];
        if (inv[k][j] != 0) inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

mpq_class rational_det(RationalMatrix a) {
  const std::size_t N = a.size();
  mpq_class det = 1;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t p = k;
    while (p < N && a[p][k] == 0) ++p;
    if (p == N) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < N; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < N; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace

RationalMatrix inverse_exact(const KasteleynMatrix& K) {
  const std::size_t N = K.size();
  RationalMatrix a(N, std::vector<mpq_class>(N, 0));
  const auto& edges = K.lattice->edges();
  for (std::size_t e = 0; e < edges.size(); ++e) a[edges[e].black][edges[e].white] = K.sign[e];
  // a is indexed [black][white], so its inverse is indexed [white][black].
  return invert(std::move(a));
}

EdgeProbability edge_probability(const KasteleynMatrix& K, const std::vector<EdgeRef>& edges, EdgeProbabilityOptions options) {
  EdgeProbability out;
  if (edges.empty()) {
    out.value = 1;
    out.exact = true;
    out.rational = mpq_class(1);
    return out;
  }
  int sign_product = 1;
  for (const auto& e : edges) {
    const int s = K.at(e.black, e.white);
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "requested pair is not an edge of the lattice");
    sign_product *= s;
  }
  const std::size_t k = edges.size();
  const std::size_t N = K.size();
  if (N <= options.exact_limit) {
    const RationalMatrix inv = inverse_exact(K);
    RationalMatrix m(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i][j] = inv[edges[i].white][edges[j].black];
    mpq_class p = sign_product * rational_det(std::move(m));
    out.exact = true;
    out.rational = p;
    out.value = p.get_d();
    return out;
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  const auto& all = K.lattice->edges();
  for (std::size_t e = 0; e < all.size(); ++e) a(all[e].black, all[e].white) = K.sign[e];
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  out.rcond = lu.rcond();
  if (!(out.rcond > 0) || !std::isfinite(out.rcond)) throw Error(ErrorCode::SingularKasteleyn, "Kasteleyn matrix is singular");
  out.ill_conditioned = out.rcond < 1e-12;
  std::map<std::size_t, Eigen::VectorXd> columns;
  for (const auto& e : edges) {
    if (columns.count(e.black)) continue;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N));
    rhs(e.black) = 1;
    columns[e.black] = lu.solve(rhs);
  }
  Eigen::MatrixXd m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = columns[edges[j].black](edges[i].white);
  out.value = sign_product * m.determinant();
  return out;
}

std::vector<mpq_class> all_edge_probabilities(const KasteleynMatrix& K) {
  const RationalMatrix inv = inverse_exact(K);
  const auto& edges = K.lattice->edges();
  std::vector<mpq_class> out;
  out.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) out.push_back(K.sign[e] * inv[edges[e].white][edges[e].black]);
  return out;
}

SingleRowKasteleyn::SingleRowKasteleyn(int n, int kappa) : n_(n), kappa_(kappa), W_(n * (kappa + 1) - 1) {
  if (n < 1 || kappa < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and kappa >= 1");
  cols_.push_back(0);
  for (int c = n - 1; c <= W_; ++c) cols_.push_back(cols_.back() + static_cast<std::size_t>(n) * (c + 1));
  const std::size_t R = regular_count();
  // Topological order: columns left to right, nums top to bottom.
  std::vector<std::size_t> order;
  order.reserve(R);
  for (int c = n - 1; c <= W_; ++c)
    for (std::int64_t j = static_cast<std::int64_t>(n) * (c + 1) - 1; j >= 0; --j) order.push_back(index({c, j}));
  pv_.assign(R + 1, std::vector<mpz_class>(R + 1, 0));
  for (std::size_t from = 0; from <= R; ++from) {
    auto& cnt = pv_[from];
    cnt[from == R ? index({n - 1, static_cast<std::int64_t>(n) * n - 1}) : from] = 1;
    for (std::size_t v : order) {
      if (cnt[v] == 0) continue;
      const LHVertex x = vertex(v);
      if (x.num > 0) cnt[index({x.col, x.num - 1})] += cnt[v];
      if (x.col < W_) cnt[index({x.col + 1, landing(x.col, x.num)})] += cnt[v];
    }
    if (from == R) cnt[R] = 1;
    else cnt[R] = 0;
  }
  const std::size_t e = index({W_, 0});
  const mpz_class C = pv_[R][e];
  // Extended counts: the sink black counts as the vertex below e.
  auto A = [&](std::size_t white) -> const mpz_class& { return pv_[R][white]; };
  auto B = [&](std::size_t black) -> mpz_class { return black == R ? mpz_class(1) : pv_[black][e]; };
  inv_.assign(R + 1, std::vector<mpq_class>(R + 1));
  for (std::size_t w = 0; w <= R; ++w) {
    for (std::size_t b = 0; b <= R; ++b) {
      mpq_class v(A(w) * B(b), C);
      v.canonicalize();
      if (w < R && b < R) v -= pv_[b][w];
      inv_[w][b] = v;
    }
  }
}

std::size_t SingleRowKasteleyn::index(LHVertex v) const {
  if (v.col < n_ - 1 || v.col > W_ || v.num < 0 || v.num >= static_cast<std::int64_t>(n_) * (v.col + 1))
    throw Error(ErrorCode::CoordinateOutOfRange, "vertex outside the single-row graph");
  return cols_[v.col - (n_ - 1)] + static_cast<std::size_t>(v.num);
}

LHVertex SingleRowKasteleyn::vertex(std::size_t i) const {
  auto it = std::upper_bound(cols_.begin(), cols_.end(), i);
  const std::size_t k = static_cast<std::size_t>(it - cols_.begin()) - 1;
  return {static_cast<int>(k) + n_ - 1, static_cast<std::int64_t>(i - cols_[k])};
}

std::vector<std::pair<std::size_t, int>> SingleRowKasteleyn::white_neighbours(std::size_t white) const {
  std::vector<std::pair<std::size_t, int>> out;
  const std::size_t R = regular_count();
  if (white == R) {
    out.emplace_back(index({n_ - 1, static_cast<std::int64_t>(n_) * n_ - 1}), 1);
    return out;
  }
  const LHVertex x = vertex(white);
  out.emplace_back(white, -1);
  if (x.num > 0) out.emplace_back(index({x.col, x.num - 1}), 1);
  if (x.col < W_) out.emplace_back(index({x.col + 1, landing(x.col, x.num)}), 1);
  if (x.col == W_ && x.num == 0) out.emplace_back(R, 1);
  return out;
}

std::vector<std::pair<std::size_t, int>> SingleRowKasteleyn::black_neighbours(std::size_t black) const {
  std::vector<std::pair<std::size_t, int>> out;
  const std::size_t R = regular_count();
  if (black == R) {
    out.emplace_back(index({W_, 0}), 1);
    return out;
  }
  const LHVertex y = vertex(black);
  out.emplace_back(black, -1);
  if (y.num + 1 < static_cast<std::int64_t>(n_) * (y.col + 1)) out.emplace_back(index({y.col, y.num + 1}), 1);
  else if (y.col == n_ - 1) out.emplace_back(R, 1);
  if (y.col > n_ - 1) {
    // Whites whose horizontal step lands on y.
    const int c = y.col - 1;
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(n_) * (c + 1); ++j)
      if (landing(c, j) == y.num) out.emplace_back(index({c, j}), 1);
  }
  return out;
}

int SingleRowKasteleyn::K(std::size_t black, std::size_t white) const {
  for (const auto& [b, s] : white_neighbours(white))
    if (b == black) return s;
  return 0;
}

std::size_t SingleRowKasteleyn::identity_failures() const {
  const std::size_t N = dimension();
  std::size_t failures = 0;
  for (std::size_t b = 0; b < N; ++b) {
    const auto nb = black_neighbours(b);
    for (std::size_t b2 = 0; b2 < N; ++b2) {
      mpq_class s = 0;
      for (const auto& [w, k] : nb) s += k * inv_[w][b2];
      if (s != (b == b2 ? 1 : 0)) ++failures;
    }
  }
  return failures;
}

mpq_class closed_form_inverse_single_row(int n, int kappa_n, long X, long Y, long Xp, long Yp) {
  if (n < 1 || kappa_n < n || kappa_n % n != 0)
    throw Error(ErrorCode::CoordinateOutOfRange, "kappa_n must be a positive multiple of n");
  const long W = n + kappa_n - 1;
  auto in_range = [&](long x, long y) { return x >= n - 1 && x <= W && y >= 0 && y <= n - 1; };
  if (!in_range(X, Y) || !in_range(Xp, Yp)) throw Error(ErrorCode::CoordinateOutOfRange, "vertex outside the single-row region");
  mpq_class v(path_count_between(n - 1, n, X, Y) * path_count_between(Xp, Yp, W, 0), path_count_between(n - 1, n, W, 0));
  v.canonicalize();
  return v - mpq_class(path_count_between(Xp, Yp, X, Y));
}

}  // namespace lht
