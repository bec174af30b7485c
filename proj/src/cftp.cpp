#include "lht/cftp.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "lht/error.hpp"
#include "lht/intmath.hpp"

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

namespace lht {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + kGamma;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index * kGamma + 0x632be59bd9b4e019ULL));
}

std::pair<double, double> RandomTape::at(std::uint64_t step) const {
  // One splitmix64 output per step: high half gives k, low half gives l.
  const std::uint64_t h = splitmix64(key_ + step * kGamma);
  return {static_cast<double>(h >> 32) * 0x1.0p-32, static_cast<double>(h & 0xffffffffULL) * 0x1.0p-32};
}

ChainLayout::ChainLayout(const Partition& shape, int t) : shape_(shape), t_(t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  const int n = shape.n();
  cells_.reserve(shape.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < shape.part(r); ++c) {
      Cell cell;
      cell.d = cell_denominator(n, r, c);
      cell.bound = static_cast<std::int64_t>(t) * cell.d - 1;
      const std::int64_t here = shape.row_offset(r) + c;
      cell.left = c > 0 ? here - 1 : -1;
      cell.right = c + 1 < shape.part(r) ? here + 1 : -1;
      cell.above = r > 0 ? shape.row_offset(r - 1) + c : -1;
      cell.below = (r + 1 < n && c < shape.part(r + 1)) ? shape.row_offset(r + 1) + c : -1;
      cells_.push_back(cell);
    }
  }
}

std::size_t ChainLayout::select(double k) const {
  auto idx = static_cast<std::size_t>(k * static_cast<double>(cells_.size()));
  return std::min(idx, cells_.size() - 1);
}

template <class V>
std::pair<V, V> ChainLayout::range(const V* v, std::size_t k) const {
  const Cell& c = cells_[k];
  const std::int64_t d = c.d;
  std::int64_t lo = 0, hi = c.bound;
  if (c.right >= 0) lo = std::max<std::int64_t>(lo, ceil_div(static_cast<std::int64_t>(v[c.right]) * d, d + 1));
  if (c.below >= 0) lo = std::max<std::int64_t>(lo, floor_div(static_cast<std::int64_t>(v[c.below]) * d, d - 1) + 1);
  if (c.left >= 0) hi = std::min<std::int64_t>(hi, floor_div(static_cast<std::int64_t>(v[c.left]) * d, d - 1));
  if (c.above >= 0) hi = std::min<std::int64_t>(hi, floor_div(static_cast<std::int64_t>(v[c.above]) * d - 1, d + 1));
  return {static_cast<V>(lo), static_cast<V>(hi)};
}

template std::pair<std::int64_t, std::int64_t> ChainLayout::range(const std::int64_t*, std::size_t) const;

std::pair<std::int64_t, std::int64_t> allowed_range(const LectureHallTableau& T, int row, int col) {
  if (row < 0 || row >= T.n() || col < 0 || col >= T.shape().part(row))
    throw Error(ErrorCode::CellOutOfShape, "cell (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ") is not in the shape");
  ChainLayout layout(T.shape(), T.t());
  return layout.range(T.cells().data(), static_cast<std::size_t>(T.shape().row_offset(row) + col));
}

namespace {

std::int64_t resample(std::int64_t a, std::int64_t b, double l) {
  auto v = a + static_cast<std::int64_t>(std::floor(static_cast<double>(b - a + 1) * l));
  return std::min(v, b);
}

// Compact per-cell record for the hot loop. Neighbour indices point into a padded array
// whose slot `cells` is a sentinel. Ratios are applied as double products: every quotient
// below is either an integer or at least 1/(d+1) away from one, so adding kNudge before
// truncation reproduces the exact integer floor.
constexpr double kNudge = 1e-9;

struct RowInfo {
  std::int32_t offset, length, above_offset, below_length, below_offset, d0;
};

struct RatioInfo {
  double down_ratio;   // d/(d-1)
  double up_ratio;     // d/(d+1)
  double above_shift;  // -1/(d+1) + kNudge
  std::int32_t bound;
};

class CoupledChains {
 public:
  explicit CoupledChains(const ChainLayout& layout) : cells_(layout.cells()) {
    const auto& shape = layout.shape();
    const int n = shape.n();
    for (int r = 0; r < n; ++r) {
      RowInfo info;
      info.offset = static_cast<std::int32_t>(shape.row_offset(r));
      info.length = shape.part(r);
      info.above_offset = r > 0 ? static_cast<std::int32_t>(shape.row_offset(r - 1)) : -1;
      info.below_length = r + 1 < n ? shape.part(r + 1) : 0;
      info.below_offset = r + 1 < n ? static_cast<std::int32_t>(shape.row_offset(r + 1)) : -1;
      info.d0 = n - r;
      rows_.push_back(info);
      for (int c = 0; c < shape.part(r); ++c) where_.push_back(static_cast<std::uint32_t>(r) << 16 | static_cast<std::uint32_t>(c));
    }
    const int maxd = n + shape.first();
    for (int d = 0; d <= maxd; ++d) {
      const double dd = d;
      ratios_.push_back({d > 1 ? dd / (dd - 1) : 0.0, dd / (dd + 1), -1.0 / (dd + 1) + kNudge,
                         static_cast<std::int32_t>(static_cast<std::int64_t>(layout.t()) * d - 1)});
    }
  }

  // Values stay below t*d <= 1e5, so rounding error in a product is under 1e-10 < kNudge,
  // and kNudge stays below the 1/(d+1) gap. Packed (row, col) needs both below 2^16.
  static bool supports(const ChainLayout& layout) {
    const auto& shape = layout.shape();
    const double maxd = shape.n() + shape.first();
    return static_cast<double>(layout.t()) * maxd <= 1e5 && shape.n() < 65536 && shape.first() < 65536;
  }

  void reset(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
    v_.resize(cells_);
    differing_ = 0;
    for (std::size_t k = 0; k < cells_; ++k) {
      v_[k] = {static_cast<std::int32_t>(lo[k]), static_cast<std::int32_t>(hi[k])};
      differing_ += lo[k] != hi[k];
    }
  }

  void step(std::size_t k, double l) {
    const std::uint32_t w = where_[k];
    const RowInfo& row = rows_[w >> 16];
    const std::int32_t c = static_cast<std::int32_t>(w & 0xffff);
    const RatioInfo& q = ratios_[row.d0 + c];
    const Pair* left = c > 0 ? &v_[k - 1] : nullptr;
    const Pair* right = c + 1 < row.length ? &v_[k + 1] : nullptr;
    const Pair* above = row.above_offset >= 0 ? &v_[row.above_offset + c] : nullptr;
    const Pair* below = c < row.below_length ? &v_[row.below_offset + c] : nullptr;
    Pair& here = v_[k];
    const bool was = here.lo != here.hi;
#if defined(__SSE2__)
    // Both chains share the cell and l, so they are updated as the two lanes of one vector.
    const __m128d nudge = _mm_set1_pd(kNudge);
    __m128i lo = _mm_setzero_si128();
    __m128i hi = _mm_set1_epi32(q.bound);
    auto lanes = [](const Pair* p) { return _mm_cvtepi32_pd(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(p))); };
    auto floor_of = [](__m128d x) { return _mm_cvttpd_epi32(x); };
    if (right) lo = max32(lo, floor_of(_mm_add_pd(_mm_mul_pd(_mm_add_pd(lanes(right), _mm_set1_pd(1.0)), _mm_set1_pd(q.up_ratio)), nudge)));
    if (below) lo = max32(lo, _mm_add_epi32(floor_of(_mm_add_pd(_mm_mul_pd(lanes(below), _mm_set1_pd(q.down_ratio)), nudge)), _mm_set1_epi32(1)));
    if (left) hi = min32(hi, floor_of(_mm_add_pd(_mm_mul_pd(lanes(left), _mm_set1_pd(q.down_ratio)), nudge)));
    if (above) hi = min32(hi, floor_of(_mm_add_pd(_mm_mul_pd(lanes(above), _mm_set1_pd(q.up_ratio)), _mm_set1_pd(q.above_shift))));
    const __m128i width = _mm_add_epi32(_mm_sub_epi32(hi, lo), _mm_set1_epi32(1));
    __m128i nv = _mm_add_epi32(lo, floor_of(_mm_mul_pd(_mm_cvtepi32_pd(width), _mm_set1_pd(l))));
    nv = min32(nv, hi);
    _mm_storel_epi64(reinterpret_cast<__m128i*>(&here), nv);
#else
    here.lo = update(q, left ? &left->lo : nullptr, right ? &right->lo : nullptr, above ? &above->lo : nullptr,
                     below ? &below->lo : nullptr, l);
    here.hi = update(q, left ? &left->hi : nullptr, right ? &right->hi : nullptr, above ? &above->hi : nullptr,
                     below ? &below->hi : nullptr, l);
#endif
    differing_ += static_cast<std::int64_t>(here.lo != here.hi) - static_cast<std::int64_t>(was);
  }

  void prefetch_far(std::size_t k) const {
    __builtin_prefetch(&where_[k]);
    __builtin_prefetch(&v_[k], 1);
  }

  void prefetch_near(std::size_t k) const {
    const std::uint32_t w = where_[k];
    const RowInfo& row = rows_[w >> 16];
    const std::int32_t c = static_cast<std::int32_t>(w & 0xffff);
    if (row.above_offset >= 0) __builtin_prefetch(&v_[row.above_offset + c]);
    if (c < row.below_length) __builtin_prefetch(&v_[row.below_offset + c]);
  }

  bool coalesced() const { return differing_ == 0; }

  std::int64_t max_gap() const {
    std::int64_t g = 0;
    for (const auto& p : v_) g = std::max<std::int64_t>(g, p.hi - p.lo);
    return g;
  }

  std::vector<std::int64_t> lower() const {
    std::vector<std::int64_t> out;
    out.reserve(cells_);
    for (const auto& p : v_) out.push_back(p.lo);
    return out;
  }

 private:
  struct Pair {
    std::int32_t lo, hi;
  };

#if defined(__SSE2__)
  static __m128i min32(__m128i a, __m128i b) {
    const __m128i gt = _mm_cmpgt_epi32(a, b);
    return _mm_or_si128(_mm_and_si128(gt, b), _mm_andnot_si128(gt, a));
  }
  static __m128i max32(__m128i a, __m128i b) {
    const __m128i gt = _mm_cmpgt_epi32(a, b);
    return _mm_or_si128(_mm_and_si128(gt, a), _mm_andnot_si128(gt, b));
  }
#endif

  static std::int32_t update(const RatioInfo& q, const std::int32_t* left, const std::int32_t* right,
                             const std::int32_t* above, const std::int32_t* below, double l) {
    std::int32_t lo = 0, hi = q.bound;
    if (right) lo = std::max(lo, static_cast<std::int32_t>((*right + 1) * q.up_ratio + kNudge));
    if (below) lo = std::max(lo, static_cast<std::int32_t>(*below * q.down_ratio + kNudge) + 1);
    if (left) hi = std::min(hi, static_cast<std::int32_t>(*left * q.down_ratio + kNudge));
    if (above) hi = std::min(hi, static_cast<std::int32_t>(*above * q.up_ratio + q.above_shift));
    const auto nv = lo + static_cast<std::int32_t>(static_cast<double>(hi - lo + 1) * l);
    return nv > hi ? hi : nv;
  }

  std::size_t cells_;
  std::vector<RowInfo> rows_;
  std::vector<std::uint32_t> where_;
  std::vector<RatioInfo> ratios_;
  std::vector<Pair> v_;
  std::int64_t differing_ = 0;
};

// Generic route with exact integer division, for layouts outside the double range.
class CoupledChainsWide {
 public:
  explicit CoupledChainsWide(const ChainLayout& layout) : layout_(layout) {}

  void reset(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi) {
    lower_ = lo;
    upper_ = hi;
  }

  void step(std::size_t k, double l) {
    const auto [a0, b0] = layout_.range(lower_.data(), k);
    const auto [a1, b1] = layout_.range(upper_.data(), k);
    lower_[k] = resample(a0, b0, l);
    upper_[k] = resample(a1, b1, l);
  }

  void prefetch_far(std::size_t) const {}
  void prefetch_near(std::size_t) const {}

  bool coalesced() const { return lower_ == upper_; }

  std::int64_t max_gap() const {
    std::int64_t g = 0;
    for (std::size_t k = 0; k < lower_.size(); ++k) g = std::max(g, upper_[k] - lower_[k]);
    return g;
  }

  std::vector<std::int64_t> lower() const { return lower_; }

 private:
  const ChainLayout& layout_;
  std::vector<std::int64_t> lower_, upper_;
};

template <class Chains>
CftpResult run_cftp(const ChainLayout& layout, std::uint64_t seed, const CftpOptions& options) {
  const auto [tmin, tmax] = extremal_tableaux(layout.shape(), layout.t());
  const std::vector<std::int64_t> lo(tmin.cells().begin(), tmin.cells().end());
  const std::vector<std::int64_t> hi(tmax.cells().begin(), tmax.cells().end());
  RandomTape tape(seed);
  Chains chains(layout);
  const double ncells = static_cast<double>(layout.cells());
  const std::size_t last = layout.cells() - 1;
  for (std::uint64_t horizon = std::max<std::uint64_t>(1, options.initial_horizon);; horizon *= 2) {
    if (horizon > options.max_steps)
      throw Error(ErrorCode::NoCoalescence, "no coalescence within " + std::to_string(options.max_steps) + " steps");
    chains.reset(lo, hi);
    // Steps are drawn kFar ahead so their cells can be prefetched.
    constexpr std::uint64_t kFar = 16, kNear = 6;
    std::array<std::size_t, kFar> cells{};
    std::array<double, kFar> ls{};
    auto draw = [&](std::uint64_t s) {
      const auto [k, l] = tape.at(s);
      const std::size_t cell = std::min(static_cast<std::size_t>(k * ncells), last);
      cells[s % kFar] = cell;
      ls[s % kFar] = l;
      chains.prefetch_far(cell);
    };
    for (std::uint64_t s = horizon; s >= 1 && s + kFar > horizon; --s) draw(s);
    for (std::uint64_t s = horizon; s >= 1; --s) {
      if (s > kNear) chains.prefetch_near(cells[(s - kNear) % kFar]);
      chains.step(cells[s % kFar], ls[s % kFar]);
      if (s > kFar) draw(s - kFar);
    }
    const bool done = options.mode == CftpMode::Exact ? chains.coalesced() : chains.max_gap() <= options.approx_tolerance;
    if (done) {
      return {LectureHallTableau::from_cells(layout.shape(), layout.t(), chains.lower()), horizon,
              options.mode == CftpMode::Exact};
    }
  }
}

}  // namespace

ChainState heat_bath_step(const ChainState& state, double k, double l) {
  if (!(k >= 0 && k < 1 && l >= 0 && l < 1)) throw Error(ErrorCode::InvalidArgument, "k and l must lie in [0,1)");
  const auto& shape = state.lower.shape();
  if (shape.size() == 0) return state;
  ChainLayout layout(shape, state.lower.t());
  const std::size_t cell = layout.select(k);
  std::vector<std::int64_t> lo(state.lower.cells().begin(), state.lower.cells().end());
  std::vector<std::int64_t> hi(state.upper.cells().begin(), state.upper.cells().end());
  const auto [a0, b0] = layout.range(lo.data(), cell);
  const auto [a1, b1] = layout.range(hi.data(), cell);
  lo[cell] = resample(a0, b0, l);
  hi[cell] = resample(a1, b1, l);
  return {LectureHallTableau::from_cells(shape, layout.t(), std::move(lo)),
          LectureHallTableau::from_cells(shape, layout.t(), std::move(hi))};
}

CftpResult cftp_run(const Partition& shape, int t, std::uint64_t seed, const CftpOptions& options) {
  if (shape.size() == 0) return {LectureHallTableau::from_cells(shape, t, {}), 0, true};
  ChainLayout layout(shape, t);
  if (CoupledChains::supports(layout)) return run_cftp<CoupledChains>(layout, seed, options);
  return run_cftp<CoupledChainsWide>(layout, seed, options);
}

LectureHallTableau cftp_sample(const Partition& shape, int t, std::uint64_t seed, const CftpOptions& options) {
  return cftp_run(shape, t, seed, options).sample;
}

std::vector<CftpResult> sample_many(const Partition& shape, int t, std::uint64_t seed, std::size_t count, unsigned workers,
                                    const CftpOptions& options) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  std::vector<std::optional<CftpResult>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = cftp_run(shape, t, derive_seed(seed, i), options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::vector<CftpResult> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

RationalMatrix heat_bath_kernel(const std::vector<LectureHallTableau>& states) {
  const std::size_t S = states.size();
  RationalMatrix P(S, std::vector<mpq_class>(S, 0));
  if (S == 0) return P;
  const auto& shape = states.front().shape();
  const std::size_t cells = static_cast<std::size_t>(shape.size());
  if (cells == 0) {
    P[0][0] = 1;
    return P;
  }
  ChainLayout layout(shape, states.front().t());
  auto find = [&](const std::vector<std::int64_t>& v) {
    for (std::size_t j = 0; j < S; ++j)
      if (std::equal(v.begin(), v.end(), states[j].cells().begin())) return j;
    throw std::logic_error("heat_bath_kernel: state space not closed");
  };
  for (std::size_t i = 0; i < S; ++i) {
    std::vector<std::int64_t> v(states[i].cells().begin(), states[i].cells().end());
    for (std::size_t k = 0; k < cells; ++k) {
      const auto [a, b] = layout.range(v.data(), k);
      const std::int64_t keep = v[k];
      for (std::int64_t x = a; x <= b; ++x) {
        v[k] = x;
        P[i][find(v)] += mpq_class(1, static_cast<unsigned long>(cells * static_cast<std::size_t>(b - a + 1)));
      }
      v[k] = keep;
    }
  }
  for (auto& row : P)
    for (auto& x : row) x.canonicalize();
  return P;
}

}  // namespace lht
