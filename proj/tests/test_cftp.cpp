#include <doctest.h>

#include <map>

#include "lht/cftp.hpp"
#include "lht/error.hpp"

using namespace lht;

TEST_CASE("the tape is a pure function of seed and step") {
  const RandomTape a(42), b(42), c(43);
  for (std::uint64_t s : {0ull, 1ull, 17ull, 1ull << 40}) {
    CHECK(a.at(s) == b.at(s));
    const auto [k, l] = a.at(s);
    CHECK(k >= 0);
    CHECK(k < 1);
    CHECK(l >= 0);
    CHECK(l < 1);
  }
  CHECK(a.at(5) != c.at(5));
}

TEST_CASE("allowed range of a corner cell") {
  const auto T = LectureHallTableau::make(Partition::make({2, 2}), 3, {{5, 6}, {2, 3}});
  const auto [lo, hi] = allowed_range(T, 1, 1);
  CHECK(lo == 0);
  // The cell above caps it: x/2 < 6/3.
  CHECK(hi == 3);
}

TEST_CASE("heat-bath kernel is doubly stochastic") {
  const auto states = enumerate_all(Partition::make({2, 1}), 2);
  const auto P = heat_bath_kernel(states);
  for (std::size_t j = 0; j < states.size(); ++j) {
    mpq_class col = 0;
    for (std::size_t i = 0; i < states.size(); ++i) col += P[i][j];
    CHECK(col == 1);
  }
}

TEST_CASE("samples are valid and reproducible") {
  const Partition p = Partition::make({3, 2, 2});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = cftp_run(p, 3, seed);
    CHECK(r.exact);
    CHECK(is_valid_blht(r.sample.rows(), p, 3));
    CHECK(cftp_sample(p, 3, seed) == r.sample);
  }
}

TEST_CASE("exact output does not depend on the first horizon") {
  const Partition p = Partition::make({3, 3, 1});
  CftpOptions late;
  late.initial_horizon = 1 << 12;
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(cftp_sample(p, 2, seed) == cftp_sample(p, 2, seed, late));
}

TEST_CASE("sample_many is independent of the worker count") {
  const Partition p = Partition::make({2, 2});
  const auto a = sample_many(p, 3, 7, 40, 1);
  const auto b = sample_many(p, 3, 7, 40, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].sample == b[i].sample);
}

TEST_CASE("uniformity on a small shape") {
  const Partition p = Partition::make({1, 1});
  const auto states = enumerate_all(p, 2);
  std::map<std::vector<std::int64_t>, int> counts;
  const int N = 6000;
  for (const auto& r : sample_many(p, 2, 3, N, 2))
    ++counts[std::vector<std::int64_t>(r.sample.cells().begin(), r.sample.cells().end())];
  CHECK(counts.size() == states.size());
  const double e = static_cast<double>(N) / states.size();
  double chi2 = 0;
  for (const auto& [k, c] : counts) chi2 += (c - e) * (c - e) / e;
  CHECK(chi2 < 30);
}

TEST_CASE("approximate mode is labelled") {
  CftpOptions o;
  o.mode = CftpMode::Approx;
  o.approx_tolerance = 2;
  const auto r = cftp_run(Partition::make({4, 4, 4, 4}), 4, 1, o);
  CHECK(is_valid_blht(r.sample.rows(), Partition::make({4, 4, 4, 4}), 4));
  CftpOptions exact;
  CHECK(cftp_run(Partition::make({4, 4, 4, 4}), 4, 1, exact).exact);
}

TEST_CASE("max_steps bounds the search") {
  CftpOptions o;
  o.max_steps = 4;
  try {
    cftp_run(Partition::make({5, 5, 5, 5, 5}), 5, 1, o);
    FAIL("expected NoCoalescence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoCoalescence);
  }
}

TEST_CASE("one step keeps the chains ordered") {
  const Partition p = Partition::make({2, 1});
  const auto [lo, hi] = extremal_tableaux(p, 2);
  ChainState s{lo, hi};
  for (int i = 0; i < 200; ++i) {
    s = heat_bath_step(s, (i * 0.618034) - static_cast<int>(i * 0.618034), (i * 0.414214) - static_cast<int>(i * 0.414214));
    CHECK(s.lower.leq(s.upper));
  }
  CHECK_THROWS_AS(heat_bath_step(s, 1.0, 0.5), Error);
}
