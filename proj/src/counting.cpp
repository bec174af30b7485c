#include "lht/counting.hpp"

#include <algorithm>
#include <string>

#include "lht/error.hpp"
#include "lht/intmath.hpp"

namespace lht {

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

BigCount power(long base, long exp) {
  BigCount out;
  BigCount b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

BigCount count_blht(const Partition& shape, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  const int n = shape.n();
  mpq_class prod = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      prod *= mpq_class(shape.part(i - 1) - i - shape.part(j - 1) + j, j - i);
  prod.canonicalize();
  prod *= power(t, shape.size());
  prod.canonicalize();
  if (prod.get_den() != 1) throw Error(ErrorCode::NonIntegerResult, "product formula left a denominator");
  return prod.get_num();
}

BigCount path_count_between(long a, long b, long c, long d) {
  if (c < a || d > b) return 0;
  return power(b - d, c - a) * binomial(c, c - a);
}

BigCount determinant_bareiss(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix lgv_matrix(const Partition& shape, int t) {
  const int n = shape.n();
  IntMatrix m(n, std::vector<mpz_class>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const long top = shape.part(j - 1) + n - j, bot = n - i;
      const long e = shape.part(j - 1) - j + i;
      if (top < bot || e < 0) continue;
      m[i - 1][j - 1] = binomial(top, bot) * power(t, e);
    }
  }
  return m;
}

BigCount count_via_lgv(const Partition& shape, int t) {
  if (t < 1) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  return determinant_bareiss(lgv_matrix(shape, t));
}

void enumerate_blht(const Partition& shape, int t, const std::function<bool(const LectureHallTableau&)>& visit,
                    EnumerationOptions options) {
  const BigCount expected = count_blht(shape, t);
  if (expected > mpz_class(std::to_string(options.cap)))
    throw Error(ErrorCode::SearchSpaceTooLarge, "expected " + expected.get_str() + " tableaux, cap is " + std::to_string(options.cap));
  const int n = shape.n();
  const std::int64_t cells = shape.size();
  if (cells == 0) {
    visit(LectureHallTableau::from_cells(shape, t, {}));
    return;
  }
  std::vector<int> row_of(cells), col_of(cells);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < shape.part(r); ++c) {
      row_of[shape.row_offset(r) + c] = r;
      col_of[shape.row_offset(r) + c] = c;
    }
  auto upper = [&](const std::vector<std::int64_t>& v, std::int64_t k) {
    const int r = row_of[k], c = col_of[k];
    const std::int64_t d = cell_denominator(n, r, c);
    std::int64_t hi = t * d - 1;
    if (c > 0) hi = std::min(hi, floor_div(v[k - 1] * d, d - 1));
    if (r > 0) hi = std::min(hi, floor_div(v[shape.row_offset(r - 1) + c] * d - 1, d + 1));
    return hi;
  };
  std::vector<std::int64_t> v(cells, -1);
  std::vector<std::int64_t> hi(cells, -1);
  std::int64_t k = 0;
  hi[0] = static_cast<std::int64_t>(t) * n - 1;
  while (k >= 0) {
    if (v[k] >= hi[k]) {
      v[k] = -1;
      --k;
      continue;
    }
    ++v[k];
    if (k + 1 == cells) {
      if (!visit(LectureHallTableau::from_cells(shape, t, v))) return;
      continue;
    }
    ++k;
    hi[k] = upper(v, k);
    v[k] = -1;
  }
}

std::vector<LectureHallTableau> enumerate_all(const Partition& shape, int t, EnumerationOptions options) {
  std::vector<LectureHallTableau> out;
  enumerate_blht(shape, t, [&](const LectureHallTableau& x) {
    out.push_back(x);
    return true;
  }, options);
  return out;
}

BigCount single_path_count(long n, long k, long t) { return binomial(n + k - 1, k) * power(t, k); }

bool verify_single_path_decomposition(long n, long k, long t, long s) {
  if (!(0 < s && s < t)) throw Error(ErrorCode::InvalidArgument, "need 0 < s < t");
  BigCount rhs = 0;
  for (long l = 0; l <= k; ++l) rhs += single_path_count(n, l, t - s) * single_path_count(n + l, k - l, s);
  return rhs == single_path_count(n, k, t);
}

}  // namespace lht
