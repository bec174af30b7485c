#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "lht/partition.hpp"
#include "lht/tableau.hpp"

namespace lht {

using BigCount = mpz_class;
using IntMatrix = std::vector<std::vector<mpz_class>>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

BigCount binomial(long n, long k);

BigCount count_blht(const Partition& shape, int t);

// Paths on the lecture hall graph between integer-coordinate points; 0 when c < a or d > b.
BigCount path_count_between(long a, long b, long c, long d);

// Fraction-free elimination with row pivoting; returns the signed determinant.
BigCount determinant_bareiss(IntMatrix m);

IntMatrix lgv_matrix(const Partition& shape, int t);
BigCount count_via_lgv(const Partition& shape, int t);

struct EnumerationOptions {
  std::uint64_t cap = 10'000'000;
};

// Visits every valid tableau in row-major lexicographic order; the visitor returns false to stop.
void enumerate_blht(const Partition& shape, int t, const std::function<bool(const LectureHallTableau&)>& visit,
                    EnumerationOptions options = {});
std::vector<LectureHallTableau> enumerate_all(const Partition& shape, int t, EnumerationOptions options = {});

BigCount single_path_count(long n, long k, long t);
bool verify_single_path_decomposition(long n, long k, long t, long s);

}  // namespace lht
