#pragma once

#include <cstddef>
#include <vector>

#include "callan/series.hpp"

namespace callan {

// Exact integer count produced from a series extraction.
using SignedCount = BigInt;

// G_n from 2t/(e^t+1).
SignedCount genocchi(std::size_t n);
// G_0..G_max from a single series.
std::vector<SignedCount> genocchi_range(std::size_t max_n);

// B_n^{(k)} from Li_k(1-e^{-t})/(1-e^{-t}).
Rational poly_bernoulli_b(std::size_t n, long k);
// C_n^{(k)} from Li_k(1-e^{-t})/(e^t-1).
Rational poly_bernoulli_c(std::size_t n, long k);

// The whole EGFs, truncated so that index max_n is available.
TruncatedSeries poly_bernoulli_b_series(long k, std::size_t max_n);
TruncatedSeries poly_bernoulli_c_series(long k, std::size_t max_n);

// C_n^k = C_n^{(-k-1)}, the count of barred Callan sequences of size k x n.
SignedCount c_number(std::size_t n, std::size_t k);

// table[n][k] = C_n^k for 0 <= n <= max_n, 0 <= k <= max_k.
std::vector<std::vector<SignedCount>> c_table(std::size_t max_n, std::size_t max_k);

// Converts an extracted rational to an integer; a nonunit denominator is a
// consistency error (it can only come from an arithmetic bug).
SignedCount require_integer(const Rational& value, const char* what);

}  // namespace callan
