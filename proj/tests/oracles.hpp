#pragma once

// Brute-force reference implementations for the tests. Nothing here calls the
// library's enumerators, validators or series code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "callan/combinat.hpp"

namespace oracle {

// Bernoulli numbers with B_1 = +1/2 (Akiyama-Tanigawa).
inline std::vector<mpq_class> bernoulli_plus(int max_n) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(static_cast<std::size_t>(max_n) + 1);
  for (int m = 0; m <= max_n; ++m) {
    a[static_cast<std::size_t>(m)] = mpq_class(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
      a[static_cast<std::size_t>(j - 1)].canonicalize();
    }
    out.push_back(a[0]);
  }
  return out;
}

// G_n = 2 (1 - 2^n) B_n, with B_1 = -1/2.
inline std::vector<mpz_class> genocchi(int max_n) {
  auto b = bernoulli_plus(max_n);
  if (max_n >= 1) b[1] = mpq_class(-1, 2);
  std::vector<mpz_class> out;
  for (int n = 0; n <= max_n; ++n) {
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    mpq_class g = 2 * (1 - mpq_class(two_n)) * b[static_cast<std::size_t>(n)];
    g.canonicalize();
    out.push_back(g.get_num());
  }
  return out;
}

// Number of n x k 0/1 matrices without a 2x2 permutation submatrix
// (lonesum matrices), which is B_n^{(-k)}.
inline long lonesum_count(int n, int k) {
  const int cells = n * k;
  long count = 0;
  for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
    auto at = [&](int r, int c) { return (bits >> (r * k + c)) & 1u; };
    bool ok = true;
    for (int r1 = 0; r1 < n && ok; ++r1)
      for (int r2 = r1 + 1; r2 < n && ok; ++r2)
        for (int c1 = 0; c1 < k && ok; ++c1)
          for (int c2 = c1 + 1; c2 < k && ok; ++c2) {
            const bool diag = at(r1, c1) && at(r2, c2) && !at(r1, c2) && !at(r2, c1);
            const bool anti = !at(r1, c1) && !at(r2, c2) && at(r1, c2) && at(r2, c1);
            if (diag || anti) ok = false;
          }
    if (ok) ++count;
  }
  return count;
}

inline mpz_class stirling2(int n, int j) {
  std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(n) + 1,
                                        std::vector<mpz_class>(static_cast<std::size_t>(n) + 1, 0));
  s[0][0] = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b) s[a][b] = b * s[a - 1][b] + s[a - 1][b - 1];
  return j <= n && j >= 0 ? s[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] : mpz_class(0);
}

// B_n^{(-k)} = sum_j (j!)^2 S(n+1, j+1) S(k+1, j+1).
inline mpz_class poly_bernoulli_closed(int n, int k) {
  mpz_class sum = 0, fact = 1;
  for (int j = 0; j <= std::min(n, k); ++j) {
    if (j > 0) fact *= j;
    sum += fact * fact * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1);
  }
  return sum;
}

// A Callan sequence as a list of (blue, red) blocks; the last entry is the
// extra pair with its stars left implicit.
using Blocks = std::vector<std::pair<std::vector<int>, std::vector<int>>>;

// All Callan sequences on {shift+1..shift+k} x {shift+1..shift+n}: every way
// to send each element to the extra pair (0) or one of p ordinary pairs
// (1..p), keeping the ordinary blocks nonempty.
inline std::vector<Blocks> callan_sequences(int k, int n, int shift = 0) {
  std::vector<Blocks> out;
  for (int p = 0; p <= std::min(k, n); ++p) {
    std::vector<int> bf(static_cast<std::size_t>(k), 0), rf(static_cast<std::size_t>(n), 0);
    auto bump = [p](std::vector<int>& f) {
      for (auto& d : f) {
        if (++d <= p) return true;
        d = 0;
      }
      return false;
    };
    auto fill = [&](const std::vector<int>& f, bool blue, Blocks& b) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        auto& block = blue ? b[static_cast<std::size_t>(f[i])].first : b[static_cast<std::size_t>(f[i])].second;
        block.push_back(shift + 1 + static_cast<int>(i));
      }
    };
    do {
      std::fill(rf.begin(), rf.end(), 0);
      do {
        Blocks b(static_cast<std::size_t>(p) + 1);
        fill(bf, true, b);
        fill(rf, false, b);
        // block 0 is the extra pair; move it to the end
        std::rotate(b.begin(), b.begin() + 1, b.end());
        bool ok = true;
        for (int i = 0; i < p; ++i) ok = ok && !b[static_cast<std::size_t>(i)].first.empty() && !b[static_cast<std::size_t>(i)].second.empty();
        if (ok) out.push_back(b);
      } while (bump(rf));
    } while (bump(bf));
  }
  return out;
}

// The adjacency rules for bars, checked directly on a word.
inline bool bar_rules_hold(const std::vector<callan::Element>& w) {
  if (w.empty() || !std::holds_alternative<callan::CallanPair>(w.back())) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const auto* bar = std::get_if<callan::Bar>(&w[i]);
    if (!bar) continue;
    const auto* next = std::get_if<callan::Bar>(&w[i + 1]);
    if (bar->color == callan::Color::blue && !(next && next->label < bar->label)) return false;
    if (bar->color == callan::Color::red && next && !(next->label > bar->label)) return false;
  }
  return true;
}

// Generate-and-filter: every interleaving of all 2m+1 bars with every Callan
// sequence, keeping the words that satisfy the adjacency rules. Rejected
// words go to `rejected` when given.
inline std::vector<callan::MBarredSequence> mbarred_by_filter(int k, int n, int m,
                                                              std::vector<callan::MBarredSequence>* rejected = nullptr) {
  using namespace callan;
  std::vector<MBarredSequence> out;
  for (const auto& blocks : callan_sequences(k, n, m)) {
    // tokens: -1 = next ordinary pair, 0..m-1 = blue bar i+1, m..2m = red bar i-m
    std::vector<int> tokens;
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) tokens.push_back(-1);
    for (int i = 0; i <= 2 * m; ++i) tokens.push_back(i);
    std::sort(tokens.begin(), tokens.end());
    do {
      MBarredSequence s{m, k, n, {}};
      std::size_t next = 0;
      for (int t : tokens) {
        if (t < 0) {
          s.elements.emplace_back(CallanPair{blocks[next].first, blocks[next].second, false});
          ++next;
        } else if (t < m) {
          s.elements.emplace_back(Bar{Color::blue, t + 1});
        } else {
          s.elements.emplace_back(Bar{Color::red, t - m});
        }
      }
      s.elements.emplace_back(CallanPair{blocks.back().first, blocks.back().second, true});
      if (bar_rules_hold(s.elements)) {
        out.push_back(std::move(s));
      } else if (rejected) {
        rejected->push_back(std::move(s));
      }
    } while (std::next_permutation(tokens.begin(), tokens.end()));
  }
  return out;
}

// Dumont permutations of {1..2n} by filtering all permutations.
inline std::vector<std::vector<int>> dumont_by_filter(int two_n) {
  std::vector<int> p(static_cast<std::size_t>(two_n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) {
      const bool last = i + 1 == p.size();
      if (p[i] % 2 == 0) ok = !last && p[i + 1] < p[i];
      else ok = last || p[i + 1] > p[i];
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracle
