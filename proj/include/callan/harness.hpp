#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "callan/numbers.hpp"

namespace callan {

enum class Source { enumeration, series };
const char* to_string(Source s);

// One summand (-1)^j * count of an alternating sum.
struct SumTerm {
  int j = 0;
  int sign = 1;
  SignedCount count;
  Source source = Source::enumeration;
};

struct VerificationReport {
  std::string claim_id;
  std::vector<std::pair<std::string, long>> parameters;
  SignedCount lhs;
  SignedCount rhs;
  bool passed = false;
  std::vector<std::string> counterexamples;  // canonical JSON objects or short notes
  std::vector<SumTerm> terms;
  std::chrono::duration<double> elapsed{0};
};

// Exact count of C_n^k(m) obtained by running the enumerator (memoized).
SignedCount enumerated_count(int k, int n, int m);

// sum_{j=0}^{n} (-1)^j C_{n-j}^j(m), each summand from `source`.
std::vector<SumTerm> alternating_terms(int n, int m, Source source);

VerificationReport verify_pb_zero(int n);
VerificationReport verify_thm_identity(int n, Source source);
VerificationReport verify_thm_identity2(int n, int m, Source source);
VerificationReport verify_prop_rec(int n, int m);
VerificationReport verify_telescope(int n, int m);
VerificationReport verify_partition(int k, int n, int m);

VerificationReport certify_phi(int k, int n, int m);
VerificationReport certify_psi(int k, int n, int m);
VerificationReport certify_relabel(int k, int n, int m);

// The three elementary bijections behind C_n^k(m) = C_k^n(m),
// C_n^k(0) = C_n^k and C_0^0(m) = |G_{2m+2}|.
VerificationReport certify_swap_colors(int k, int n, int m);
VerificationReport certify_barred_encoding(int k, int n);
VerificationReport certify_dumont_encoding(int m);
VerificationReport verify_dumont_count(int n);

// Claim names accepted by run_claim.
const std::vector<std::string>& claim_names();

// Runs a named claim over its sweep. Without a weight, sum-type claims cover
// n + 2m <= 8 and object-type claims k + n + m <= 6; a weight W replaces both
// bounds. Reports come back sorted by claim id, then parameters.
std::vector<VerificationReport> run_claim(const std::string& claim, std::optional<int> max_weight = std::nullopt);

std::string to_json_line(const VerificationReport& r);
std::string format_table(const std::vector<VerificationReport>& reports);

}  // namespace callan
