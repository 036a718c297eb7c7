#pragma once

#include <vector>

#include "callan/combinat.hpp"

namespace callan {

// Where the maximal red element m+n sits: A = extra block, B = ordinary block;
// 1 = alone there (next to the star for A), 2 = with other red elements.
enum class PhiCase { A1, A2, B1, B2 };

const char* to_string(PhiCase c);

// Domain: valid, n >= 1, nonempty extra red block.
bool in_phi_domain(const MBarredSequence& s);
// Codomain: valid, k >= 1, extra red block {*}, and the maximal blue element
// is not a singleton ordinary block preceded by a bar.
bool in_phi_codomain(const MBarredSequence& t);

PhiCase phi_case(const MBarredSequence& s);

/// Removes the maximal red element m+n and inserts the new maximal blue
/// element m+k+1, mapping C_n^k(m, R*) onto
/// C_{n-1}^{k+1}(m, *) minus its barred-max-singleton cell.
MBarredSequence phi(const MBarredSequence& s);

// Case of phi(s) recovered from t = phi(s) alone: whether the new blue element
// lies in the first pair and whether it is a singleton.
PhiCase phi_inverse_case(const MBarredSequence& t);
MBarredSequence phi_inverse(const MBarredSequence& t);

// Exchanges blue labels m+k and m+1. Domain: star-only sequences whose max
// blue element is a barred ordinary singleton; image: same with the min.
MBarredSequence relabel_max_min(const MBarredSequence& s);

bool in_psi_domain(const MBarredSequence& s);

// Output of psi_b: an (m)-barred shape carrying one extra blue bar |m+1.
// Blue bars 1..m+1, red bars 0..m, blue elements m+2..m+k, red elements
// m+1..m+n, extra red block nonempty. Here m, k, n are those of the psi input.
struct PsiIntermediate {
  int m = 0;
  int k = 0;
  int n = 0;
  std::vector<Element> elements;
  friend bool operator==(const PsiIntermediate&, const PsiIntermediate&) = default;
};

Validation validate_psi_intermediate(const PsiIntermediate& s);

enum class PsiRedCase { extra, ordinary };
const char* to_string(PsiRedCase c);

PsiIntermediate psi_b(const MBarredSequence& s);
PsiRedCase psi_r_case(const PsiIntermediate& s);
MBarredSequence psi_r(const PsiIntermediate& s);

PsiIntermediate psi_r_inverse(const MBarredSequence& t);
MBarredSequence psi_b_inverse(const PsiIntermediate& s);

/// C_n^k(m, *, |m+1) -> C_{n-1}^{k-1}(m+1), turning the minimal blue and red
/// elements into bars labeled m+1.
MBarredSequence psi(const MBarredSequence& s);
MBarredSequence psi_inverse(const MBarredSequence& t);

std::string to_text(const PsiIntermediate& s);

}  // namespace callan
