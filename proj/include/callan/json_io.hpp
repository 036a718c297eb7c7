#pragma once

#include <string>

#include "callan/bijections.hpp"
#include "callan/combinat.hpp"

namespace callan {

// Canonical single-line JSON:
//   {"m":int,"k":int,"n":int,"elements":[
//      {"bar":{"color":"blue"|"red","label":int}} |
//      {"pair":{"blue":[ints],"red":[ints],"extra":bool}}, ...]}
// Blocks are ascending and never list the stars.
std::string to_json(const MBarredSequence& s);
MBarredSequence parse_mbarred(const std::string& text);

// Callan sequences reuse the object format without bars; "m" is the shift.
std::string to_json(const CallanSequence& s);

// {"dumont":[ints]}
std::string to_json(const DumontPermutation& p);

// The psi_b intermediate adds "form":"psi-b" in front of the usual fields.
std::string to_json(const PsiIntermediate& s);
PsiIntermediate parse_psi_intermediate(const std::string& text);

// True when the document carries "form":"psi-b".
bool is_psi_intermediate_json(const std::string& text);

}  // namespace callan
