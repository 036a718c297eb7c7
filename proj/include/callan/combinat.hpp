#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace callan {

enum class Color : std::uint8_t { blue, red };

struct Bar {
  Color color = Color::red;
  int label = 0;
  friend auto operator<=>(const Bar&, const Bar&) = default;
};

// A (blue block, red block) couple. Blocks are ascending and never store the
// star elements: the extra pair carries them implicitly, so an extra pair with
// an empty red block means the red block is {*}.
struct CallanPair {
  std::vector<int> blue;
  std::vector<int> red;
  bool extra = false;
  friend auto operator<=>(const CallanPair&, const CallanPair&) = default;
};

using Element = std::variant<Bar, CallanPair>;

// Ordered Callan pairs on base sets {shift+1..shift+k} (blue) and
// {shift+1..shift+n} (red); the extra pair is last.
struct CallanSequence {
  int k = 0;
  int n = 0;
  int shift = 0;
  std::vector<CallanPair> pairs;
  friend bool operator==(const CallanSequence&, const CallanSequence&) = default;
};

// Interleaving of blue bars |1..|m, red bars |0..|m and a Callan sequence
// shifted by m. Also used (with m = 0) for plain barred Callan sequences.
struct MBarredSequence {
  int m = 0;
  int k = 0;
  int n = 0;
  std::vector<Element> elements;
  friend bool operator==(const MBarredSequence&, const MBarredSequence&) = default;
  friend auto operator<=>(const MBarredSequence&, const MBarredSequence&) = default;
};

struct DumontPermutation {
  std::vector<int> values;
  friend auto operator<=>(const DumontPermutation&, const DumontPermutation&) = default;
};

struct Validation {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const noexcept { return ok; }
  static Validation pass() { return {}; }
  static Validation fail(std::string why) { return {false, std::move(why)}; }
};

Validation validate_callan(const CallanSequence& s);
Validation validate_mbarred(const MBarredSequence& s);
Validation validate_dumont(const DumontPermutation& p);

inline bool is_bar(const Element& e) { return std::holds_alternative<Bar>(e); }
inline bool is_pair(const Element& e) { return std::holds_alternative<CallanPair>(e); }

// The last element; throws domain error if it is not an extra pair.
const CallanPair& extra_pair(const MBarredSequence& s);
CallanPair& extra_pair(MBarredSequence& s);

// Pairs in sequence order, bars dropped.
CallanSequence underlying_callan(const MBarredSequence& s);

// --- enumeration -----------------------------------------------------------
//
// Canonical order. Callan sequences: by number of ordinary pairs ascending,
// then lexicographically by the ordered blue blocks, then by the ordered red
// blocks. Bar arrangements: depth-first left to right; at each position the
// search first tries closing the current bar run with the next pair, then
// bars by ascending label, blue before red at equal label. m-barred sequences
// iterate bar arrangements innermost.

// Bar runs preceding each of `pairs` consecutive pairs, over all placements of
// blue bars 1..m and red bars 0..m allowed by the adjacency rules.
using BarArrangement = std::vector<std::vector<Bar>>;
std::vector<BarArrangement> bar_arrangements(int m, int pairs);

class CallanEnumerator {
 public:
  CallanEnumerator(int k, int n, int shift);
  std::optional<CallanSequence> next();

 private:
  friend class MBarredEnumerator;
  struct Level {
    std::vector<std::vector<std::vector<int>>> blue;  // ordered partitions
    std::vector<std::vector<int>> blue_rest;          // extra blue block
    std::vector<std::vector<std::vector<int>>> red;
    std::vector<std::vector<int>> red_rest;
  };
  bool advance();
  std::vector<CallanPair> current_pairs() const;

  int k_, n_, shift_;
  std::vector<Level> levels_;  // index = number of ordinary pairs
  std::size_t level_ = 0, blue_ = 0, red_ = 0;
  bool started_ = false, done_ = false;
};

class MBarredEnumerator {
 public:
  MBarredEnumerator(int k, int n, int m);
  std::optional<MBarredSequence> next();

 private:
  CallanEnumerator pairs_;
  std::vector<std::vector<BarArrangement>> bars_;  // index = number of ordinary pairs
  std::vector<CallanPair> current_;
  std::size_t arrangement_ = 0;
  bool have_pairs_ = false;
  int m_;
};

class DumontEnumerator {
 public:
  explicit DumontEnumerator(int two_n);
  std::optional<DumontPermutation> next();

 private:
  bool extend();
  int size_;
  std::vector<int> values_;
  std::vector<int> tried_;  // last value tried at each position
  std::vector<bool> used_;
  bool done_ = false;
};

std::vector<CallanSequence> enumerate_callan(int k, int n, int shift = 0);
std::vector<MBarredSequence> enumerate_mbarred(int k, int n, int m);
std::vector<DumontPermutation> enumerate_dumont(int two_n);

void for_each_mbarred(int k, int n, int m, const std::function<void(const MBarredSequence&)>& visit);
std::size_t count_mbarred(int k, int n, int m);

// --- partition cells -------------------------------------------------------

enum class Cell {
  red_star_nonempty,          // extra red block holds more than the star
  star_only,                  // extra red block is {*}, not in the barred-max cell
  star_only_barred_max,       // ... and max blue m+k is a barred ordinary singleton
};

const char* to_string(Cell c);

// Blue `label` forms a singleton blue block of an ordinary pair that is
// immediately preceded by a bar.
bool has_barred_singleton(const MBarredSequence& s, int label);

Cell classify(const MBarredSequence& s);

// --- elementary bijections -------------------------------------------------

// Exchanges blue and red blocks in every pair: C_n^k(m) -> C_k^n(m).
MBarredSequence swap_colors(const MBarredSequence& s);

// A Callan sequence with one unlabeled bar in front of pairs[bar_slot].
struct BarredCallanSequence {
  CallanSequence callan;
  std::size_t bar_slot = 0;
  friend bool operator==(const BarredCallanSequence&, const BarredCallanSequence&) = default;
};

BarredCallanSequence mbarred_to_barred(const MBarredSequence& s);
MBarredSequence barred_to_mbarred(const BarredCallanSequence& b);

// Requires k = n = 0. Drops the trailing red |m and (*,*); blue |i -> 2i,
// red |i -> 2i+1.
DumontPermutation mbarred_to_dumont(const MBarredSequence& s);
MBarredSequence dumont_to_mbarred(const DumontPermutation& p);

// --- display ---------------------------------------------------------------

std::string to_text(const CallanPair& p);
std::string to_text(const MBarredSequence& s);
std::string to_text(const CallanSequence& s);
std::string to_text(const BarredCallanSequence& b);
std::string to_text(const DumontPermutation& p);

// Compact unambiguous key, for set comparisons.
std::string canonical_key(const MBarredSequence& s);

}  // namespace callan
