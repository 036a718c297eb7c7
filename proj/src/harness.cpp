#include "callan/harness.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

#include "callan/bijections.hpp"
#include "callan/combinat.hpp"
#include "callan/error.hpp"
#include "callan/json_io.hpp"

namespace callan {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;
constexpr int kDefaultSumWeight = 8;
constexpr int kDefaultObjectWeight = 6;

class Timer {
 public:
  std::chrono::duration<double> elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport make_report(std::string claim, std::vector<std::pair<std::string, long>> params) {
  VerificationReport r;
  r.claim_id = std::move(claim);
  r.parameters = std::move(params);
  return r;
}

void add_counterexample(VerificationReport& r, std::string what) {
  if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(what));
}

void finish(VerificationReport& r, const Timer& t) {
  r.passed = r.lhs == r.rhs && r.counterexamples.empty();
  r.elapsed = t.elapsed();
}

std::string note(const std::string& message, const MBarredSequence& s) {
  nlohmann::ordered_json j{{"note", message}, {"object", nlohmann::ordered_json::parse(to_json(s))}};
  return j.dump();
}

SignedCount signed_sum(const std::vector<SumTerm>& terms) {
  SignedCount total = 0;
  for (const auto& t : terms) total += t.sign * t.count;
  return total;
}

SignedCount sign_power(long e) { return e % 2 == 0 ? SignedCount(1) : SignedCount(-1); }

std::vector<MBarredSequence> filtered(int k, int n, int m, bool (*keep)(const MBarredSequence&)) {
  std::vector<MBarredSequence> out;
  for_each_mbarred(k, n, m, [&](const MBarredSequence& s) {
    if (keep(s)) out.push_back(s);
  });
  return out;
}

// Shared skeleton of an exhaustive bijection certificate: every domain element
// maps into the codomain and back, no two collide, and every codomain element
// is hit and maps back.
template <class Forward, class Backward>
void certify_bijection(VerificationReport& r, const std::vector<MBarredSequence>& domain,
                       const std::vector<MBarredSequence>& codomain, Forward forward, Backward backward,
                       bool (*in_codomain)(const MBarredSequence&)) {
  std::unordered_set<std::string> image;
  for (const auto& s : domain) {
    try {
      const auto t = forward(s);
      if (!in_codomain(t)) add_counterexample(r, note("image outside codomain", s));
      if (!image.insert(canonical_key(t)).second) add_counterexample(r, note("collision", s));
      if (backward(t) != s) add_counterexample(r, note("inverse(map(x)) != x", s));
    } catch (const Error& e) {
      add_counterexample(r, note(std::string("map failed: ") + e.what(), s));
    }
  }
  for (const auto& t : codomain) {
    if (!image.count(canonical_key(t))) add_counterexample(r, note("codomain element not hit", t));
    try {
      if (forward(backward(t)) != t) add_counterexample(r, note("map(inverse(y)) != y", t));
    } catch (const Error& e) {
      add_counterexample(r, note(std::string("inverse failed: ") + e.what(), t));
    }
  }
  r.lhs = static_cast<unsigned long>(domain.size());
  r.rhs = static_cast<unsigned long>(codomain.size());
}

bool has_red_star(const MBarredSequence& s) { return !extra_pair(s).red.empty(); }
bool is_valid(const MBarredSequence& s) { return static_cast<bool>(validate_mbarred(s)); }
bool in_max_cell(const MBarredSequence& s) { return classify(s) == Cell::star_only_barred_max; }
bool in_min_cell(const MBarredSequence& s) {
  return s.k >= 1 && extra_pair(s).red.empty() && has_barred_singleton(s, s.m + 1);
}

}  // namespace

const char* to_string(Source s) { return s == Source::series ? "series" : "enumeration"; }

SignedCount enumerated_count(int k, int n, int m) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, SignedCount> memo;
  const auto key = std::make_tuple(k, n, m);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  SignedCount count = static_cast<unsigned long>(count_mbarred(k, n, m));
  std::lock_guard lock(mutex);
  memo.emplace(key, count);
  return count;
}

std::vector<SumTerm> alternating_terms(int n, int m, Source source) {
  if (n < 0 || m < 0) throw Error(ErrorCode::invalid_argument, "alternating sum needs n, m >= 0");
  if (source == Source::series && m != 0) {
    throw Error(ErrorCode::unsupported, "series counts exist only for m = 0");
  }
  std::vector<SumTerm> terms;
  for (int j = 0; j <= n; ++j) {
    SumTerm t{j, j % 2 == 0 ? 1 : -1, 0, source};
    t.count = source == Source::series ? c_number(static_cast<std::size_t>(n - j), static_cast<std::size_t>(j))
                                       : enumerated_count(j, n - j, m);
    terms.push_back(std::move(t));
  }
  return terms;
}

VerificationReport verify_pb_zero(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "pb-zero needs n >= 0");
  Timer timer;
  auto r = make_report("pb-zero", {{"n", n}});
  for (int j = 0; j <= n; ++j) {
    SumTerm t{j, j % 2 == 0 ? 1 : -1, 0, Source::series};
    t.count = require_integer(poly_bernoulli_b(static_cast<std::size_t>(n - j), -j), "pb-zero");
    r.terms.push_back(std::move(t));
  }
  r.lhs = signed_sum(r.terms);
  r.rhs = 0;
  finish(r, timer);
  return r;
}

VerificationReport verify_thm_identity(int n, Source source) {
  Timer timer;
  auto r = make_report("thm1", {{"n", n}, {"series", source == Source::series ? 1 : 0}});
  r.terms = alternating_terms(n, 0, source);
  r.lhs = signed_sum(r.terms);
  r.rhs = -genocchi(static_cast<std::size_t>(n) + 2);
  finish(r, timer);
  return r;
}

VerificationReport verify_thm_identity2(int n, int m, Source source) {
  Timer timer;
  auto r = make_report("thm2", {{"n", n}, {"m", m}, {"series", source == Source::series ? 1 : 0}});
  r.terms = alternating_terms(n, m, source);
  r.lhs = signed_sum(r.terms);
  r.rhs = sign_power(m + 1) * genocchi(static_cast<std::size_t>(n + 2 * m + 2));
  finish(r, timer);
  return r;
}

VerificationReport verify_prop_rec(int n, int m) {
  if (n < 2 || m < 0) throw Error(ErrorCode::invalid_argument, "prop-rec needs n >= 2 and m >= 0");
  Timer timer;
  auto r = make_report("prop-rec", {{"n", n}, {"m", m}});
  r.terms = alternating_terms(n, m, Source::enumeration);
  r.lhs = signed_sum(r.terms);
  r.rhs = -signed_sum(alternating_terms(n - 2, m + 1, Source::enumeration));
  finish(r, timer);
  return r;
}

VerificationReport verify_telescope(int n, int m) {
  if (n < 0 || n % 2 != 0 || m < 0) throw Error(ErrorCode::invalid_argument, "telescope needs even n >= 0, m >= 0");
  Timer timer;
  const int half = n / 2;
  auto r = make_report("telescope", {{"n", n}, {"m", m}, {"chain_end_m", m + half}});
  std::vector<SignedCount> chain;
  for (int i = 0; i <= half; ++i) chain.push_back(signed_sum(alternating_terms(n - 2 * i, m + i, Source::enumeration)));
  for (int i = 0; i < half; ++i) {
    if (chain[static_cast<std::size_t>(i)] != -chain[static_cast<std::size_t>(i) + 1]) {
      std::ostringstream os;
      os << "{\"note\":\"step fails\",\"n\":" << n - 2 * i << ",\"m\":" << m + i << "}";
      add_counterexample(r, os.str());
    }
  }
  const auto end = enumerated_count(0, 0, m + half);
  r.lhs = chain.front();
  r.rhs = sign_power(half) * end;
  const SignedCount genocchi_side = sign_power(m + 1) * genocchi(static_cast<std::size_t>(n + 2 * m + 2));
  if (r.rhs != genocchi_side) {
    add_counterexample(r, "{\"note\":\"chain end differs from (-1)^(m+1) G(n+2m+2)\",\"value\":\"" +
                              genocchi_side.get_str() + "\"}");
  }
  finish(r, timer);
  return r;
}

VerificationReport verify_partition(int k, int n, int m) {
  Timer timer;
  auto r = make_report("partition", {{"k", k}, {"n", n}, {"m", m}});
  std::size_t cells[3] = {0, 0, 0};
  std::size_t total = 0;
  for_each_mbarred(k, n, m, [&](const MBarredSequence& s) {
    ++total;
    const bool red_star = !extra_pair(s).red.empty();
    const bool barred_max = !red_star && k >= 1 && has_barred_singleton(s, m + k);
    const Cell c = classify(s);
    const Cell expected = red_star ? Cell::red_star_nonempty : barred_max ? Cell::star_only_barred_max : Cell::star_only;
    if (c != expected) add_counterexample(r, note("classify disagrees with cell predicates", s));
    ++cells[static_cast<int>(c)];
    if (k == 0 && n > 0 && c != Cell::red_star_nonempty) add_counterexample(r, note("star cell nonempty at k = 0", s));
    if (n == 0 && c == Cell::star_only_barred_max) add_counterexample(r, note("barred-max cell nonempty at n = 0", s));
  });
  r.lhs = static_cast<unsigned long>(cells[0] + cells[1] + cells[2]);
  r.rhs = static_cast<unsigned long>(total);
  if (m == 0 && r.rhs != c_number(static_cast<std::size_t>(n), static_cast<std::size_t>(k))) {
    add_counterexample(r, "{\"note\":\"enumerated total differs from series C_n^k\"}");
  }
  r.parameters.emplace_back("red_star", static_cast<long>(cells[0]));
  r.parameters.emplace_back("star_only", static_cast<long>(cells[1]));
  r.parameters.emplace_back("barred_max", static_cast<long>(cells[2]));
  finish(r, timer);
  return r;
}

VerificationReport certify_phi(int k, int n, int m) {
  if (k < 0 || n < 1 || m < 0) throw Error(ErrorCode::invalid_argument, "certify_phi needs n >= 1");
  Timer timer;
  auto r = make_report("phi", {{"k", k}, {"n", n}, {"m", m}});
  const auto domain = filtered(k, n, m, has_red_star);
  const auto codomain = filtered(k + 1, n - 1, m, in_phi_codomain);
  certify_bijection(r, domain, codomain, phi, phi_inverse, in_phi_codomain);
  for (const auto& s : domain) {
    try {
      if (phi_inverse_case(phi(s)) != phi_case(s)) add_counterexample(r, note("case not recoverable", s));
    } catch (const Error&) {
      // Already reported by the bijection sweep.
    }
  }
  finish(r, timer);
  return r;
}

VerificationReport certify_psi(int k, int n, int m) {
  if (k < 1 || n < 1 || m < 0) throw Error(ErrorCode::invalid_argument, "certify_psi needs k, n >= 1");
  Timer timer;
  auto r = make_report("psi", {{"k", k}, {"n", n}, {"m", m}});
  const auto domain = filtered(k, n, m, in_psi_domain);
  const auto codomain = enumerate_mbarred(k - 1, n - 1, m + 1);
  certify_bijection(r, domain, codomain, psi, psi_inverse, is_valid);
  for (const auto& t : codomain) {
    if (t.m != m + 1 || t.k != k - 1 || t.n != n - 1) add_counterexample(r, note("wrong codomain sizes", t));
  }
  finish(r, timer);
  return r;
}

VerificationReport certify_relabel(int k, int n, int m) {
  if (k < 1 || n < 0 || m < 0) throw Error(ErrorCode::invalid_argument, "certify_relabel needs k >= 1");
  Timer timer;
  auto r = make_report("relabel", {{"k", k}, {"n", n}, {"m", m}});
  const auto domain = filtered(k, n, m, in_max_cell);
  const auto codomain = filtered(k, n, m, in_min_cell);
  certify_bijection(r, domain, codomain, relabel_max_min, relabel_max_min, in_min_cell);
  finish(r, timer);
  return r;
}

VerificationReport certify_swap_colors(int k, int n, int m) {
  Timer timer;
  auto r = make_report("prop1-swap", {{"k", k}, {"n", n}, {"m", m}});
  const auto domain = enumerate_mbarred(k, n, m);
  const auto codomain = enumerate_mbarred(n, k, m);
  certify_bijection(r, domain, codomain, swap_colors, swap_colors, is_valid);
  finish(r, timer);
  return r;
}

VerificationReport certify_barred_encoding(int k, int n) {
  Timer timer;
  auto r = make_report("prop1-barred", {{"k", k}, {"n", n}});
  // Independent route: every Callan sequence with one bar before any pair.
  std::set<std::string> barred;
  for (const auto& c : enumerate_callan(k, n, 0)) {
    for (std::size_t slot = 0; slot < c.pairs.size(); ++slot) {
      const auto s = barred_to_mbarred({c, slot});
      if (!validate_mbarred(s)) add_counterexample(r, note("encoded barred sequence invalid", s));
      barred.insert(canonical_key(s));
    }
  }
  std::size_t mbarred = 0;
  for_each_mbarred(k, n, 0, [&](const MBarredSequence& s) {
    ++mbarred;
    if (!barred.count(canonical_key(s))) add_counterexample(r, note("not a barred Callan sequence", s));
    try {
      if (barred_to_mbarred(mbarred_to_barred(s)) != s) add_counterexample(r, note("round trip differs", s));
    } catch (const Error& e) {
      add_counterexample(r, note(e.what(), s));
    }
  });
  r.lhs = static_cast<unsigned long>(mbarred);
  r.rhs = static_cast<unsigned long>(barred.size());
  if (r.lhs != c_number(static_cast<std::size_t>(n), static_cast<std::size_t>(k))) {
    add_counterexample(r, "{\"note\":\"count differs from series C_n^k\"}");
  }
  finish(r, timer);
  return r;
}

VerificationReport certify_dumont_encoding(int m) {
  Timer timer;
  auto r = make_report("prop1-dumont", {{"m", m}});
  std::set<DumontPermutation> image;
  std::size_t domain = 0;
  for_each_mbarred(0, 0, m, [&](const MBarredSequence& s) {
    ++domain;
    try {
      const auto p = mbarred_to_dumont(s);
      if (!validate_dumont(p)) add_counterexample(r, note("image is not a Dumont permutation", s));
      if (!image.insert(p).second) add_counterexample(r, note("collision", s));
      if (dumont_to_mbarred(p) != s) add_counterexample(r, note("round trip differs", s));
    } catch (const Error& e) {
      add_counterexample(r, note(e.what(), s));
    }
  });
  const auto all = enumerate_dumont(2 * m);
  for (const auto& p : all) {
    if (!image.count(p)) add_counterexample(r, to_json(p));
  }
  r.lhs = static_cast<unsigned long>(domain);
  r.rhs = static_cast<unsigned long>(all.size());
  finish(r, timer);
  return r;
}

VerificationReport verify_dumont_count(int n) {
  Timer timer;
  auto r = make_report("prop1-dumont-count", {{"n", n}});
  r.lhs = static_cast<unsigned long>(enumerate_dumont(2 * n).size());
  r.rhs = abs(genocchi(static_cast<std::size_t>(2 * n + 2)));
  finish(r, timer);
  return r;
}

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = {"pb-zero", "thm1",    "thm2", "prop-rec", "partition", "phi",
                                                 "psi",     "relabel", "telescope", "prop1", "all"};
  return names;
}

std::vector<VerificationReport> run_claim(const std::string& claim, std::optional<int> max_weight) {
  const auto& names = claim_names();
  if (std::find(names.begin(), names.end(), claim) == names.end()) {
    throw Error(ErrorCode::invalid_argument, "unknown claim '" + claim + "'");
  }
  if (max_weight && *max_weight < 0) throw Error(ErrorCode::invalid_argument, "max-weight must be >= 0");
  const int sum_weight = max_weight.value_or(kDefaultSumWeight);
  const int object_weight = max_weight.value_or(kDefaultObjectWeight);
  const bool all = claim == "all";
  std::vector<VerificationReport> out;

  auto object_cells = [&](auto&& fn) {
    for (int k = 0; k <= object_weight; ++k)
      for (int n = 0; k + n <= object_weight; ++n)
        for (int m = 0; k + n + m <= object_weight; ++m) fn(k, n, m);
  };

  if (all || claim == "pb-zero") {
    for (int n = 1; n <= 20; ++n) out.push_back(verify_pb_zero(n));
  }
  if (all || claim == "thm1") {
    for (int n = 0; n <= 2 * sum_weight; ++n) out.push_back(verify_thm_identity(n, Source::series));
    for (int n = 0; n < sum_weight; ++n) out.push_back(verify_thm_identity(n, Source::enumeration));
  }
  if (all || claim == "thm2") {
    for (int m = 0; 2 * m <= sum_weight; ++m)
      for (int n = 0; n + 2 * m <= sum_weight; ++n) {
        out.push_back(verify_thm_identity2(n, m, Source::enumeration));
        if (m == 0) out.push_back(verify_thm_identity2(n, m, Source::series));
      }
  }
  if (all || claim == "prop-rec") {
    for (int m = 0; 2 * m + 2 <= sum_weight; ++m)
      for (int n = 2; n + 2 * m <= sum_weight; ++n) out.push_back(verify_prop_rec(n, m));
  }
  if (all || claim == "telescope") {
    for (int m = 0; 2 * m <= sum_weight; ++m)
      for (int n = 0; n + 2 * m <= sum_weight; n += 2) out.push_back(verify_telescope(n, m));
  }
  if (all || claim == "partition") object_cells([&](int k, int n, int m) { out.push_back(verify_partition(k, n, m)); });
  if (all || claim == "phi") {
    object_cells([&](int k, int n, int m) {
      if (n >= 1) out.push_back(certify_phi(k, n, m));
    });
  }
  if (all || claim == "psi") {
    object_cells([&](int k, int n, int m) {
      if (k >= 1 && n >= 1) out.push_back(certify_psi(k, n, m));
    });
  }
  if (all || claim == "relabel") {
    object_cells([&](int k, int n, int m) {
      if (k >= 1) out.push_back(certify_relabel(k, n, m));
    });
  }
  if (all || claim == "prop1") {
    object_cells([&](int k, int n, int m) { out.push_back(certify_swap_colors(k, n, m)); });
    for (int k = 0; k <= object_weight; ++k)
      for (int n = 0; k + n <= object_weight; ++n) out.push_back(certify_barred_encoding(k, n));
    for (int m = 0; m <= object_weight - 2; ++m) out.push_back(certify_dumont_encoding(m));
    for (int n = 0; n <= object_weight - 2; ++n) out.push_back(verify_dumont_count(n));
  }

  std::sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.claim_id, a.parameters) < std::tie(b.claim_id, b.parameters);
  });
  return out;
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.parameters) params[name] = value;
  j["parameters"] = params;
  j["lhs"] = r.lhs.get_str();
  j["rhs"] = r.rhs.get_str();
  j["status"] = r.passed ? "pass" : "fail";
  nlohmann::ordered_json ce = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) {
    try {
      ce.push_back(nlohmann::ordered_json::parse(c));
    } catch (const nlohmann::json::exception&) {
      ce.push_back(c);
    }
  }
  j["counterexamples"] = ce;
  if (!r.terms.empty()) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : r.terms) {
      terms.push_back({{"j", t.j}, {"sign", t.sign}, {"count", t.count.get_str()}, {"source", to_string(t.source)}});
    }
    j["terms"] = terms;
  }
  j["elapsed_ms"] = r.elapsed.count() * 1e3;
  return j.dump();
}

std::string format_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [name, value] : r.parameters) {
      if (!params.empty()) params += ' ';
      params += name + "=" + std::to_string(value);
    }
    os << (r.passed ? "PASS " : "FAIL ") << r.claim_id;
    os << std::string(r.claim_id.size() < 20 ? 20 - r.claim_id.size() : 1, ' ') << params;
    os << "  lhs=" << r.lhs.get_str() << " rhs=" << r.rhs.get_str();
    if (!r.counterexamples.empty()) os << "  (" << r.counterexamples.size() << " counterexample(s))";
    os << '\n';
    for (const auto& c : r.counterexamples) os << "    " << c << '\n';
    passed += r.passed;
  }
  os << passed << "/" << reports.size() << " reports passed\n";
  return os.str();
}

}  // namespace callan
