// Command-line front end. Talks to the library only through callan.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "callan/callan.h"

namespace {

struct CString {
  char* ptr = nullptr;
  ~CString() { callan_string_free(ptr); }
  char** out() { return &ptr; }
  std::string str() const { return ptr ? ptr : ""; }
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(callan_status status) {
  if (status != CALLAN_OK) {
    throw Failure(std::string(callan_status_string(status)) + ": " + callan_last_error());
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Failure("cannot open " + path);
    os << in.rdbuf();
  }
  return os.str();
}

int cmd_genocchi(int max) {
  for (int n = 0; n <= max; ++n) {
    CString v;
    check(callan_genocchi(n, v.out()));
    std::cout << n << ' ' << v.str() << '\n';
  }
  return 0;
}

int cmd_number(const std::string& family, int n, int k) {
  CString v;
  if (family == "b") {
    check(callan_poly_bernoulli_b(n, k, v.out()));
  } else if (family == "c") {
    check(callan_poly_bernoulli_c(n, k, v.out()));
  } else {
    check(callan_c_table_csv(n, k, v.out()));
    std::cout << v.str();
    return 0;
  }
  std::cout << v.str() << '\n';
  return 0;
}

int cmd_enumerate(const std::string& kind, int k, int n, int m, bool count_only, bool json) {
  static const std::map<std::string, callan_kind> kinds = {
      {"callan", CALLAN_KIND_CALLAN}, {"mbarred", CALLAN_KIND_MBARRED}, {"dumont", CALLAN_KIND_DUMONT}};
  const callan_kind which = kinds.at(kind);
  if (count_only) {
    CString v;
    check(callan_count(which, k, n, m, v.out()));
    std::cout << v.str() << '\n';
    return 0;
  }
  callan_enumerator* raw = nullptr;
  check(callan_enumerator_create(which, k, n, m, &raw));
  std::unique_ptr<callan_enumerator, decltype(&callan_enumerator_free)> e(raw, callan_enumerator_free);
  while (true) {
    int has = 0;
    CString js, text;
    check(callan_enumerator_next(e.get(), &has, json ? js.out() : nullptr, json ? nullptr : text.out()));
    if (!has) break;
    std::cout << (json ? js.str() : text.str()) << '\n';
  }
  return 0;
}

int cmd_map(const std::string& which, const std::string& input) {
  static const std::map<std::string, callan_map> maps = {
      {"phi", CALLAN_MAP_PHI},     {"phi-inv", CALLAN_MAP_PHI_INV}, {"psi", CALLAN_MAP_PSI},
      {"psi-inv", CALLAN_MAP_PSI_INV}, {"psi-b", CALLAN_MAP_PSI_B}, {"psi-r", CALLAN_MAP_PSI_R},
      {"relabel", CALLAN_MAP_RELABEL}, {"swap", CALLAN_MAP_SWAP_COLORS}};
  const std::string doc = read_input(input);
  CString result, tag;
  check(callan_map_apply(maps.at(which), doc.c_str(), result.out(), tag.out()));
  std::cout << "{\"case\":\"" << tag.str() << "\",\"result\":" << result.str() << "}\n";
  return 0;
}

int cmd_verify(const std::string& claim, int max_weight, bool json) {
  callan_report_list* raw = nullptr;
  check(callan_verify(claim.c_str(), max_weight, &raw));
  std::unique_ptr<callan_report_list, decltype(&callan_report_list_free)> reports(raw, callan_report_list_free);
  CString out;
  check(json ? callan_report_list_json(reports.get(), out.out()) : callan_report_list_table(reports.get(), out.out()));
  std::cout << out.str();
  return callan_report_list_passed(reports.get()) == callan_report_list_size(reports.get()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genocchi and poly-Bernoulli numbers, Callan sequences and their bijections"};
  app.require_subcommand(1);
  app.set_version_flag("--version", callan_version());

  int max = 10;
  auto* genocchi = app.add_subcommand("genocchi", "Print G_0..G_max");
  genocchi->add_option("--max", max, "Largest index")->check(CLI::NonNegativeNumber);

  std::string family = "ctable";
  int n = 0, k = 0, m = 0;
  auto* number = app.add_subcommand("number", "B_n^(k), C_n^(k), or the C_n^k table as CSV");
  number->add_option("--family", family, "b, c or ctable")->check(CLI::IsMember({"b", "c", "ctable"}));
  number->add_option("--n", n, "Index n (table: largest n)");
  number->add_option("--k", k, "Index k (table: largest k)");

  std::string kind = "mbarred";
  bool count_only = false, json = false;
  auto* enumerate = app.add_subcommand("enumerate", "List Callan sequences, m-barred sequences or Dumont permutations");
  enumerate->add_option("--kind", kind, "callan, mbarred or dumont")->check(CLI::IsMember({"callan", "mbarred", "dumont"}));
  enumerate->add_option("--k", k, "Blue size");
  enumerate->add_option("--n", n, "Red size (dumont: permutation length)");
  enumerate->add_option("--m", m, "Bar parameter (callan: base shift)");
  enumerate->add_flag("--count-only", count_only, "Print only the number of objects");
  enumerate->add_flag("--json", json, "One canonical JSON object per line");

  std::string which, input;
  auto* map = app.add_subcommand("map", "Apply a bijection to a JSON object");
  map->add_option("--which", which, "phi, phi-inv, psi, psi-inv, psi-b, psi-r, relabel or swap")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "psi", "psi-inv", "psi-b", "psi-r", "relabel", "swap"}));
  map->add_option("--input", input, "JSON file, or - for stdin")->required();

  std::string claim = "all";
  int max_weight = -1;
  auto* verify = app.add_subcommand("verify", "Certify identities and bijections; exit status 0 iff all pass");
  verify->add_option("--claim", claim, "pb-zero, thm1, thm2, prop-rec, partition, phi, psi, relabel, telescope, prop1 or all")
      ->check(CLI::IsMember({"pb-zero", "thm1", "thm2", "prop-rec", "partition", "phi", "psi", "relabel", "telescope",
                             "prop1", "all"}));
  verify->add_option("--max-weight", max_weight, "Sweep bound (default: n+2m <= 8 for sums, k+n+m <= 6 for maps)");
  verify->add_flag("--json", json, "JSON lines instead of a table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*genocchi) return cmd_genocchi(max);
    if (*number) return cmd_number(family, n, k);
    if (*enumerate) return cmd_enumerate(kind, k, n, m, count_only, json);
    if (*map) return cmd_map(which, input);
    if (*verify) return cmd_verify(claim, max_weight, json);
  } catch (const Failure& e) {
    std::cerr << "callan: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
