#include "callan/callan.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <variant>

#include "callan/bijections.hpp"
#include "callan/combinat.hpp"
#include "callan/error.hpp"
#include "callan/harness.hpp"
#include "callan/json_io.hpp"
#include "callan/numbers.hpp"

struct callan_sequence {
  callan::MBarredSequence value;
};

struct callan_enumerator {
  std::variant<callan::CallanEnumerator, callan::MBarredEnumerator, callan::DumontEnumerator> impl;
};

struct callan_report_list {
  std::vector<callan::VerificationReport> reports;
};

namespace {

thread_local std::string last_error;

callan_status status_of(callan::ErrorCode code) {
  using callan::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return CALLAN_ERR_INVALID_ARGUMENT;
    case ErrorCode::out_of_range: return CALLAN_ERR_OUT_OF_RANGE;
    case ErrorCode::division_by_zero: return CALLAN_ERR_DIVISION_BY_ZERO;
    case ErrorCode::non_series_quotient: return CALLAN_ERR_NON_SERIES_QUOTIENT;
    case ErrorCode::invalid_composition: return CALLAN_ERR_INVALID_COMPOSITION;
    case ErrorCode::domain: return CALLAN_ERR_DOMAIN;
    case ErrorCode::consistency: return CALLAN_ERR_CONSISTENCY;
    case ErrorCode::unsupported: return CALLAN_ERR_UNSUPPORTED;
    case ErrorCode::parse: return CALLAN_ERR_PARSE;
  }
  return CALLAN_ERR_UNKNOWN;
}

template <class F>
callan_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return CALLAN_OK;
  } catch (const callan::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return CALLAN_ERR_UNKNOWN;
}

char* dup(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

void require_out(const void* p) {
  if (!p) throw callan::Error(callan::ErrorCode::invalid_argument, "null output pointer");
}

void require_non_negative(int v, const char* name) {
  if (v < 0) throw callan::Error(callan::ErrorCode::invalid_argument, std::string(name) + " must be >= 0");
}

callan_status invalid_handle() {
  last_error = "null handle";
  return CALLAN_ERR_INVALID_HANDLE;
}

}  // namespace

extern "C" {

const char* callan_status_string(callan_status status) {
  switch (status) {
    case CALLAN_OK: return "ok";
    case CALLAN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CALLAN_ERR_OUT_OF_RANGE: return "out of range";
    case CALLAN_ERR_DIVISION_BY_ZERO: return "division by zero";
    case CALLAN_ERR_NON_SERIES_QUOTIENT: return "quotient is not a power series";
    case CALLAN_ERR_INVALID_COMPOSITION: return "invalid composition";
    case CALLAN_ERR_DOMAIN: return "input outside the map's domain";
    case CALLAN_ERR_CONSISTENCY: return "internal consistency failure";
    case CALLAN_ERR_UNSUPPORTED: return "unsupported";
    case CALLAN_ERR_PARSE: return "parse error";
    case CALLAN_ERR_INVALID_HANDLE: return "invalid handle";
    case CALLAN_ERR_UNKNOWN: return "unknown error";
  }
  return "unknown status";
}

const char* callan_last_error(void) { return last_error.c_str(); }

void callan_string_free(char* s) { std::free(s); }

const char* callan_version(void) { return "0.1.0"; }

callan_status callan_genocchi(int n, char** out) {
  return guarded([&] {
    require_out(out);
    require_non_negative(n, "n");
    put(out, callan::genocchi(static_cast<std::size_t>(n)).get_str());
  });
}

callan_status callan_poly_bernoulli_b(int n, int k, char** out) {
  return guarded([&] {
    require_out(out);
    require_non_negative(n, "n");
    put(out, callan::poly_bernoulli_b(static_cast<std::size_t>(n), k).get_str());
  });
}

callan_status callan_poly_bernoulli_c(int n, int k, char** out) {
  return guarded([&] {
    require_out(out);
    require_non_negative(n, "n");
    put(out, callan::poly_bernoulli_c(static_cast<std::size_t>(n), k).get_str());
  });
}

callan_status callan_c_number(int n, int k, char** out) {
  return guarded([&] {
    require_out(out);
    require_non_negative(n, "n");
    require_non_negative(k, "k");
    put(out, callan::c_number(static_cast<std::size_t>(n), static_cast<std::size_t>(k)).get_str());
  });
}

callan_status callan_c_table_csv(int max_n, int max_k, char** out) {
  return guarded([&] {
    require_out(out);
    require_non_negative(max_n, "max_n");
    require_non_negative(max_k, "max_k");
    const auto table = callan::c_table(static_cast<std::size_t>(max_n), static_cast<std::size_t>(max_k));
    std::ostringstream os;
    os << "n\\k";
    for (int k = 0; k <= max_k; ++k) os << ',' << k;
    os << '\n';
    for (int n = 0; n <= max_n; ++n) {
      os << n;
      for (const auto& v : table[static_cast<std::size_t>(n)]) os << ',' << v.get_str();
      os << '\n';
    }
    put(out, os.str());
  });
}

callan_status callan_sequence_parse(const char* json, callan_sequence** out) {
  return guarded([&] {
    require_out(out);
    if (!json) throw callan::Error(callan::ErrorCode::invalid_argument, "null input");
    *out = new callan_sequence{callan::parse_mbarred(json)};
  });
}

void callan_sequence_free(callan_sequence* s) { delete s; }

callan_status callan_sequence_json(const callan_sequence* s, char** out) {
  if (!s) return invalid_handle();
  return guarded([&] {
    require_out(out);
    put(out, callan::to_json(s->value));
  });
}

callan_status callan_sequence_text(const callan_sequence* s, char** out) {
  if (!s) return invalid_handle();
  return guarded([&] {
    require_out(out);
    put(out, callan::to_text(s->value));
  });
}

callan_status callan_sequence_validate(const callan_sequence* s, int* valid, char** diagnostic) {
  if (!s) return invalid_handle();
  return guarded([&] {
    require_out(valid);
    const auto v = callan::validate_mbarred(s->value);
    *valid = v.ok ? 1 : 0;
    put(diagnostic, v.diagnostic);
  });
}

callan_status callan_sequence_classify(const callan_sequence* s, char** cell) {
  if (!s) return invalid_handle();
  return guarded([&] {
    require_out(cell);
    if (auto v = callan::validate_mbarred(s->value); !v) {
      throw callan::Error(callan::ErrorCode::domain, "classify: " + v.diagnostic);
    }
    put(cell, callan::to_string(callan::classify(s->value)));
  });
}

callan_status callan_enumerator_create(callan_kind kind, int k, int n, int m, callan_enumerator** out) {
  return guarded([&] {
    require_out(out);
    switch (kind) {
      case CALLAN_KIND_CALLAN:
        *out = new callan_enumerator{callan::CallanEnumerator(k, n, m)};
        return;
      case CALLAN_KIND_MBARRED:
        *out = new callan_enumerator{callan::MBarredEnumerator(k, n, m)};
        return;
      case CALLAN_KIND_DUMONT:
        *out = new callan_enumerator{callan::DumontEnumerator(n)};
        return;
    }
    throw callan::Error(callan::ErrorCode::invalid_argument, "unknown kind");
  });
}

void callan_enumerator_free(callan_enumerator* e) { delete e; }

callan_status callan_enumerator_next(callan_enumerator* e, int* has_item, char** json, char** text) {
  if (!e) return invalid_handle();
  return guarded([&] {
    require_out(has_item);
    *has_item = 0;
    std::visit(
        [&](auto& impl) {
          if (auto item = impl.next()) {
            *has_item = 1;
            put(json, callan::to_json(*item));
            put(text, callan::to_text(*item));
          }
        },
        e->impl);
  });
}

callan_status callan_count(callan_kind kind, int k, int n, int m, char** out) {
  return guarded([&] {
    require_out(out);
    std::size_t count = 0;
    switch (kind) {
      case CALLAN_KIND_CALLAN: {
        callan::CallanEnumerator e(k, n, m);
        while (e.next()) ++count;
        break;
      }
      case CALLAN_KIND_MBARRED:
        count = callan::count_mbarred(k, n, m);
        break;
      case CALLAN_KIND_DUMONT: {
        callan::DumontEnumerator e(n);
        while (e.next()) ++count;
        break;
      }
      default:
        throw callan::Error(callan::ErrorCode::invalid_argument, "unknown kind");
    }
    put(out, std::to_string(count));
  });
}

callan_status callan_map_apply(callan_map which, const char* input_json, char** output_json, char** case_tag) {
  using namespace callan;
  return guarded([&] {
    require_out(output_json);
    if (!input_json) throw Error(ErrorCode::invalid_argument, "null input");
    const std::string input = input_json;
    std::string result, tag;
    switch (which) {
      case CALLAN_MAP_PHI: {
        const auto s = parse_mbarred(input);
        tag = to_string(phi_case(s));
        result = to_json(phi(s));
        break;
      }
      case CALLAN_MAP_PHI_INV: {
        const auto t = parse_mbarred(input);
        tag = to_string(phi_inverse_case(t));
        result = to_json(phi_inverse(t));
        break;
      }
      case CALLAN_MAP_PSI: {
        const auto s = parse_mbarred(input);
        const auto mid = psi_b(s);
        tag = to_string(psi_r_case(mid));
        result = to_json(psi_r(mid));
        break;
      }
      case CALLAN_MAP_PSI_INV: {
        const auto t = parse_mbarred(input);
        const auto mid = psi_r_inverse(t);
        tag = to_string(psi_r_case(mid));
        result = to_json(psi_b_inverse(mid));
        break;
      }
      case CALLAN_MAP_PSI_B:
        tag = "psi-b";
        result = to_json(psi_b(parse_mbarred(input)));
        break;
      case CALLAN_MAP_PSI_R: {
        const auto mid = parse_psi_intermediate(input);
        tag = to_string(psi_r_case(mid));
        result = to_json(psi_r(mid));
        break;
      }
      case CALLAN_MAP_RELABEL:
        tag = "relabel";
        result = to_json(relabel_max_min(parse_mbarred(input)));
        break;
      case CALLAN_MAP_SWAP_COLORS:
        tag = "swap-colors";
        result = to_json(swap_colors(parse_mbarred(input)));
        break;
      default:
        throw Error(ErrorCode::invalid_argument, "unknown map");
    }
    put(output_json, result);
    put(case_tag, tag);
  });
}

callan_status callan_verify(const char* claim, int max_weight, callan_report_list** out) {
  return guarded([&] {
    require_out(out);
    if (!claim) throw callan::Error(callan::ErrorCode::invalid_argument, "null claim");
    std::optional<int> weight;
    if (max_weight >= 0) weight = max_weight;
    *out = new callan_report_list{callan::run_claim(claim, weight)};
  });
}

void callan_report_list_free(callan_report_list* r) { delete r; }

size_t callan_report_list_size(const callan_report_list* r) { return r ? r->reports.size() : 0; }

size_t callan_report_list_passed(const callan_report_list* r) {
  if (!r) return 0;
  size_t passed = 0;
  for (const auto& rep : r->reports) passed += rep.passed;
  return passed;
}

callan_status callan_report_list_json(const callan_report_list* r, char** out) {
  if (!r) return invalid_handle();
  return guarded([&] {
    require_out(out);
    std::string lines;
    for (const auto& rep : r->reports) lines += callan::to_json_line(rep) + "\n";
    put(out, lines);
  });
}

callan_status callan_report_list_table(const callan_report_list* r, char** out) {
  if (!r) return invalid_handle();
  return guarded([&] {
    require_out(out);
    put(out, callan::format_table(r->reports));
  });
}

}  // extern "C"
