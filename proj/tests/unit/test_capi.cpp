#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "callan/callan.h"
#include "golden.hpp"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  callan_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("numbers through the C interface") {
  char* out = nullptr;
  REQUIRE(callan_genocchi(10, &out) == CALLAN_OK);
  CHECK(take(out) == "-155");
  REQUIRE(callan_c_number(5, 5, &out) == CALLAN_OK);
  CHECK(take(out) == "1441923");
  REQUIRE(callan_poly_bernoulli_b(3, 1, &out) == CALLAN_OK);
  CHECK(take(out) == "0");
  REQUIRE(callan_poly_bernoulli_c(1, 1, &out) == CALLAN_OK);
  CHECK(take(out) == "-1/2");
  REQUIRE(callan_c_table_csv(1, 2, &out) == CALLAN_OK);
  CHECK(take(out) == "n\\k,0,1,2\n0,1,1,1\n1,1,3,7\n");
  CHECK(callan_genocchi(-1, &out) != CALLAN_OK);
  CHECK(std::string(callan_last_error()).size() > 0);
}

TEST_CASE("sequence handles") {
  callan_sequence* s = nullptr;
  REQUIRE(callan_sequence_parse(read_golden("mbarred_example.json").c_str(), &s) == CALLAN_OK);
  int valid = 0;
  char* diag = nullptr;
  REQUIRE(callan_sequence_validate(s, &valid, &diag) == CALLAN_OK);
  CHECK(valid == 1);
  take(diag);
  char* out = nullptr;
  REQUIRE(callan_sequence_classify(s, &out) == CALLAN_OK);
  CHECK(take(out) == "star-only");
  REQUIRE(callan_sequence_text(s, &out) == CALLAN_OK);
  CHECK(take(out) == "|b3|b2|r1|r2(5,45)|r3(79,7)(4,6)|b1|r0(68*,*)");
  REQUIRE(callan_sequence_json(s, &out) == CALLAN_OK);
  CHECK(take(out) == read_golden("mbarred_example.json"));
  callan_sequence_free(s);

  CHECK(callan_sequence_parse("{", &s) == CALLAN_ERR_PARSE);
  CHECK(callan_sequence_json(nullptr, &out) == CALLAN_ERR_INVALID_HANDLE);
}

TEST_CASE("enumerators") {
  callan_enumerator* e = nullptr;
  REQUIRE(callan_enumerator_create(CALLAN_KIND_DUMONT, 0, 8, 0, &e) == CALLAN_OK);
  int has = 0, count = 0;
  while (callan_enumerator_next(e, &has, nullptr, nullptr) == CALLAN_OK && has) ++count;
  callan_enumerator_free(e);
  CHECK(count == 155);

  char* out = nullptr;
  REQUIRE(callan_count(CALLAN_KIND_MBARRED, 2, 2, 0, &out) == CALLAN_OK);
  CHECK(take(out) == "31");
  REQUIRE(callan_count(CALLAN_KIND_CALLAN, 2, 2, 0, &out) == CALLAN_OK);
  CHECK(take(out) == "14");
  CHECK(callan_enumerator_create(CALLAN_KIND_MBARRED, -1, 0, 0, &e) == CALLAN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("maps") {
  char *out = nullptr, *tag = nullptr;
  REQUIRE(callan_map_apply(CALLAN_MAP_PHI, read_golden("phi_B2.in.json").c_str(), &out, &tag) == CALLAN_OK);
  CHECK(take(out) == read_golden("phi_B2.out.json"));
  CHECK(take(tag) == "B2");
  REQUIRE(callan_map_apply(CALLAN_MAP_PSI_B, read_golden("psi_b.in.json").c_str(), &out, nullptr) == CALLAN_OK);
  CHECK(take(out) == read_golden("psi_b.out.json"));
  REQUIRE(callan_map_apply(CALLAN_MAP_PSI_R, read_golden("psi_r_ordinary.in.json").c_str(), &out, &tag) == CALLAN_OK);
  CHECK(take(out) == read_golden("psi_r_ordinary.out.json"));
  CHECK(take(tag) == "ordinary");
  CHECK(callan_map_apply(CALLAN_MAP_PHI, read_golden("phi_B2.out.json").c_str(), &out, &tag) == CALLAN_ERR_DOMAIN);
}

TEST_CASE("verification reports") {
  callan_report_list* r = nullptr;
  REQUIRE(callan_verify("telescope", 4, &r) == CALLAN_OK);
  CHECK(callan_report_list_size(r) > 0);
  CHECK(callan_report_list_passed(r) == callan_report_list_size(r));
  char* out = nullptr;
  REQUIRE(callan_report_list_json(r, &out) == CALLAN_OK);
  CHECK(take(out).find("\"claim\":\"telescope\"") != std::string::npos);
  callan_report_list_free(r);
  CHECK(callan_verify("bogus", -1, &r) == CALLAN_ERR_INVALID_ARGUMENT);
}
