#include <doctest.h>

#include <set>

#include "callan/bijections.hpp"
#include "callan/error.hpp"
#include "callan/json_io.hpp"
#include "golden.hpp"

using namespace callan;

TEST_CASE("phi reproduces the four worked cases") {
  for (const auto& [name, tag] : {std::pair{"phi_A1", PhiCase::A1}, std::pair{"phi_A2", PhiCase::A2},
                                  std::pair{"phi_B1", PhiCase::B1}, std::pair{"phi_B2", PhiCase::B2}}) {
    CAPTURE(name);
    const auto in = parse_mbarred(read_golden(std::string(name) + ".in.json"));
    const auto expected = read_golden(std::string(name) + ".out.json");
    CHECK(phi_case(in) == tag);
    const auto out = phi(in);
    CHECK(to_json(out) == expected);
    CHECK(phi_inverse_case(out) == tag);
    CHECK(phi_inverse(out) == in);
  }
}

TEST_CASE("psi worked examples") {
  const auto in = parse_mbarred(read_golden("psi_b.in.json"));
  const auto mid = psi_b(in);
  CHECK(to_json(mid) == read_golden("psi_b.out.json"));
  CHECK(psi_b_inverse(mid) == in);

  const auto extra = parse_psi_intermediate(read_golden("psi_r_extra.in.json"));
  CHECK(psi_r_case(extra) == PsiRedCase::extra);
  CHECK(to_json(psi_r(extra)) == read_golden("psi_r_extra.out.json"));
  CHECK(psi_r_inverse(psi_r(extra)) == extra);

  const auto ordinary = parse_psi_intermediate(read_golden("psi_r_ordinary.in.json"));
  CHECK(psi_r_case(ordinary) == PsiRedCase::ordinary);
  CHECK(to_json(psi_r(ordinary)) == read_golden("psi_r_ordinary.out.json"));
  CHECK(psi_r_inverse(psi_r(ordinary)) == ordinary);

  const auto full = psi(parse_mbarred(read_golden("psi.in.json")));
  CHECK(to_json(full) == read_golden("psi.out.json"));
  CHECK(psi_inverse(full) == parse_mbarred(read_golden("psi.in.json")));
}

TEST_CASE("maps reject inputs outside their domains") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::unsupported;
  };
  // star-only extra red block: not in the phi domain
  const auto phi_out = parse_mbarred(read_golden("phi_A1.out.json"));
  CHECK_FALSE(in_phi_domain(phi_out));
  CHECK(code([&] { phi(phi_out); }) == ErrorCode::domain);
  const auto phi_in = parse_mbarred(read_golden("phi_A1.in.json"));
  CHECK_FALSE(in_phi_codomain(phi_in));
  CHECK(code([&] { phi_inverse(phi_in); }) == ErrorCode::domain);
  CHECK_FALSE(in_psi_domain(phi_in));
  CHECK(code([&] { psi(phi_in); }) == ErrorCode::domain);
  // psi lands in m >= 1, so an m = 0 sequence has no preimage
  const MBarredSequence bare{0, 0, 0, {Bar{Color::red, 0}, CallanPair{{}, {}, true}}};
  CHECK(code([&] { psi_inverse(bare); }) == ErrorCode::domain);
  CHECK(code([&] { relabel_max_min(bare); }) == ErrorCode::domain);
}

TEST_CASE("phi, psi and relabel are bijections on small sets") {
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; k + m <= 4; ++k)
      for (int n = 1; k + n + m <= 4; ++n) {
        std::set<std::string> images;
        std::size_t domain = 0, codomain = 0;
        for (const auto& s : enumerate_mbarred(k, n, m)) {
          if (in_phi_domain(s)) {
            ++domain;
            const auto t = phi(s);
            CHECK(in_phi_codomain(t));
            CHECK(phi_inverse(t) == s);
            images.insert(canonical_key(t));
          }
        }
        for (const auto& t : enumerate_mbarred(k + 1, n - 1, m)) codomain += in_phi_codomain(t);
        CHECK(images.size() == domain);
        CHECK(domain == codomain);
      }
  for (const auto& s : enumerate_mbarred(2, 2, 1)) {
    if (in_psi_domain(s)) {
      const auto t = psi(s);
      CHECK(t.m == 2);
      CHECK(psi_inverse(t) == s);
    }
    if (classify(s) != Cell::red_star_nonempty && (has_barred_singleton(s, 2) || has_barred_singleton(s, 3)))
      CHECK(relabel_max_min(relabel_max_min(s)) == s);
  }
}
