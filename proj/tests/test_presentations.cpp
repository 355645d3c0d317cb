#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlag/json_io.hpp"
#include "verlag/presentations.hpp"

using namespace verlag;

TEST_CASE("validate_max accepts the named examples") {
  auto q8 = validate_max(2, 3, 0, {}, 0, 1);
  REQUIRE(q8.ok());
  CHECK(q8.value().two_family() == MaxClassPresentation::TwoFamily::quaternion);
  CHECK(family_name(q8.value()) == "Q(8) = G_0^(3)(0,1)");

  auto bad_k = validate_max(3, 3, 1, {1}, 0, 0);
  REQUIRE(!bad_k.ok());
  CHECK(bad_k.error().code == Errc::KOutOfRange);

  auto bound = validate_max(5, 6, 2, {1, 0}, 0, 0);
  REQUIRE(bound.ok());
  CHECK(bound.value().k == 2);
}

TEST_CASE("validate_max rejects each malformed input with its own code") {
  CHECK(validate_max(4, 3, 0, {}, 0, 0).error().code == Errc::PrimeRequired);
  CHECK(validate_max(3, 1, 0, {}, 0, 0).error().code == Errc::ExponentOutOfRange);
  CHECK(validate_max(3, 5, 1, {0}, 0, 0).error().code == Errc::ALeadingZero);
  CHECK(validate_max(3, 5, 1, {}, 0, 0).error().code == Errc::ALeadingZero);
  CHECK(validate_max(3, 4, 0, {}, 3, 0).error().code == Errc::ExponentOutOfRange);
  CHECK(validate_max(3, 4, 0, {}, 0, -1).error().code == Errc::ExponentOutOfRange);
  CHECK(validate_max(2, 3, 0, {}, 1, 0).error().code == Errc::InvalidTwoFamily);  // S(8)
  CHECK(validate_max(2, 4, 0, {}, 1, 1).error().code == Errc::InvalidTwoFamily);
  CHECK(validate_max(5, 6, 3, {1, 0, 0}, 0, 0).error().code == Errc::KOutOfRange);
  CHECK(validate_max(3, 7, 2, {1, 0}, 0, 0).error().code == Errc::KOutOfRange);  // k <= p-2
  CHECK(validate_max(3, 2, 0, {}, 1, 0).error().code == Errc::ExponentOutOfRange);
}

TEST_CASE("validate_max round-trips its own fields") {
  for (int p : {2, 3, 5}) {
    for (int m = 2; m <= 7; ++m) {
      for (int w = 0; w < p; ++w) {
        for (int z = 0; z < p; ++z) {
          auto v = validate_max(p, m, 0, {}, w, z);
          if (!v.ok()) continue;
          const auto& q = v.value();
          auto again = validate_max(q.p, q.m, q.k, q.a, q.w, q.z);
          REQUIRE(again.ok());
          CHECK(again.value() == q);
        }
      }
    }
  }
}

TEST_CASE("every valid 2-group presentation is D, Q, S, or abelian") {
  int tagged = 0;
  for (int m = 2; m <= 10; ++m)
    for (int w = 0; w <= 1; ++w)
      for (int z = 0; z <= 1; ++z) {
        auto v = validate_max(2, m, 0, {}, w, z);
        if (!v.ok()) continue;
        ++tagged;
        auto fam = v.value().two_family();
        if (m == 2)
          CHECK(fam == MaxClassPresentation::TwoFamily::none);
        else
          CHECK(fam != MaxClassPresentation::TwoFamily::none);
      }
  // abelian + 8*D + 8*Q + 7*S
  CHECK(tagged == 24);
}

TEST_CASE("validate_low accepts the named examples and derives invariants") {
  auto a = validate_low(6, 8, 1, 0, 0, 0, 0);
  REQUIRE(a.ok());
  CHECK(a.value().e() == 4);
  CHECK(a.value().k() == 0);

  auto b = validate_low(5, 9, 0, 0, 0, 1, 0);
  REQUIRE(!b.ok());
  CHECK(b.error().code == Errc::IndexRangeViolation);

  auto c = validate_low(7, 10, 0, 1, 0, 0, 0);
  REQUIRE(c.ok());
  CHECK(c.value().e() == 5);
  CHECK(c.value().coclass() == 4);

  CHECK(validate_low(6, 8, 2, 0, 0, 0, 0).error().code == Errc::ExponentOutOfRange);
  CHECK(validate_low(3, 4, 0, 0, 0, 0, 0).error().code == Errc::IndexRangeViolation);
}

TEST_CASE("derived invariants of validated low-class presentations") {
  for (int m = 4; m <= 9; ++m)
    for (int n = m + 1; n <= 2 * m - 3; ++n) {
      auto v = validate_low(m, n, 1, -1, 0, 1, -1);
      REQUIRE(v.ok());
      const auto& q = v.value();
      CHECK(q.e() == n - m + 2);
      CHECK(q.coclass() == n - m + 1);
      CHECK(q.nilpotency_class() == m - 1);
      CHECK(q.e() == q.coclass() + 1);
      CHECK(q.e() >= 3);
      CHECK(q.e() <= m - 1);
      CHECK(q.k() == 1);
    }
}

TEST_CASE("family names") {
  CHECK(family_name(validate_max(2, 4, 0, {}, 1, 0).value()) == "S(16) = G_0^(4)(1,0)");
  CHECK(family_name(validate_max(3, 2, 0, {}, 0, 0).value()) == "C(3) x C(3)");
  CHECK(family_name(validate_low(4, 5, 1, 1, -1, 1, 0).value()) == "G_0^(4,5)(1,1,-1,1)");
  CHECK(family_name(validate_max(3, 5, 1, {1}, 0, 0).value()) == "G_1^(5)(0,0)");
  CHECK(family_name(validate_low(7, 9, 0, -1, 0, 1, -1).value()) == "G_-1^(7,9)(0,-1,0,1)");
}

TEST_CASE("isoclinism stem labels") {
  CHECK(isoclinism_label(Presentation{validate_max(3, 3, 0, {}, 0, 1).value()}) ==
        std::optional<std::string>("Phi_2(21)"));
  CHECK(isoclinism_label(Presentation{validate_low(4, 5, 0, 0, 0, 0, 0).value()}) ==
        std::optional<std::string>("Phi_6(1^5)"));
  CHECK(!isoclinism_label(Presentation{validate_max(2, 3, 0, {}, 0, 0).value()}).has_value());
}

TEST_CASE("presentation JSON round-trip") {
  auto max = Presentation{validate_max(5, 6, 2, {1, 0}, 3, 4).value()};
  auto low = Presentation{validate_low(7, 10, -1, 1, 0, 1, 1).value()};
  for (const auto& pres : {max, low}) {
    auto back = parse_presentation(to_json(pres));
    REQUIRE(back.ok());
    CHECK(back.value() == pres);
  }
}

TEST_CASE("presentation JSON defaults and errors") {
  auto abelian = parse_presentation_text(R"({"kind":"max","p":3,"m":2})");
  REQUIRE(abelian.ok());
  CHECK(std::get<MaxClassPresentation>(abelian.value()).abelian());

  CHECK(!parse_presentation_text("not json").ok());
  CHECK(!parse_presentation_text(R"({"kind":"ring"})").ok());
  CHECK(!parse_presentation_text(R"({"kind":"max","p":2,"m":3,"w":"x"})").ok());
  auto invalid = parse_presentation_text(R"({"kind":"max","p":9,"m":3})");
  REQUIRE(!invalid.ok());
  CHECK(invalid.error().code == Errc::PrimeRequired);
}
