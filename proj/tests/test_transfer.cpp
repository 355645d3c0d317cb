#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verlag/transfer.hpp"

using namespace verlag;

namespace {

MaxClassGroup build(int p, int m, int w, int z) {
  return build_max_class_group(validate_max(p, m, 0, {}, w, z).expect());
}

LowClassPresentation low(int m, int n, int a, int b, int c, int d, int r) {
  return validate_low(m, n, a, b, c, d, r).expect();
}

}  // namespace

TEST_CASE("definitional transfer on the small 2-groups") {
  MaxClassGroup d8 = build(2, 3, 0, 0);
  CHECK(transfer_by_definition(d8, 1, d8.y()).trivial());

  MaxClassGroup q8 = build(2, 3, 0, 1);
  QuotientElement v1x = transfer_by_definition(q8, 1, q8.x());
  CHECK(!v1x.trivial());
  CHECK(v1x == make_coset(q8.s(2), q8.maximal_derived(1)));

  MaxClassGroup ab = build(3, 2, 0, 0);
  for (int i = 1; i <= 4; ++i)
    for (std::int64_t t = 0; t < ab.group().order(); ++t)
      CHECK(transfer_by_definition(ab, i, ab.group().element_at(t)).trivial());

  CHECK_THROWS_AS((void)transfer_by_definition(d8, 4, d8.x()), Error);
}

TEST_CASE("transversal independence and well-definedness at desk scale") {
  MaxClassGroup g = build(3, 4, 0, 1);
  const PcGroup& grp = g.group();
  for (int i = 1; i <= 4; ++i) {
    const Subgroup& mi = g.maximal_subgroup(i);
    for (int j = 0; j < 3; ++j)
      for (int ell = 0; ell < 3; ++ell) {
        PcElement rep = grp.multiply(grp.power(g.x(), j), grp.power(g.y(), ell));
        QuotientElement base = transfer_by_definition(g, i, rep);
        if (mi.contains(rep)) {
          for (std::int64_t t = 0; t < grp.order(); ++t) {
            PcElement h = grp.element_at(t);
            if (!mi.contains(h)) CHECK(transfer_by_definition(g, i, rep, h) == base);
          }
        }
        for (const auto& u : g.commutator_subgroup().elements())
          CHECK(transfer_by_definition(g, i, grp.multiply(rep, u)) == base);
      }
  }
}

TEST_CASE("transfer is a homomorphism into the quotient") {
  MaxClassGroup g = build(2, 5, 0, 1);
  const PcGroup& grp = g.group();
  for (int i = 1; i <= 3; ++i) {
    const Subgroup& mod = g.maximal_derived(i);
    for (std::int64_t a = 0; a < grp.order(); a += 3)
      for (std::int64_t b = 0; b < grp.order(); b += 7) {
        PcElement u = grp.element_at(a), v = grp.element_at(b);
        QuotientElement lhs = transfer_by_definition(g, i, grp.multiply(u, v));
        QuotientElement rhs =
            make_coset(grp.multiply(transfer_by_definition(g, i, u).representative,
                                    transfer_by_definition(g, i, v).representative),
                       mod);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("closed-form images, maximal class") {
  auto q56 = validate_max(5, 6, 0, {}, 0, 3).expect();
  SymbolicImage img = transfer_image_closed_form(q56, 1, 1, 0);
  REQUIRE(img.factors.size() == 1);
  CHECK(img.factors[0] == std::pair<std::string, int>{"s_5", 3});
  CHECK(img.modulus == "1");

  auto s16 = validate_max(2, 4, 0, {}, 1, 0).expect();
  SymbolicImage irregular = transfer_image_closed_form(s16, 2, 0, 1);
  REQUIRE(irregular.factors.size() == 1);
  CHECK(irregular.factors[0] == std::pair<std::string, int>{"s_2", -1});
  CHECK(irregular.modulus == "gamma_3(G)");
  CHECK(irregular.str() == "s_2^-1 mod gamma_3(G)");

  auto k1 = validate_max(3, 5, 1, {2}, 0, 0).expect();
  SymbolicImage collapsed = transfer_image_closed_form(k1, 1, 1, 1);
  CHECK(collapsed.factors.empty());
  CHECK(collapsed.modulus == "gamma_4(G)");

  auto abelian = validate_max(3, 2, 0, {}, 0, 0).expect();
  CHECK(transfer_image_closed_form(abelian, 2, 1, 1).factors.empty());

  CHECK_THROWS_AS((void)transfer_image_closed_form(q56, 8, 0, 0), Error);
  CHECK_THROWS_AS((void)transfer_image_closed_form(q56, 1, 5, 0), Error);
}

TEST_CASE("closed-form images, low class") {
  auto q = low(6, 8, 1, 0, 0, 0, 0);
  SymbolicImage img = transfer_image_closed_form(q, 2, 1, 0);
  REQUIRE(img.factors.size() == 1);
  CHECK(img.factors[0] == std::pair<std::string, int>{"sigma_5", 1});  // sigma_{m-1}^alpha
  CHECK(img.modulus == "gamma_2(M_2)");

  auto qk1 = low(7, 9, 0, 1, -1, 1, 1);
  SymbolicImage img1 = transfer_image_closed_form(qk1, 1, 0, 1);
  // sigma_{m-2}^{rho beta} sigma_{m-1}^{gamma - rho beta} tau_e^{delta}
  REQUIRE(img1.factors.size() == 3);
  CHECK(img1.factors[0] == std::pair<std::string, int>{"sigma_5", 1});
  CHECK(img1.factors[1] == std::pair<std::string, int>{"sigma_6", -2});
  CHECK(img1.factors[2] == std::pair<std::string, int>{"tau_4", 1});

  SymbolicImage img34 = transfer_image_closed_form(q, 3, 1, -1);
  REQUIRE(img34.factors.size() == 2);
  CHECK(img34.factors[0] == std::pair<std::string, int>{"sigma_3", -1});
  CHECK(img34.factors[1] == std::pair<std::string, int>{"tau_3", 1});

  CHECK_THROWS_AS((void)transfer_image_closed_form(low(4, 5, 0, 0, 0, 0, 1), 1, 0, 0), Error);
}

TEST_CASE("closed-form kernels, maximal class") {
  // Odd p, Taussky-style case list.
  CHECK(transfer_kernel_closed_form(validate_max(3, 4, 0, {}, 1, 0).expect(), 1) == 2);
  CHECK(transfer_kernel_closed_form(validate_max(3, 5, 0, {}, 0, 0).expect(), 1) == 0);
  CHECK(transfer_kernel_closed_form(validate_max(3, 5, 0, {}, 0, 1).expect(), 1) == 1);
  CHECK(transfer_kernel_closed_form(validate_max(5, 4, 0, {}, 3, 0).expect(), 1) == 2);
  CHECK(transfer_kernel_closed_form(validate_max(3, 5, 1, {1}, 0, 1).expect(), 1) == 0);
  // The generalized case w not in {0,1} still forces j = 0.
  CHECK(transfer_kernel_closed_form(validate_max(5, 4, 0, {}, 0, 4).expect(), 1) == 1);
  // p = 2 irregular list.
  CHECK(transfer_kernel_closed_form(validate_max(2, 5, 0, {}, 1, 0).expect(), 3) == 2);
  CHECK(transfer_kernel_closed_form(validate_max(2, 3, 0, {}, 0, 1).expect(), 2) == 2);
  CHECK(transfer_kernel_closed_form(validate_max(2, 4, 0, {}, 0, 1).expect(), 2) == 3);
}

TEST_CASE("closed-form multiplets, maximal class") {
  CHECK(transfer_multiplet(validate_max(2, 4, 0, {}, 0, 0).expect()) == Multiplet{{0, 3, 2}});
  CHECK(transfer_multiplet(validate_max(5, 3, 0, {}, 0, 1).expect()) ==
        Multiplet{{1, 1, 1, 1, 1, 1}});
  CHECK(transfer_multiplet(validate_max(3, 2, 0, {}, 0, 0).expect()) == Multiplet{{0, 0, 0, 0}});
  CHECK(transfer_multiplet(validate_max(3, 2, 0, {}, 0, 0).expect()).nu() == 4);
  CHECK(transfer_multiplet(validate_max(3, 6, 0, {}, 2, 0).expect()) == Multiplet{{2, 0, 0, 0}});
  CHECK(transfer_multiplet(validate_max(3, 5, 1, {1}, 0, 2).expect()) ==
        Multiplet{{0, 0, 0, 0}});
}

TEST_CASE("oracle multiplets for the named groups") {
  CHECK(transfer_multiplet_by_oracle(build(2, 4, 0, 1)) == Multiplet{{1, 3, 2}});  // Q(16)
  CHECK(transfer_multiplet_by_oracle(build(2, 3, 0, 0)) == Multiplet{{0, 3, 2}});  // D(8)
  Multiplet m34 = transfer_multiplet_by_oracle(build(3, 4, 0, 1));
  CHECK(m34 == Multiplet{{1, 0, 0, 0}});
  CHECK(m34.nu() == 3);
}

TEST_CASE("oracle kernels are never trivial") {
  for (auto [p, m, w, z] :
       std::vector<std::array<int, 4>>{{2, 3, 0, 1}, {2, 6, 1, 0}, {3, 3, 0, 2}, {5, 3, 0, 1}}) {
    MaxClassGroup g = build_max_class_group(validate_max(p, m, 0, {}, w, z).expect());
    for (int size : oracle_kernel_sizes(g)) CHECK(size >= p);
  }
}

TEST_CASE("low-class closed-form kernels and the f dispatch") {
  auto base = low(6, 8, 1, 0, 1, 0, 0);
  CHECK(transfer_kernel_closed_form(base, 1) == 4);  // f(1,1)
  CHECK(transfer_kernel_closed_form(base, 2) == 0);  // f(0,0)
  CHECK(transfer_kernel_closed_form(base, 3) == 4);
  CHECK(transfer_kernel_closed_form(base, 4) == 3);
  CHECK(transfer_multiplet(base) == Multiplet{{4, 0, 4, 3}});
  // k = 1 dispatches to f(delta, beta).
  CHECK(transfer_kernel_closed_form(low(7, 9, 1, -1, 0, 1, 1), 1) == 3);
  CHECK_THROWS_AS((void)transfer_kernel_closed_form(low(5, 7, 0, 0, 0, 0, 1), 1), Error);
  CHECK_THROWS_AS((void)transfer_kernel_closed_form(low(4, 5, 0, 0, 0, 0, 0), 1), Error);
}

TEST_CASE("low-class kernel solver examples") {
  CHECK(kernel_solver_low_class(low(6, 8, 0, 0, 0, 0, 0), 2) == 0);
  CHECK(kernel_solver_low_class(low(6, 8, 0, 1, 0, 1, 0), 2) == 4);
  CHECK(kernel_solver_low_class(low(6, 8, 1, 0, -1, 0, 0), 1) == 3);
  CHECK(kernel_solver_low_class(low(7, 10, 0, -1, 0, 1, 0), 2) == 3);
}

TEST_CASE("solver agrees with the closed form on one full shell") {
  int exps[3] = {-1, 0, 1};
  for (int a : exps)
    for (int b : exps)
      for (int c : exps)
        for (int d : exps)
          for (int r : exps) {
            auto q = low(6, 8, a, b, c, d, r);
            for (int i = 1; i <= 4; ++i)
              CHECK(kernel_solver_low_class(q, i) == transfer_kernel_closed_form(q, i));
          }
}

TEST_CASE("taussky conditions and the coarse type") {
  Multiplet fixed{{1, 2, 3}};
  CHECK(taussky_condition(fixed, 1) == Taussky::A);
  Multiplet d{{0, 3, 2}};
  CHECK(taussky_condition(d, 1) == Taussky::A);
  CHECK(taussky_condition(d, 2) == Taussky::B);
  CHECK(coarse_type(d) == "(0BB)");
  CHECK(coarse_type(Multiplet{{1, 3, 2}}) == "(1BB)");
  CHECK(coarse_type(Multiplet{{2, 3, 2}}) == "(BBB)");
  CHECK(coarse_type(fixed) == "(123)");
  CHECK_THROWS_AS((void)taussky_condition(d, 0), Error);
}
