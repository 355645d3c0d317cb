#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "verlag/pcgroup.hpp"

using namespace verlag;

namespace {

MaxClassGroup build(int p, int m, int w, int z) {
  return build_max_class_group(validate_max(p, m, 0, {}, w, z).expect());
}

std::int64_t element_order(const PcGroup& g, const PcElement& a) {
  PcElement cur = a;
  std::int64_t n = 1;
  while (!cur.is_identity()) {
    cur = g.multiply(cur, a);
    ++n;
  }
  return n;
}

std::vector<std::int64_t> series_orders(const PcGroup& g) {
  std::vector<std::int64_t> orders;
  for (const auto& term : lower_central_series(g)) orders.push_back(term.order());
  return orders;
}

}  // namespace

TEST_CASE("Q(8) builds with exactly one element of order 2") {
  MaxClassGroup q8 = build(2, 3, 0, 1);
  CHECK(q8.group().order() == 8);
  int involutions = 0;
  for (std::int64_t i = 0; i < 8; ++i) {
    PcElement a = q8.group().element_at(i);
    if (!a.is_identity() && element_order(q8.group(), a) == 2) ++involutions;
  }
  CHECK(involutions == 1);
}

TEST_CASE("degenerate abelian case is elementary abelian of exponent p") {
  MaxClassGroup g = build(3, 2, 0, 0);
  CHECK(g.group().order() == 9);
  for (std::int64_t i = 1; i < 9; ++i)
    CHECK(element_order(g.group(), g.group().element_at(i)) == 3);
  CHECK(series_orders(g.group()) == std::vector<std::int64_t>{9, 1});
}

TEST_CASE("lower central series orders") {
  CHECK(series_orders(build(3, 4, 0, 1).group()) == std::vector<std::int64_t>{81, 9, 3, 1});
  CHECK(series_orders(build(2, 3, 0, 0).group()) == std::vector<std::int64_t>{8, 2, 1});
  CHECK(series_orders(build(5, 4, 0, 0).group()) == std::vector<std::int64_t>{625, 25, 5, 1});
}

TEST_CASE("CF property: cyclic central factors of order p") {
  for (auto [p, m, w, z] : std::vector<std::array<int, 4>>{
           {2, 6, 0, 0}, {2, 5, 0, 1}, {2, 7, 1, 0}, {3, 5, 1, 2}, {5, 4, 2, 3}}) {
    MaxClassGroup g = build(p, m, w, z);
    auto orders = series_orders(g.group());
    REQUIRE(static_cast<int>(orders.size()) == m + 1);
    CHECK(orders[0] / orders[1] == p * p);
    for (std::size_t j = 1; j + 1 < orders.size(); ++j) CHECK(orders[j] / orders[j + 1] == p);
  }
}

TEST_CASE("multiply, inverse, power laws") {
  MaxClassGroup g = build(2, 3, 0, 0);  // D(8)
  const PcGroup& d8 = g.group();
  CHECK(d8.multiply(d8.identity(), g.x()) == g.x());
  CHECK(d8.power(g.x(), 2).is_identity());  // z = 0

  MaxClassGroup q = build(2, 3, 0, 1);  // Q(8)
  CHECK(q.group().power(q.x(), 2) == q.s(2));  // x^2 = s_{m-1}^z with z = 1

  CHECK_THROWS_AS((void)d8.multiply(g.x(), q.x()), Error);
}

TEST_CASE("associativity spot-check on random triples") {
  std::mt19937 rng(2024);
  for (auto [p, m, w, z] :
       std::vector<std::array<int, 4>>{{2, 6, 0, 1}, {3, 4, 1, 1}, {5, 3, 0, 1}}) {
    MaxClassGroup g = build(p, m, w, z);
    const PcGroup& grp = g.group();
    std::uniform_int_distribution<std::int64_t> pick(0, grp.order() - 1);
    for (int t = 0; t < 1000; ++t) {
      PcElement a = grp.element_at(pick(rng));
      PcElement b = grp.element_at(pick(rng));
      PcElement c = grp.element_at(pick(rng));
      CHECK(grp.multiply(grp.multiply(a, b), c) == grp.multiply(a, grp.multiply(b, c)));
    }
    for (int t = 0; t < 100; ++t) {
      PcElement a = grp.element_at(pick(rng));
      CHECK(grp.multiply(grp.inverse(a), a).is_identity());
    }
  }
}

TEST_CASE("commutators define the s_j chain") {
  MaxClassGroup g = build(2, 4, 0, 0);  // D(16)
  const PcGroup& grp = g.group();
  CHECK(grp.commutator(g.y(), g.x()) == g.s(2));
  CHECK(grp.commutator(g.s(2), g.x()) == g.s(3));
  CHECK(grp.commutator(g.x(), g.x()).is_identity());

  MaxClassGroup h = build(3, 5, 0, 0);
  CHECK(h.group().commutator(h.y(), h.x()) == h.s(2));
  CHECK(h.group().commutator(h.s(3), h.x()) == h.s(4));
}

TEST_CASE("maximal subgroups in the defined order") {
  MaxClassGroup d8 = build(2, 3, 0, 0);
  const auto& ms = d8.maximal_subgroups();
  REQUIRE(ms.size() == 3);
  for (const auto& mi : ms) CHECK(mi.order() == 4);
  // M_1 = <y> is cyclic: y generates all four elements.
  CHECK(ms[0].contains(d8.y()));
  CHECK(ms[0].contains(d8.group().power(d8.y(), 2)));
  CHECK(!ms[0].contains(d8.x()));
  CHECK(ms[1].contains(d8.x()));
  CHECK(ms[2].contains(d8.group().multiply(d8.x(), d8.y())));

  MaxClassGroup ab = build(3, 2, 0, 0);
  for (const auto& mi : ab.maximal_subgroups()) CHECK(mi.order() == 3);
  CHECK(ab.maximal_subgroups().size() == 4);

  MaxClassGroup g34 = build(3, 4, 0, 0);
  CHECK(g34.maximal_subgroups().size() == 4);
  for (const auto& mi : g34.maximal_subgroups()) CHECK(mi.order() == 27);
}

TEST_CASE("derived subgroups match the closed form") {
  MaxClassGroup d16 = build(2, 4, 0, 0);
  CHECK(d16.maximal_derived(1).trivial());  // k = 0
  auto series = lower_central_series(d16.group());
  CHECK(d16.maximal_derived(2) == series[2]);  // gamma_3(G), order 2
  CHECK(d16.maximal_derived(2).order() == 2);

  MaxClassGroup q8 = build(2, 3, 0, 1);
  CHECK(q8.maximal_derived(3).trivial());  // gamma_3 = 1 at m = 3

  for (auto [p, m, w, z] :
       std::vector<std::array<int, 4>>{{3, 4, 0, 1}, {3, 5, 2, 0}, {5, 4, 0, 0}, {2, 6, 0, 1}}) {
    MaxClassGroup g = build(p, m, w, z);
    auto chain = lower_central_series(g.group());
    CHECK(g.maximal_derived(1).trivial());
    for (int i = 2; i <= p + 1; ++i) CHECK(g.maximal_derived(i) == chain[2]);
  }
}

TEST_CASE("symbolic trace power") {
  MaxClassGroup d8 = build(2, 3, 0, 0);
  const PcGroup& grp = d8.group();
  // h = identity collapses the trace to the p-th power.
  CHECK(symbolic_trace_power(d8.y(), grp.identity(), 2) == grp.power(d8.y(), 2));
  // V_1(y) = y^{1+x} = y^2 s_2 = identity in D(8).
  CHECK(symbolic_trace_power(d8.y(), d8.x(), 2).is_identity());

  MaxClassGroup q8 = build(2, 3, 0, 1);
  CHECK(symbolic_trace_power(q8.y(), q8.x(), 2).is_identity());
}

TEST_CASE("binomial column-sum identity") {
  auto binom = [](int n, int k) {
    long long r = 1;
    if (k < 0 || k > n) return 0LL;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int s = 0; s <= 12; ++s)
    for (int n = 0; n <= 12; ++n) {
      long long sum = 0;
      for (int l = 0; l <= n; ++l) sum += binom(s + l, s);
      CHECK(sum == binom(s + n + 1, s + 1));
    }
}

TEST_CASE("oracle scope errors") {
  CHECK_THROWS_WITH_AS((void)build_max_class_group(validate_max(3, 5, 1, {1}, 0, 0).expect()),
                       doctest::Contains("OutOfOracleScope"), Error);
  MaxClassPresentation too_big{7, 7, 0, {}, 0, 0};  // 7^7 > 10^5
  CHECK_THROWS_WITH_AS((void)build_max_class_group(too_big), doctest::Contains("OutOfOracleScope"),
                       Error);
  MaxClassPresentation invalid{2, 3, 0, {}, 1, 0};  // S(8) does not validate
  CHECK_THROWS_AS((void)build_max_class_group(invalid), Error);
}

TEST_CASE("consistency certificate over the odd-p sweep scope") {
  for (int p : {3, 5}) {
    int m_cap = p == 3 ? 6 : 4;
    for (int m = 2; m <= m_cap; ++m)
      for (int w = 0; w < (m == 2 ? 1 : p); ++w)
        for (int z = 0; z < (m == 2 ? 1 : p); ++z) {
          MaxClassGroup g = build(p, m, w, z);
          CHECK(g.group().closure_count() == g.group().order());
        }
  }
}

TEST_CASE("element index round-trip") {
  MaxClassGroup g = build(3, 4, 1, 2);
  const PcGroup& grp = g.group();
  for (std::int64_t i = 0; i < grp.order(); ++i)
    CHECK(grp.index_of(grp.element_at(i)) == i);
}
