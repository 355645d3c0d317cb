#include "verlag/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace verlag {

int effective_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("VERLAG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<int>(std::min<long>(v, 1024));
  }
  return n;
}

namespace {

std::int64_t int_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<MaxClassPresentation> sweep_cases(int p, int m_max,
                                              const std::vector<std::string>& families) {
  if (!is_prime(p)) throw Error(Errc::OutOfOracleScope, "p must be prime");
  std::vector<std::string> fams = families;
  if (fams.empty()) {
    if (p == 2)
      fams = {"D", "Q", "S"};
    else
      fams = {"k0"};
  }
  std::vector<MaxClassPresentation> cases;
  if (p == 2) {
    if (m_max > 10)
      throw Error(Errc::OutOfOracleScope, "p = 2 oracle scope is m <= 10");
    for (const auto& fam : fams) {
      int w, z, m_min;
      if (fam == "D" || fam == "d") {
        w = 0; z = 0; m_min = 3;
      } else if (fam == "Q" || fam == "q") {
        w = 0; z = 1; m_min = 3;
      } else if (fam == "S" || fam == "s") {
        w = 1; z = 0; m_min = 4;
      } else {
        throw Error(Errc::OutOfOracleScope, "unknown p = 2 family '" + fam + "'");
      }
      for (int m = m_min; m <= m_max; ++m)
        cases.push_back(validate_max(2, m, 0, {}, w, z).expect());
    }
    return cases;
  }
  for (const auto& fam : fams)
    if (fam != "k0" && fam != "K0")
      throw Error(Errc::OutOfOracleScope, "odd p sweeps support only the k0 family");
  if (m_max >= 2 && int_pow(p, m_max) > PcGroup::kOrderCap)
    throw Error(Errc::OutOfOracleScope, "p^m_max exceeds the desk-scale cap");
  for (int m = 2; m <= m_max; ++m) {
    if (m == 2) {
      cases.push_back(validate_max(p, 2, 0, {}, 0, 0).expect());
      continue;
    }
    for (int w = 0; w < p; ++w)
      for (int z = 0; z < p; ++z) cases.push_back(validate_max(p, m, 0, {}, w, z).expect());
  }
  return cases;
}

RunReport run_sweep(const std::vector<MaxClassPresentation>& cases, ExecMode mode) {
  auto start = std::chrono::steady_clock::now();
  const int n = static_cast<int>(cases.size());

  struct CaseResult {
    bool built = false;
    std::string reason;
    Multiplet expected;
    Multiplet got;
  };
  std::vector<CaseResult> results(n);

  auto run_case = [&](int idx) {
    CaseResult& r = results[idx];
    const MaxClassPresentation& q = cases[idx];
    try {
      MaxClassGroup built = build_max_class_group(q);
      r.expected = transfer_multiplet(q);
      r.got = transfer_multiplet_by_oracle(built);
      r.built = true;
    } catch (const Error& e) {
      r.reason = e.what();
    }
  };

  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
    omp_set_num_threads(effective_threads());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) run_case(i);
#else
    for (int i = 0; i < n; ++i) run_case(i);
#endif
  } else {
    for (int i = 0; i < n; ++i) run_case(i);
  }

  RunReport report;
  for (int i = 0; i < n; ++i) {
    const CaseResult& r = results[i];
    if (!r.built) {
      report.skipped.push_back({cases[i], r.reason});
      continue;
    }
    ++report.cases_run;
    if (r.expected == r.got)
      ++report.agreements;
    else
      report.disagreements.push_back({cases[i], r.expected, r.got});
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

namespace {

// Flattened parallel-for over [0, n) with failure counting; the serial path
// is the reference implementation.
template <typename Fn>
std::int64_t count_failures(std::int64_t n, ExecMode mode, Fn&& body) {
  std::int64_t failures = 0;
  if (mode == ExecMode::parallel) {
#ifdef _OPENMP
    omp_set_num_threads(effective_threads());
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures)
    for (std::int64_t i = 0; i < n; ++i)
      if (!body(i)) ++failures;
    return failures;
#endif
  }
  for (std::int64_t i = 0; i < n; ++i)
    if (!body(i)) ++failures;
  return failures;
}

}  // namespace

AuditReport audit_group(const MaxClassGroup& built, ExecMode mode, int hom_samples) {
  AuditReport rep;
  const PcGroup& g = built.group();
  const int p = built.params().p;
  const std::int64_t order = g.order();

  // Coset representatives x^j y^l of gamma_2(G).
  std::vector<PcElement> reps;
  for (int j = 0; j < p; ++j)
    for (int ell = 0; ell < p; ++ell)
      reps.push_back(g.multiply(g.power(built.x(), j), g.power(built.y(), ell)));

  // Transversal independence: for every i and every coset inside M_i, all
  // h outside M_i give the same image.
  for (int i = 1; i <= p + 1; ++i) {
    const Subgroup& mi = built.maximal_subgroup(i);
    std::vector<PcElement> inner;
    for (const auto& r : reps)
      if (mi.contains(r)) inner.push_back(r);
    std::vector<PcElement> outside;
    for (std::int64_t idx = 0; idx < order; ++idx) {
      PcElement h = g.element_at(idx);
      if (!mi.contains(h)) outside.push_back(std::move(h));
    }
    std::vector<QuotientElement> baseline;
    for (const auto& r : inner) baseline.push_back(transfer_by_definition(built, i, r));
    std::int64_t n = static_cast<std::int64_t>(inner.size()) *
                     static_cast<std::int64_t>(outside.size());
    rep.transversal_checks += n;
    std::int64_t bad = count_failures(n, mode, [&](std::int64_t t) {
      std::size_t a = static_cast<std::size_t>(t / outside.size());
      std::size_t b = static_cast<std::size_t>(t % outside.size());
      return transfer_by_definition(built, i, inner[a], outside[b]) == baseline[a];
    });
    if (bad) rep.messages.push_back("transversal dependence at i = " + std::to_string(i));
    rep.failures += bad;
  }

  // Well-definedness: the image agrees on every representative of a coset.
  {
    const auto& gamma2 = built.commutator_subgroup().elements();
    for (int i = 1; i <= p + 1; ++i) {
      std::vector<QuotientElement> baseline;
      for (const auto& r : reps) baseline.push_back(transfer_by_definition(built, i, r));
      std::int64_t n = static_cast<std::int64_t>(reps.size()) *
                       static_cast<std::int64_t>(gamma2.size());
      rep.welldef_checks += n;
      std::int64_t bad = count_failures(n, mode, [&](std::int64_t t) {
        std::size_t a = static_cast<std::size_t>(t / gamma2.size());
        std::size_t b = static_cast<std::size_t>(t % gamma2.size());
        PcElement elem = g.multiply(reps[a], gamma2[b]);
        return transfer_by_definition(built, i, elem) == baseline[a];
      });
      if (bad) rep.messages.push_back("ill-defined transfer at i = " + std::to_string(i));
      rep.failures += bad;
    }
  }

  // Homomorphism property on sampled element pairs.
  {
    std::mt19937 rng(0xA5F00Du ^ static_cast<unsigned>(order));
    std::uniform_int_distribution<std::int64_t> pick(0, order - 1);
    std::vector<std::pair<PcElement, PcElement>> pairs;
    pairs.reserve(hom_samples);
    for (int t = 0; t < hom_samples; ++t)
      pairs.emplace_back(g.element_at(pick(rng)), g.element_at(pick(rng)));
    for (int i = 1; i <= p + 1; ++i) {
      const Subgroup& mod = built.maximal_derived(i);
      rep.homomorphism_checks += hom_samples;
      std::int64_t bad = count_failures(hom_samples, mode, [&](std::int64_t t) {
        const auto& [u, v] = pairs[static_cast<std::size_t>(t)];
        QuotientElement lhs = transfer_by_definition(built, i, g.multiply(u, v));
        QuotientElement img_u = transfer_by_definition(built, i, u);
        QuotientElement img_v = transfer_by_definition(built, i, v);
        QuotientElement rhs =
            make_coset(g.multiply(img_u.representative, img_v.representative), mod);
        return lhs == rhs;
      });
      if (bad) rep.messages.push_back("transfer not multiplicative at i = " + std::to_string(i));
      rep.failures += bad;
    }
  }

  // Non-injectivity: every definitional kernel contains at least p cosets.
  for (int size : oracle_kernel_sizes(built)) {
    ++rep.noninjectivity_checks;
    if (size < p) {
      ++rep.failures;
      rep.messages.push_back("kernel smaller than p");
    }
  }
  return rep;
}

std::int64_t trace_congruence_violations(const MaxClassGroup& built, ExecMode mode) {
  const PcGroup& g = built.group();
  if (built.params().p != 3)
    throw Error(Errc::OutOfTheoremScope, "trace congruence scan is a 3-group check");
  std::int64_t violations = 0;
  for (int i = 1; i <= 4; ++i) {
    const Subgroup& n_sub = built.maximal_subgroup(i);
    const Subgroup gamma2_n = derived_subgroup(n_sub);
    std::vector<PcElement> outside;
    for (std::int64_t idx = 0; idx < g.order(); ++idx) {
      PcElement h = g.element_at(idx);
      if (!n_sub.contains(h)) outside.push_back(std::move(h));
    }
    const auto& members = n_sub.elements();
    std::int64_t n = static_cast<std::int64_t>(members.size()) *
                     static_cast<std::int64_t>(outside.size());
    violations += count_failures(n, mode, [&](std::int64_t t) {
      const PcElement& u = members[static_cast<std::size_t>(t / outside.size())];
      const PcElement& h = outside[static_cast<std::size_t>(t % outside.size())];
      PcElement lhs = symbolic_trace_power(u, h, 3);
      PcElement c = g.commutator(u, h);
      PcElement rhs = g.multiply(g.multiply(g.power(u, 3), g.power(c, 3)), g.commutator(c, h));
      return gamma2_n.contains(g.multiply(g.inverse(rhs), lhs));
    });
  }
  return violations;
}

}  // namespace verlag
