#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "verlag/pcgroup.hpp"
#include "verlag/presentations.hpp"
#include "verlag/transfer.hpp"

namespace verlag {

// The data-parallel kernels (verification sweep, per-group audit, trace
// congruence scan) run either as a plain serial loop or OpenMP-parallel.
// The serial path is the reference implementation; tests assert that both
// produce identical results and the benchmark tool compares their timings.
enum class ExecMode { serial, parallel };

// Thread budget for parallel kernels: VERLAG_THREADS when set, otherwise the
// machine parallelism reported by OpenMP (1 without OpenMP).
int effective_threads();

struct Disagreement {
  MaxClassPresentation pres;
  Multiplet expected;  // closed form
  Multiplet got;       // oracle
};

struct SkippedCase {
  MaxClassPresentation pres;
  std::string reason;
};

struct RunReport {
  std::int64_t cases_run = 0;
  std::int64_t agreements = 0;
  std::vector<Disagreement> disagreements;
  std::vector<SkippedCase> skipped;  // presentations that did not build
  std::chrono::milliseconds elapsed{0};
};

// Case list for `verify`: p = 2 sweeps the D/Q/S families up to m_max; odd p
// sweeps all k = 0 exponent pairs (family tag "k0") for 2 <= m <= m_max.
// Throws Error(OutOfOracleScope) when the requested scope exceeds the oracle
// limits.
std::vector<MaxClassPresentation> sweep_cases(int p, int m_max,
                                              const std::vector<std::string>& families);

// Closed-form vs. oracle equivalence sweep.
RunReport run_sweep(const std::vector<MaxClassPresentation>& cases, ExecMode mode);

struct AuditReport {
  std::int64_t transversal_checks = 0;
  std::int64_t welldef_checks = 0;
  std::int64_t homomorphism_checks = 0;
  std::int64_t noninjectivity_checks = 0;
  std::int64_t failures = 0;
  std::vector<std::string> messages;
};

// Oracle soundness audit for one built group: transversal independence
// (exhaustive over h), coset well-definedness (exhaustive over gamma_2(G)
// representatives), sampled homomorphism checks, and the non-injectivity
// bound (every definitional kernel has at least p cosets).
AuditReport audit_group(const MaxClassGroup& built, ExecMode mode, int hom_samples = 500);

// Exhaustive third-power trace congruence scan for a built 3-group: for
// every maximal subgroup N, every g in N and h outside N, the quotient of
// g^{S_3(h)} by g^3 [g,h]^3 [[g,h],h] must lie in gamma_2(N).  Returns the
// number of violating pairs (0 on a sound engine).
std::int64_t trace_congruence_violations(const MaxClassGroup& built, ExecMode mode);

}  // namespace verlag
