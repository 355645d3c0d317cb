#pragma once

#include <optional>
#include <string>

#include "verlag/presentations.hpp"
#include "verlag/transfer.hpp"

namespace verlag {

enum class NodeKind { terminal, internal };
enum class ParityClass { terminal, internal, not_applicable };

struct TreeInvariants {
  int e = 0;
  int coclass = 0;
  int nilpotency_class = 0;
  friend bool operator==(const TreeInvariants&, const TreeInvariants&) = default;
};

Validated<TreeInvariants> invariants_from_order(int m, int n);

// Kernel-code function of two relational exponents in {-1, 0, 1}.
int f_kernel(int lambda, int mu);

// Immediate predecessor of a terminal group (rho = +-1): exponent system
// (rho*delta, beta, rho*beta, delta, 0) with nilpotency index m-1 and order
// exponent n-1, same invariant e.
Validated<LowClassPresentation> predecessor(const LowClassPresentation& pres);

// Tabulated section-d multiplets for terminal resp. internal (d*) nodes.
// Throws Error(NotInSectionD) when the exponent tuple is not a table row.
Multiplet section_d_type(int alpha, int beta, int gamma, int delta, NodeKind kind);
// "d.19" / "d*.25" style label when the tuple is tabulated.
std::optional<std::string> section_d_label(int alpha, int beta, int gamma, int delta,
                                           NodeKind kind);

// Parity dichotomy for section-d groups: terminal iff m >= 6 and e >= 4 are
// both even, internal iff m >= 7 and e >= 5 are both odd.
ParityClass parity_classification(int m, int e);

const char* node_kind_name(NodeKind kind);
const char* parity_class_name(ParityClass c);

}  // namespace verlag
