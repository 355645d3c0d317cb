#include "verlag/tree.hpp"

#include <array>

namespace verlag {

Validated<TreeInvariants> invariants_from_order(int m, int n) {
  if (!(4 <= m && m < n && n <= 2 * m - 3))
    return Validated<TreeInvariants>(Errc::IndexRangeViolation,
                                     "(m, n) violates 4 <= m < n <= 2m-3");
  return Validated<TreeInvariants>(TreeInvariants{n - m + 2, n - m + 1, m - 1});
}

int f_kernel(int lambda, int mu) {
  if (lambda < -1 || lambda > 1 || mu < -1 || mu > 1)
    throw Error(Errc::ExponentOutOfRange, "f is defined on {-1, 0, 1}^2");
  if (lambda == 0 && mu == 0) return 0;
  if (mu == 0) return 1;
  if (lambda == 0) return 2;
  return lambda == -mu ? 3 : 4;
}

Validated<LowClassPresentation> predecessor(const LowClassPresentation& q) {
  using V = Validated<LowClassPresentation>;
  if (q.rho == 0) return V(Errc::NotTerminal, "predecessor requires rho = +-1");
  if (q.m < 6 || q.e() < 4)
    return V(Errc::OutOfTheoremScope, "predecessor requires m >= 6 and e >= 4");
  return validate_low(q.m - 1, q.n - 1, q.rho * q.delta, q.beta, q.rho * q.beta, q.delta, 0);
}

namespace {

struct SectionDRow {
  std::array<int, 4> exps;
  std::array<int, 4> kappa;
  const char* label;
};

constexpr SectionDRow kTerminalRows[] = {
    {{1, 0, 1, 0}, {4, 0, 4, 3}, "d.19"},
    {{1, 0, -1, 0}, {3, 0, 4, 3}, "d.19"},
    {{1, 0, 0, 0}, {1, 0, 4, 3}, "d.23"},
    {{0, 0, 1, 0}, {2, 0, 4, 3}, "d.25"},
    {{0, 0, -1, 0}, {2, 0, 4, 3}, "d.25"},
};

constexpr SectionDRow kInternalRows[] = {
    {{0, 1, 0, 1}, {0, 4, 4, 3}, "d*.19"},
    {{0, -1, 0, 1}, {0, 3, 4, 3}, "d*.19"},
    {{0, 0, 0, 1}, {0, 2, 4, 3}, "d*.23"},
    {{0, 1, 0, 0}, {0, 1, 4, 3}, "d*.25"},
    {{0, -1, 0, 0}, {0, 1, 4, 3}, "d*.25"},
};

const SectionDRow* find_row(int alpha, int beta, int gamma, int delta, NodeKind kind) {
  std::array<int, 4> key{alpha, beta, gamma, delta};
  const auto& rows = kind == NodeKind::terminal ? kTerminalRows : kInternalRows;
  for (const auto& row : rows)
    if (row.exps == key) return &row;
  return nullptr;
}

}  // namespace

Multiplet section_d_type(int alpha, int beta, int gamma, int delta, NodeKind kind) {
  const SectionDRow* row = find_row(alpha, beta, gamma, delta, kind);
  if (row == nullptr)
    throw Error(Errc::NotInSectionD, "exponent tuple is not a section-d table row");
  return Multiplet{{row->kappa[0], row->kappa[1], row->kappa[2], row->kappa[3]}};
}

std::optional<std::string> section_d_label(int alpha, int beta, int gamma, int delta,
                                           NodeKind kind) {
  const SectionDRow* row = find_row(alpha, beta, gamma, delta, kind);
  if (row == nullptr) return std::nullopt;
  return std::string(row->label);
}

ParityClass parity_classification(int m, int e) {
  if (m >= 6 && e >= 4 && m % 2 == 0 && e % 2 == 0) return ParityClass::terminal;
  if (m >= 7 && e >= 5 && m % 2 == 1 && e % 2 == 1) return ParityClass::internal;
  return ParityClass::not_applicable;
}

const char* node_kind_name(NodeKind kind) {
  return kind == NodeKind::terminal ? "terminal" : "internal";
}

const char* parity_class_name(ParityClass c) {
  switch (c) {
    case ParityClass::terminal: return "terminal";
    case ParityClass::internal: return "internal";
    case ParityClass::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

}  // namespace verlag
