#pragma once

#include <string>
#include <utility>
#include <vector>

#include "verlag/pcgroup.hpp"
#include "verlag/presentations.hpp"

namespace verlag {

// Transfer-kernel code vector kappa of length p+1: kappa(i) = 0 for a total
// transfer, kappa(i) = j >= 1 when the kernel is M_j modulo the commutator
// subgroup.  The oracle reserves -1 for a trivial kernel (never expected).
struct Multiplet {
  std::vector<int> kappa;

  int degree() const { return static_cast<int>(kappa.size()); }
  int nu() const;  // number of total transfers (zeros)
  int operator()(int i) const { return kappa.at(i - 1); }  // 1-based

  friend bool operator==(const Multiplet&, const Multiplet&) = default;
  friend bool operator<(const Multiplet& a, const Multiplet& b) { return a.kappa < b.kappa; }
  std::string str() const;  // "(132)" digit form
};

// Coset a * modulus with the lexicographically smallest representative.
struct QuotientElement {
  PcElement representative;
  const Subgroup* modulus = nullptr;

  bool trivial() const { return representative.is_identity(); }
  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.modulus == b.modulus && a.representative == b.representative;
  }
};

QuotientElement make_coset(const PcElement& a, const Subgroup& modulus);

// Definitional transfer V_i : G/gamma_2(G) -> M_i/gamma_2(M_i) evaluated in a
// built group: g^p for g outside M_i, the trace product g^{S_p(h)} with a
// transversal element h outside M_i otherwise.
QuotientElement transfer_by_definition(const MaxClassGroup& built, int i, const PcElement& g);
QuotientElement transfer_by_definition(const MaxClassGroup& built, int i, const PcElement& g,
                                       const PcElement& h);

// Formal product of quotient-generator powers, tagged with its modulus.
struct SymbolicImage {
  std::vector<std::pair<std::string, int>> factors;  // zero exponents omitted
  std::string modulus;
  std::string str() const;
};

SymbolicImage transfer_image_closed_form(const MaxClassPresentation& pres, int i, int j, int ell);
SymbolicImage transfer_image_closed_form(const LowClassPresentation& pres, int i, int j, int ell);

// Closed-form transfer-kernel singulets.
int transfer_kernel_closed_form(const MaxClassPresentation& pres, int i);
int transfer_kernel_closed_form(const LowClassPresentation& pres, int i);

Multiplet transfer_multiplet(const MaxClassPresentation& pres);
Multiplet transfer_multiplet(const LowClassPresentation& pres);
Multiplet transfer_multiplet(const Presentation& pres);

// Brute-force multiplet: enumerate the p^2 cosets of gamma_2(G), collect the
// definitional kernel of each V_i, and match it against the subgroup lattice
// of G/gamma_2(G).
Multiplet transfer_multiplet_by_oracle(const MaxClassGroup& built);
// Kernel sizes (cosets of gamma_2(G) mapped to the trivial coset) per i.
std::vector<int> oracle_kernel_sizes(const MaxClassGroup& built);

// Independent solver for the non-maximal-class kernels: brute-forces the
// coset exponents (j, ell), reduces the symbolic image through the generator
// list of gamma_2(M_i), and matches the solution set against the kernel
// candidates.
int kernel_solver_low_class(const LowClassPresentation& pres, int i);

enum class Taussky { A, B };
Taussky taussky_condition(const Multiplet& kappa, int i);
std::vector<Taussky> taussky_vector(const Multiplet& kappa);
// Coarse type string, e.g. "(1BB)": digit for a total transfer or a fixed
// point, B otherwise.
std::string coarse_type(const Multiplet& kappa);

}  // namespace verlag
