#pragma once

#include <string>
#include <vector>

#include "verlag/transfer.hpp"

namespace verlag {

// Permutation of {0, ..., n-1} given by its image list.
using Permutation = std::vector<int>;

std::vector<Permutation> symmetric_group(int n);
Permutation compose(const Permutation& pi, const Permutation& sigma);  // pi(sigma(.))

// Action kappa^pi = pi_0^{-1} o kappa o pi, where pi permutes the positions
// 1..p+1 and its extension pi_0 to the value range [0, p+1] fixes zero.
Multiplet act(const Multiplet& kappa, const Permutation& pi);

// Lexicographically smallest member of the orbit of kappa.
Multiplet canonical_representative(const Multiplet& kappa);
std::vector<Multiplet> orbit_of(const Multiplet& kappa);

struct MultipletStats {
  std::vector<int> occupation;       // o(kappa), length p+2
  std::vector<int> fixed;            // F = { i : kappa(i) = i }, 1-based
  std::vector<int> image;            // I = values of kappa, sorted
  std::vector<int> zero_preimage;    // Z = kappa^{-1}{0}, 1-based
  std::vector<int> double_preimage;  // D = preimage of a value occupied twice
};

MultipletStats statistics(const Multiplet& kappa);

enum class OrbitProperty {
  none,
  constant,
  almost_constant,
  identity,
  transposition,
  three_cycle,
  four_cycle,
  two_disjoint_transpositions,
  identity_with_zero,
  four_cycle_with_zero,
  two_disjoint_transpositions_with_zero,
  z_subset_i,
  z_not_subset_i,
  d_subset_i,
  d_not_subset_i,
  d_meets_i_once,
  d_disjoint_i,
  d_minus_f_subset_i,
  d_minus_f_not_subset_i,
  d_disjoint_f,
  d_meets_i_once_z_subset_i,
  d_disjoint_i_z_subset_i,
};

std::string property_label(OrbitProperty p);
// Executable predicate behind each characterizing-property tag.
bool property_holds(OrbitProperty p, const Multiplet& kappa);

struct OrbitRecord {
  std::string section;
  int ordinal = 0;
  Multiplet representative;  // tabulated representative
  Multiplet canonical;       // lexicographic orbit minimum
  std::vector<int> occupation;
  int fixed_count = 0;
  OrbitProperty property = OrbitProperty::none;
  int orbit_size = 0;
  std::string realizing;  // realizing group family, or "impossible"
};

enum class TableKind { partial, total };

// All orbits of [1,p+1]^{p+1} (partial) resp. of its complement in
// [0,p+1]^{p+1} (total), with section/ordinal labels for p in {2, 3}.
std::vector<OrbitRecord> enumerate_orbits(int p, TableKind kind, bool with_labels = true);

// The record whose orbit contains kappa (labels for p in {2, 3}).
OrbitRecord classify(const Multiplet& kappa, int p);

std::string orbits_text(const std::vector<OrbitRecord>& rows);
std::string orbits_csv(const std::vector<OrbitRecord>& rows);

}  // namespace verlag
