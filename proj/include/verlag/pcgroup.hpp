#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "verlag/errors.hpp"
#include "verlag/presentations.hpp"

namespace verlag {

class PcGroup;

// Group element in collected normal form: exponent vector with entry i
// reduced into [0, rel_order(i)).
class PcElement {
 public:
  PcElement() = default;
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  const PcGroup* group() const { return group_; }
  bool is_identity() const;

  friend bool operator==(const PcElement& a, const PcElement& b) {
    return a.group_ == b.group_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const PcElement& a, const PcElement& b) { return !(a == b); }
  // Lexicographic order on exponent vectors; used for canonical coset
  // representatives.
  friend bool operator<(const PcElement& a, const PcElement& b) { return a.exps_ < b.exps_; }

 private:
  friend class PcGroup;
  PcElement(const PcGroup* g, std::vector<std::int64_t> e) : group_(g), exps_(std::move(e)) {}
  const PcGroup* group_ = nullptr;
  std::vector<std::int64_t> exps_;
};

// A word over the polycyclic generators as (generator, exponent) letters.
using PcWord = std::vector<std::pair<int, std::int64_t>>;

// Power-conjugate presentation data.
//  rel_orders[i]  relative order N_i of generator g_i (a power of p)
//  powers[i]      normal-form word equal to g_i^{N_i} (empty: g_i^{N_i} = 1)
//  conj[i][j]     normal-form word equal to g_j^{g_i} for i < j
//                 (empty: g_i and g_j commute)
struct PcPresentation {
  std::vector<std::int64_t> rel_orders;
  std::vector<PcWord> powers;
  std::vector<std::vector<PcWord>> conj;
  int ngens() const { return static_cast<int>(rel_orders.size()); }
};

// Small consistent power-conjugate group engine.  Multiplication is
// collection from the left over the generator order; correctness of a built
// presentation is certified post-hoc (overlap conditions plus full
// enumeration at desk scale).
class PcGroup {
 public:
  static constexpr std::int64_t kOrderCap = 100000;

  explicit PcGroup(PcPresentation pres);
  PcGroup(const PcGroup&) = delete;
  PcGroup& operator=(const PcGroup&) = delete;

  int ngens() const { return pres_.ngens(); }
  std::int64_t order() const { return order_; }
  const PcPresentation& presentation() const { return pres_; }

  PcElement identity() const;
  PcElement generator(int i) const;
  // Collects an arbitrary exponent vector into normal form.
  PcElement element(const std::vector<std::int64_t>& exponents) const;

  PcElement multiply(const PcElement& a, const PcElement& b) const;
  PcElement inverse(const PcElement& a) const;
  PcElement power(const PcElement& a, std::int64_t n) const;
  PcElement conjugate(const PcElement& a, const PcElement& h) const;  // h^{-1} a h
  // Left-normed commutator [u, v] = u^{-1} v^{-1} u v = u^{-1} * u^v.
  PcElement commutator(const PcElement& u, const PcElement& v) const;

  // Lexicographic rank of the exponent vector; inverse of element_at.
  std::int64_t index_of(const PcElement& a) const;
  PcElement element_at(std::int64_t index) const;

  // Consistency certificate: all overlap conditions of the collection process
  // hold, i.e. both bracketings of every critical product collect equally.
  bool satisfies_overlap_conditions() const;
  // Number of distinct normal forms reachable from the identity by generator
  // multiplication; equals order() for a sane engine.
  std::int64_t closure_count() const;

 private:
  PcWord collect(PcWord w) const;
  void check_same_group(const PcElement& a, const PcElement& b) const;

  PcPresentation pres_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
};

// Ordered product g * g^h * g^{h^2} * ... * g^{h^{p-1}} realizing the trace
// element 1 + h + ... + h^{p-1} as a symbolic exponent.
PcElement symbolic_trace_power(const PcElement& g, const PcElement& h, int p);

// Subgroup with eagerly materialized element set (desk scale).  Closure of
// the generators under multiplication, optionally also under conjugation by
// the given normalizing elements.
class Subgroup {
 public:
  Subgroup(const PcGroup& g, std::vector<PcElement> generators,
           const std::vector<PcElement>& normalizing = {});

  const PcGroup& group() const { return *group_; }
  const std::vector<PcElement>& generators() const { return gens_; }
  const std::vector<PcElement>& elements() const { return elems_; }  // sorted
  std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }
  bool contains(const PcElement& a) const;
  bool trivial() const { return elems_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.member_ == b.member_;
  }

 private:
  const PcGroup* group_;
  std::vector<PcElement> gens_;
  std::vector<PcElement> elems_;
  std::vector<char> member_;  // indexed by element rank
};

// Descending chain gamma_1 > gamma_2 > ... terminating at the trivial
// subgroup, gamma_{j+1} = [gamma_j, G].
std::vector<Subgroup> lower_central_series(const PcGroup& g);

Subgroup derived_subgroup(const Subgroup& h);

// A built maximal-class group: the pc engine plus the distinguished elements
// and subgroups used by the transfer oracle.
class MaxClassGroup {
 public:
  const MaxClassPresentation& params() const { return pres_; }
  const PcGroup& group() const { return *group_; }
  const PcElement& x() const { return x_; }
  const PcElement& y() const { return y_; }
  // s_j for 2 <= j <= m-1 (for p = 2 these are the powers of y pinned by the
  // commutator recursion, not pc generators).
  const PcElement& s(int j) const;
  const Subgroup& commutator_subgroup() const { return *gamma2_; }
  // M_1 = <y, gamma_2>, M_i = <x y^{i-2}, gamma_2>; list index is i-1.
  const std::vector<Subgroup>& maximal_subgroups() const { return maximals_; }
  const Subgroup& maximal_subgroup(int i) const;  // 1-based
  const Subgroup& maximal_derived(int i) const;   // gamma_2(M_i), 1-based

 private:
  friend MaxClassGroup build_max_class_group(const MaxClassPresentation& pres);
  MaxClassGroup() = default;

  MaxClassPresentation pres_;
  std::unique_ptr<PcGroup> group_;
  PcElement x_, y_;
  std::vector<PcElement> s_;  // s_[j-2] = s_j
  std::unique_ptr<Subgroup> gamma2_;
  std::vector<Subgroup> maximals_;
  std::vector<Subgroup> maximal_derived_;
};

// Builds the pc group for a validated presentation.  Oracle scope:
// p = 2 with 3 <= m <= 10 (D/Q/S built directly on two generators) or the
// abelian m = 2 case, or odd p with k = 0 and p^m <= 10^5.
// Throws Error(OutOfOracleScope) outside that scope and
// Error(InconsistentPresentation) when the built presentation fails its
// consistency certificate.
MaxClassGroup build_max_class_group(const MaxClassPresentation& pres);

}  // namespace verlag
