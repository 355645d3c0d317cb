#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "verlag/errors.hpp"

namespace verlag {

bool is_prime(int n);

// Parametric family G_a^(m)(w,z) of metabelian p-groups of maximal class,
// |G| = p^m, on generators x, y with main commutator s_2 = [y,x] and
// s_j = [s_{j-1},x].  The two name slots are the relational exponents
//
//   y^p * prod_{l=2}^{p} s_l^{C(p,l)} = s_{m-1}^w      (first slot)
//   x^p = s_{m-1}^z                                    (second slot)
//
// together with [y,s_2] = prod_{r=1}^{k} s_{m-r}^{a(m-r)}.
// m = 2 is the degenerate abelian case C(p) x C(p).
struct MaxClassPresentation {
  int p = 2;
  int m = 2;
  int k = 0;
  std::vector<int> a;  // (a(m-k), ..., a(m-1)); empty iff k == 0
  int w = 0;
  int z = 0;

  bool abelian() const { return m == 2; }
  // Exponent of s_{m-1} in the relation for x^p resp. the y^p relation.
  int x_power_exponent() const { return z; }
  int y_power_exponent() const { return w; }

  enum class TwoFamily { none, dihedral, quaternion, semidihedral };
  TwoFamily two_family() const;  // meaningful for p == 2

  friend bool operator==(const MaxClassPresentation&, const MaxClassPresentation&) = default;
};

// Family G_rho^(m,n)(alpha,beta,gamma,delta) of metabelian 3-groups of
// non-maximal class with abelianisation of type (3,3): |G| = 3^n, class m-1,
// invariant e = n-m+2, and relational exponents in {-1,0,1}.
struct LowClassPresentation {
  int m = 4;
  int n = 5;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int delta = 0;
  int rho = 0;

  int e() const { return n - m + 2; }
  int coclass() const { return n - m + 1; }
  int nilpotency_class() const { return m - 1; }
  int k() const { return rho == 0 ? 0 : 1; }
  // Scope of the kernel statements: lower than second maximal class.
  bool in_kernel_scope() const {
    return e() >= 4 && (m >= 6 || (m == 5 && k() == 0));
  }

  friend bool operator==(const LowClassPresentation&, const LowClassPresentation&) = default;
};

using Presentation = std::variant<MaxClassPresentation, LowClassPresentation>;

Validated<MaxClassPresentation> validate_max(int p, int m, int k, std::vector<int> a,
                                             int w, int z);
Validated<LowClassPresentation> validate_low(int m, int n, int alpha, int beta, int gamma,
                                             int delta, int rho);

std::string family_name(const MaxClassPresentation& pres);
std::string family_name(const LowClassPresentation& pres);
std::string family_name(const Presentation& pres);

// Isoclinism-family stem labels for a handful of small 3-groups; display
// metadata only.
std::optional<std::string> isoclinism_label(const Presentation& pres);

}  // namespace verlag
