#include "verlag/transfer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace verlag {

int Multiplet::nu() const {
  int count = 0;
  for (int v : kappa)
    if (v == 0) ++count;
  return count;
}

std::string Multiplet::str() const {
  std::string s = "(";
  for (int v : kappa) s += std::to_string(v);
  s += ")";
  return s;
}

QuotientElement make_coset(const PcElement& a, const Subgroup& modulus) {
  const PcGroup& g = modulus.group();
  if (a.group() != &g) throw Error(Errc::GroupMismatch, "coset of an element from another group");
  PcElement best = a;
  std::int64_t best_idx = g.index_of(a);
  for (const auto& u : modulus.elements()) {
    PcElement v = g.multiply(a, u);
    std::int64_t idx = g.index_of(v);
    if (idx < best_idx) {
      best_idx = idx;
      best = std::move(v);
    }
  }
  return QuotientElement{std::move(best), &modulus};
}

QuotientElement transfer_by_definition(const MaxClassGroup& built, int i, const PcElement& g,
                                       const PcElement& h) {
  const int p = built.params().p;
  if (i < 1 || i > p + 1) throw Error(Errc::IndexOutOfRange, "subgroup index outside [1, p+1]");
  const PcGroup& grp = built.group();
  if (g.group() != &grp || h.group() != &grp)
    throw Error(Errc::GroupMismatch, "element from another group");
  const Subgroup& mi = built.maximal_subgroup(i);
  const Subgroup& mod = built.maximal_derived(i);
  if (!mi.contains(g)) return make_coset(grp.power(g, p), mod);
  if (mi.contains(h))
    throw std::invalid_argument("transversal element must lie outside M_i");
  return make_coset(symbolic_trace_power(g, h, p), mod);
}

QuotientElement transfer_by_definition(const MaxClassGroup& built, int i, const PcElement& g) {
  const int p = built.params().p;
  if (i < 1 || i > p + 1) throw Error(Errc::IndexOutOfRange, "subgroup index outside [1, p+1]");
  const PcGroup& grp = built.group();
  if (g.group() != &grp) throw Error(Errc::GroupMismatch, "element from another group");
  const Subgroup& mi = built.maximal_subgroup(i);
  if (!mi.contains(g)) return make_coset(grp.power(g, p), built.maximal_derived(i));
  for (std::int64_t idx = 0; idx < grp.order(); ++idx) {
    PcElement h = grp.element_at(idx);
    if (!mi.contains(h)) return transfer_by_definition(built, i, g, h);
  }
  throw Error(Errc::IndexOutOfRange, "maximal subgroup is the whole group");
}

std::string SymbolicImage::str() const {
  std::ostringstream os;
  if (factors.empty()) {
    os << "1";
  } else {
    bool first = true;
    for (const auto& [name, e] : factors) {
      if (!first) os << "*";
      first = false;
      os << name;
      if (e != 1) os << "^" << e;
    }
  }
  os << " mod " << modulus;
  return os.str();
}

namespace {

std::string s_name(int idx) { return "s_" + std::to_string(idx); }

void push_factor(std::vector<std::pair<std::string, int>>& f, const std::string& name, int e) {
  if (e != 0) f.emplace_back(name, e);
}

}  // namespace

SymbolicImage transfer_image_closed_form(const MaxClassPresentation& q, int i, int j, int ell) {
  if (i < 1 || i > q.p + 1) throw Error(Errc::IndexOutOfRange, "subgroup index outside [1, p+1]");
  if (j < 0 || j >= q.p || ell < 0 || ell >= q.p)
    throw Error(Errc::ExponentOutOfRange, "coset exponents must lie in [0, p-1]");
  SymbolicImage img;
  if (q.abelian()) {
    img.modulus = "1";
    return img;
  }
  const int regular = q.z * j + q.w * ell;  // exponent of s_{m-1}
  if (q.p == 2) {
    if (i == 1) {
      push_factor(img.factors, s_name(q.m - 1), regular);
      img.modulus = "1";
    } else if (q.m == 3) {
      int e = (i == 2) ? (q.z - 1) * j + (q.w - 1) * ell : q.z * j + (q.w - 1) * ell;
      push_factor(img.factors, s_name(2), e);
      img.modulus = "1";
    } else {
      push_factor(img.factors, s_name(2), i == 2 ? -(j + ell) : -ell);
      img.modulus = "gamma_3(G)";
    }
    return img;
  }
  if (i == 1) {
    if (q.k == 0) {
      push_factor(img.factors, s_name(q.m - 1), regular);
      img.modulus = "1";
    } else {
      img.modulus = "gamma_" + std::to_string(q.m - q.k) + "(G)";
    }
  } else if (q.m == 3) {
    push_factor(img.factors, s_name(2), regular);
    img.modulus = "1";
  } else {
    img.modulus = "gamma_3(G)";
  }
  return img;
}

SymbolicImage transfer_image_closed_form(const LowClassPresentation& q, int i, int j, int ell) {
  if (i < 1 || i > 4) throw Error(Errc::IndexOutOfRange, "subgroup index outside [1, 4]");
  if (j < -1 || j > 1 || ell < -1 || ell > 1)
    throw Error(Errc::ExponentOutOfRange, "coset exponents must lie in {-1, 0, 1}");
  const int k = q.k();
  if (k == 1 && q.m < 5)
    throw Error(Errc::OutOfTheoremScope, "k = 1 images require nilpotency index m >= 5");
  auto sig = [](int idx) { return "sigma_" + std::to_string(idx); };
  auto tau = [](int idx) { return "tau_" + std::to_string(idx); };
  SymbolicImage img;
  img.modulus = "gamma_2(M_" + std::to_string(i) + ")";
  switch (i) {
    case 1:
      if (k == 1) {
        push_factor(img.factors, sig(q.m - 2), q.rho * q.beta * ell);
        push_factor(img.factors, sig(q.m - 1), (q.gamma - q.rho * q.beta) * ell);
      } else {
        push_factor(img.factors, sig(q.m - 1), q.gamma * ell);
      }
      push_factor(img.factors, tau(q.e()), q.delta * ell);
      push_factor(img.factors, tau(3), j);
      break;
    case 2:
      push_factor(img.factors, sig(3), ell);
      if (k == 1) {
        push_factor(img.factors, sig(q.m - 2), q.rho * q.delta * j);
        push_factor(img.factors, sig(q.m - 1), (q.alpha + q.rho * q.beta) * j);
      } else {
        push_factor(img.factors, sig(q.m - 1), q.alpha * j);
      }
      push_factor(img.factors, tau(q.e()), q.beta * j);
      break;
    default:
      push_factor(img.factors, sig(3), ell);
      push_factor(img.factors, tau(3), j);
      break;
  }
  return img;
}

namespace {

int mod_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  int r = 1;
  for (int e = p - 2; e > 0; e >>= 1) {  // p prime
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

// Singulet for the kernel of (j, ell) -> z*j + w*ell over F_p x F_p.
int linear_form_kernel(int z, int w, int p) {
  if (z == 0 && w == 0) return 0;
  if (w == 0) return 1;  // j = 0, the line <y> = M_1
  if (z == 0) return 2;  // ell = 0, the line <x> = M_2
  // Solutions span (j, ell) = (1, -z/w): the line <x y^t> = M_{t+2}.
  int t = (p - z % p) * mod_inverse(w, p) % p;
  return 2 + t;
}

int f_table(int lambda, int mu) {
  if (lambda == 0 && mu == 0) return 0;
  if (mu == 0) return 1;
  if (lambda == 0) return 2;
  return lambda == -mu ? 3 : 4;
}

}  // namespace

int transfer_kernel_closed_form(const MaxClassPresentation& q, int i) {
  if (i < 1 || i > q.p + 1) throw Error(Errc::IndexOutOfRange, "subgroup index outside [1, p+1]");
  if (q.abelian()) return 0;
  if (q.p == 2) {
    bool quaternion8 =
        q.m == 3 && q.two_family() == MaxClassPresentation::TwoFamily::quaternion;
    switch (i) {
      case 1:
        switch (q.two_family()) {
          case MaxClassPresentation::TwoFamily::dihedral: return 0;
          case MaxClassPresentation::TwoFamily::quaternion: return 1;
          case MaxClassPresentation::TwoFamily::semidihedral: return 2;
          case MaxClassPresentation::TwoFamily::none: break;
        }
        throw Error(Errc::InvalidTwoFamily, "p = 2 presentation is not one of D, Q, S");
      case 2:
        return quaternion8 ? 2 : 3;
      default:
        return quaternion8 ? 3 : 2;
    }
  }
  if (q.k >= 1) return 0;  // the image collapses into gamma_2(M_1) resp. gamma_3(G)
  if (i == 1 || q.m == 3) return linear_form_kernel(q.z, q.w, q.p);
  return 0;
}

int transfer_kernel_closed_form(const LowClassPresentation& q, int i) {
  if (i < 1 || i > 4) throw Error(Errc::IndexOutOfRange, "subgroup index outside [1, 4]");
  if (!q.in_kernel_scope())
    throw Error(Errc::OutOfTheoremScope,
                "kernel formulas require e >= 4 and m >= 6, or m = 5 with k = 0");
  switch (i) {
    case 1:
      return q.k() == 0 ? f_table(q.alpha, q.gamma) : f_table(q.delta, q.beta);
    case 2:
      return f_table(q.beta, q.delta);
    case 3:
      return 4;
    default:
      return 3;
  }
}

Multiplet transfer_multiplet(const MaxClassPresentation& q) {
  Multiplet out;
  for (int i = 1; i <= q.p + 1; ++i) out.kappa.push_back(transfer_kernel_closed_form(q, i));
  return out;
}

Multiplet transfer_multiplet(const LowClassPresentation& q) {
  Multiplet out;
  for (int i = 1; i <= 4; ++i) out.kappa.push_back(transfer_kernel_closed_form(q, i));
  return out;
}

Multiplet transfer_multiplet(const Presentation& pres) {
  return std::visit([](const auto& q) { return transfer_multiplet(q); }, pres);
}

namespace {

std::vector<std::vector<std::pair<int, int>>> oracle_kernels(const MaxClassGroup& built) {
  const int p = built.params().p;
  const PcGroup& g = built.group();
  std::vector<std::vector<std::pair<int, int>>> kernels(p + 1);
  std::vector<std::vector<PcElement>> reps(p, std::vector<PcElement>(p));
  for (int j = 0; j < p; ++j)
    for (int ell = 0; ell < p; ++ell)
      reps[j][ell] = g.multiply(g.power(built.x(), j), g.power(built.y(), ell));
  for (int i = 1; i <= p + 1; ++i)
    for (int j = 0; j < p; ++j)
      for (int ell = 0; ell < p; ++ell)
        if (transfer_by_definition(built, i, reps[j][ell]).trivial())
          kernels[i - 1].emplace_back(j, ell);
  return kernels;
}

}  // namespace

std::vector<int> oracle_kernel_sizes(const MaxClassGroup& built) {
  std::vector<int> sizes;
  for (const auto& k : oracle_kernels(built)) sizes.push_back(static_cast<int>(k.size()));
  return sizes;
}

Multiplet transfer_multiplet_by_oracle(const MaxClassGroup& built) {
  const int p = built.params().p;
  Multiplet out;
  for (const auto& kernel : oracle_kernels(built)) {
    if (static_cast<int>(kernel.size()) == p * p) {
      out.kappa.push_back(0);
      continue;
    }
    if (kernel.size() == 1) {
      out.kappa.push_back(-1);  // trivial kernel; never expected for maximal class
      continue;
    }
    if (static_cast<int>(kernel.size()) != p)
      throw Error(Errc::KernelNotSubgroup, "kernel size is not 1, p, or p^2");
    std::pair<int, int> dir{0, 0};
    for (auto [j, ell] : kernel)
      if (j != 0 || ell != 0) {
        dir = {j, ell};
        break;
      }
    for (auto [j, ell] : kernel)
      if ((j * dir.second - ell * dir.first) % p != 0)
        throw Error(Errc::KernelNotSubgroup, "kernel cosets are not collinear");
    if (dir.first == 0) {
      out.kappa.push_back(1);
    } else {
      int t = dir.second * mod_inverse(dir.first, p) % p;
      out.kappa.push_back(2 + t);
    }
  }
  return out;
}

namespace {

// Formal exponent vectors over the sigma/tau symbols, exponents mod 3.
using SymVec = std::map<std::pair<char, int>, int>;

void sym_add(SymVec& v, char fam, int idx, int c) {
  c = ((c % 3) + 3) % 3;
  if (c == 0) return;
  auto key = std::make_pair(fam, idx);
  int next = (v.count(key) ? v[key] + c : c) % 3;
  if (next == 0)
    v.erase(key);
  else
    v[key] = next;
}

SymVec sym_scale(const SymVec& v, int r) {
  SymVec out;
  for (const auto& [key, c] : v) sym_add(out, key.first, key.second, c * r);
  return out;
}

// Reduce modulo the free generators of gamma_2(M_i): tau_4..tau_{e+1} for
// i = 1 (plus sigma_{m-1} via the tau_{e+1} identification when k = 1),
// sigma_4..sigma_{m-1} for i = 2, both ranges for i = 3, 4.
SymVec sym_drop(const SymVec& v, const LowClassPresentation& q, int i) {
  SymVec out;
  for (const auto& [key, c] : v) {
    auto [fam, idx] = key;
    if ((i == 1 || i >= 3) && fam == 't' && idx >= 4 && idx <= q.e() + 1) continue;
    if ((i == 2 || i >= 3) && fam == 's' && idx >= 4 && idx <= q.m - 1) continue;
    if (i == 1 && q.k() == 1 && fam == 's' && idx == q.m - 1) continue;
    sym_add(out, fam, idx, c);
  }
  return out;
}

SymVec solver_image(const LowClassPresentation& q, int i, int j, int ell) {
  SymVec v;
  for (const auto& [name, e] : transfer_image_closed_form(q, i, j, ell).factors) {
    char fam = name[0] == 's' ? 's' : 't';
    int idx = std::stoi(name.substr(name.find('_') + 1));
    sym_add(v, fam, idx, e);
  }
  return v;
}

// The distinguished generator of gamma_2(M_i) rewritten through the defining
// relations, before reduction.
SymVec solver_generator(const LowClassPresentation& q, int i) {
  SymVec v;
  switch (i) {
    case 1:  // t_3
      sym_add(v, 't', 3, 1);
      sym_add(v, 't', 4, 1);
      sym_add(v, 's', q.m - 2, -q.rho * q.delta);
      sym_add(v, 's', q.m - 1, -q.alpha);
      sym_add(v, 't', q.e(), -q.beta);
      break;
    case 2:  // s_3
      sym_add(v, 's', 3, -1);
      sym_add(v, 's', 4, -1);
      sym_add(v, 's', q.m - 2, q.rho * q.beta);
      sym_add(v, 's', q.m - 1, q.gamma);
      sym_add(v, 't', q.e(), q.delta);
      break;
    case 3:  // s_3 t_3
      sym_add(v, 's', 3, -1);
      sym_add(v, 's', 4, -1);
      sym_add(v, 's', q.m - 2, q.rho * (q.beta - q.delta));
      sym_add(v, 's', q.m - 1, q.gamma - q.alpha);
      sym_add(v, 't', 3, 1);
      sym_add(v, 't', 4, 1);
      sym_add(v, 't', q.e(), q.delta - q.beta);
      break;
    default:  // s_3 t_3^{-1}
      sym_add(v, 's', 3, -1);
      sym_add(v, 's', 4, -1);
      sym_add(v, 's', q.m - 2, q.rho * (q.beta + q.delta));
      sym_add(v, 's', q.m - 1, q.alpha + q.gamma);
      sym_add(v, 't', 3, -1);
      sym_add(v, 't', 4, -1);
      sym_add(v, 't', q.e(), q.beta + q.delta);
      break;
  }
  return v;
}

}  // namespace

int kernel_solver_low_class(const LowClassPresentation& q, int i) {
  if (i < 1 || i > 4) throw Error(Errc::IndexOutOfRange, "subgroup index outside [1, 4]");
  if (!q.in_kernel_scope())
    throw Error(Errc::OutOfTheoremScope,
                "kernel solver requires e >= 4 and m >= 6, or m = 5 with k = 0");
  SymVec gen = sym_drop(solver_generator(q, i), q, i);
  std::set<std::pair<int, int>> solutions;
  for (int j = -1; j <= 1; ++j)
    for (int ell = -1; ell <= 1; ++ell) {
      SymVec img = sym_drop(solver_image(q, i, j, ell), q, i);
      for (int r = -1; r <= 1; ++r)
        if (img == sym_scale(gen, r)) {
          solutions.insert({(j + 3) % 3, (ell + 3) % 3});
          break;
        }
    }
  if (solutions.size() == 9) return 0;
  auto line = [&](auto pred) {
    if (solutions.size() != 3) return false;
    return std::all_of(solutions.begin(), solutions.end(),
                       [&](const std::pair<int, int>& s) { return pred(s.first, s.second); });
  };
  if (line([](int j, int) { return j == 0; })) return 1;
  if (line([](int, int ell) { return ell == 0; })) return 2;
  if (line([](int j, int ell) { return j == ell; })) return 3;
  if (line([](int j, int ell) { return (j + ell) % 3 == 0; })) return 4;
  throw Error(Errc::AmbiguousKernel,
              "solution set matches no kernel candidate for " + family_name(q));
}

Taussky taussky_condition(const Multiplet& kappa, int i) {
  if (i < 1 || i > kappa.degree())
    throw Error(Errc::IndexOutOfRange, "multiplet index outside [1, p+1]");
  int v = kappa(i);
  return (v == 0 || v == i) ? Taussky::A : Taussky::B;
}

std::vector<Taussky> taussky_vector(const Multiplet& kappa) {
  std::vector<Taussky> out;
  for (int i = 1; i <= kappa.degree(); ++i) out.push_back(taussky_condition(kappa, i));
  return out;
}

std::string coarse_type(const Multiplet& kappa) {
  std::string s = "(";
  for (int i = 1; i <= kappa.degree(); ++i) {
    int v = kappa(i);
    if (v == 0)
      s += '0';
    else if (v == i)
      s += std::to_string(i);
    else
      s += 'B';
  }
  s += ")";
  return s;
}

}  // namespace verlag
