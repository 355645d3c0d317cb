#include "verlag/pcgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace verlag {

namespace {

constexpr std::int64_t kCollectGuard = 80'000'000;

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

PcWord inverse_word(const PcWord& w) {
  PcWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool PcElement::is_identity() const {
  for (std::int64_t e : exps_)
    if (e != 0) return false;
  return true;
}

PcGroup::PcGroup(PcPresentation pres) : pres_(std::move(pres)) {
  const int n = pres_.ngens();
  pres_.powers.resize(n);
  pres_.conj.resize(n);
  for (auto& row : pres_.conj) row.resize(n);
  strides_.assign(n, 1);
  for (int i = n - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * pres_.rel_orders[i + 1];
  order_ = 1;
  for (std::int64_t r : pres_.rel_orders) {
    order_ *= r;
    if (order_ > kOrderCap)
      throw Error(Errc::OutOfOracleScope, "group order exceeds the desk-scale cap");
  }
}

PcElement PcGroup::identity() const {
  return PcElement(this, std::vector<std::int64_t>(ngens(), 0));
}

PcElement PcGroup::generator(int i) const {
  std::vector<std::int64_t> e(ngens(), 0);
  e[i] = 1;
  return PcElement(this, std::move(e));
}

void PcGroup::check_same_group(const PcElement& a, const PcElement& b) const {
  if (a.group() != this || b.group() != this)
    throw Error(Errc::GroupMismatch, "elements belong to different groups");
}

// Collection from the left: repeatedly locate the leftmost letter violating
// the normal form (exponent outside [0, N) or generators out of order) and
// rewrite it with the power resp. conjugation relations.
PcWord PcGroup::collect(PcWord w) const {
  const auto& N = pres_.rel_orders;
  std::int64_t steps = 0;
  for (;;) {
    if (++steps > kCollectGuard)
      throw Error(Errc::InconsistentPresentation, "collection did not terminate");

    enum class Act { none, erase, fix_exp, merge, swap };
    Act act = Act::none;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto [g, e] = w[i];
      if (e == 0) { act = Act::erase; pos = i; break; }
      if (e < 0 || e >= N[g]) { act = Act::fix_exp; pos = i; break; }
      if (i + 1 < w.size()) {
        auto [g2, e2] = w[i + 1];
        if (g2 == g) { act = Act::merge; pos = i; break; }
        if (g2 < g) {
          if (e2 == 0) { act = Act::erase; pos = i + 1; }
          else if (e2 < 0 || e2 >= N[g2]) { act = Act::fix_exp; pos = i + 1; }
          else { act = Act::swap; pos = i; }
          break;
        }
      }
    }
    if (act == Act::none) return w;

    switch (act) {
      case Act::erase:
        w.erase(w.begin() + pos);
        break;
      case Act::merge:
        w[pos].second += w[pos + 1].second;
        w.erase(w.begin() + pos + 1);
        break;
      case Act::fix_exp: {
        int g = w[pos].first;
        std::int64_t e = w[pos].second;
        const PcWord& P = pres_.powers[g];
        if (P.empty()) {
          w[pos].second = floor_mod(e, N[g]);
        } else if (e >= N[g]) {
          w[pos].second = e - N[g];
          w.insert(w.begin() + pos + 1, P.begin(), P.end());
        } else {  // e < 0
          w[pos].second = e + N[g];
          PcWord inv = inverse_word(P);
          w.insert(w.begin() + pos + 1, inv.begin(), inv.end());
        }
        break;
      }
      case Act::swap: {
        auto [g, e] = w[pos];        // e in [1, N)
        auto [g2, e2] = w[pos + 1];  // g2 < g, e2 in [1, N2)
        const PcWord& conj = pres_.conj[g2][g];
        if (conj.empty()) {
          std::swap(w[pos], w[pos + 1]);
          break;
        }
        // g^e g2^e2 = g2 (g^{g2})^e g2^{e2-1}
        PcWord repl;
        repl.emplace_back(g2, 1);
        if (conj.size() == 1) {
          repl.emplace_back(conj[0].first, conj[0].second * e);
        } else {
          for (std::int64_t t = 0; t < e; ++t)
            repl.insert(repl.end(), conj.begin(), conj.end());
        }
        if (e2 > 1) repl.emplace_back(g2, e2 - 1);
        w.erase(w.begin() + pos, w.begin() + pos + 2);
        w.insert(w.begin() + pos, repl.begin(), repl.end());
        break;
      }
      case Act::none:
        break;
    }
  }
}

namespace {

PcWord word_of(const PcElement& a) {
  PcWord w;
  const auto& e = a.exponents();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) w.emplace_back(static_cast<int>(i), e[i]);
  return w;
}

}  // namespace

PcElement PcGroup::element(const std::vector<std::int64_t>& exponents) const {
  PcWord w;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) w.emplace_back(static_cast<int>(i), exponents[i]);
  w = collect(std::move(w));
  std::vector<std::int64_t> e(ngens(), 0);
  for (auto [g, x] : w) e[g] = x;
  return PcElement(this, std::move(e));
}

PcElement PcGroup::multiply(const PcElement& a, const PcElement& b) const {
  check_same_group(a, b);
  PcWord w = word_of(a);
  PcWord wb = word_of(b);
  w.insert(w.end(), wb.begin(), wb.end());
  w = collect(std::move(w));
  std::vector<std::int64_t> e(ngens(), 0);
  for (auto [g, x] : w) e[g] = x;
  return PcElement(this, std::move(e));
}

PcElement PcGroup::inverse(const PcElement& a) const {
  check_same_group(a, a);
  PcWord w = collect(inverse_word(word_of(a)));
  std::vector<std::int64_t> e(ngens(), 0);
  for (auto [g, x] : w) e[g] = x;
  return PcElement(this, std::move(e));
}

PcElement PcGroup::power(const PcElement& a, std::int64_t n) const {
  if (n < 0) return inverse(power(a, -n));
  PcElement acc = identity();
  PcElement base = a;
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    n >>= 1;
    if (n > 0) base = multiply(base, base);
  }
  return acc;
}

PcElement PcGroup::conjugate(const PcElement& a, const PcElement& h) const {
  return multiply(multiply(inverse(h), a), h);
}

PcElement PcGroup::commutator(const PcElement& u, const PcElement& v) const {
  return multiply(inverse(multiply(v, u)), multiply(u, v));
}

std::int64_t PcGroup::index_of(const PcElement& a) const {
  check_same_group(a, a);
  std::int64_t idx = 0;
  for (int i = 0; i < ngens(); ++i) idx += a.exponents()[i] * strides_[i];
  return idx;
}

PcElement PcGroup::element_at(std::int64_t index) const {
  std::vector<std::int64_t> e(ngens(), 0);
  for (int i = 0; i < ngens(); ++i) {
    e[i] = index / strides_[i];
    index %= strides_[i];
  }
  return PcElement(this, std::move(e));
}

bool PcGroup::satisfies_overlap_conditions() const {
  const int n = ngens();
  // Conjugacy overlaps g_k (g_j g_i) = (g_k g_j) g_i for k > j > i.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        PcElement a = generator(k), b = generator(j), c = generator(i);
        if (multiply(a, multiply(b, c)) != multiply(multiply(a, b), c)) return false;
      }
  // Power overlaps.
  for (int j = 0; j < n; ++j) {
    std::int64_t nj = pres_.rel_orders[j];
    PcElement gj = generator(j);
    PcElement gj_nm1 = power(gj, nj - 1);
    if (multiply(gj, power(gj, nj)) != multiply(power(gj, nj), gj)) return false;
    for (int i = 0; i < j; ++i) {
      PcElement gi = generator(i);
      if (multiply(power(gj, nj), gi) != multiply(gj_nm1, multiply(gj, gi))) return false;
      std::int64_t ni = pres_.rel_orders[i];
      if (multiply(gj, power(gi, ni)) != multiply(multiply(gj, power(gi, ni - 1)), gi))
        return false;
    }
  }
  return true;
}

std::int64_t PcGroup::closure_count() const {
  std::vector<char> seen(order(), 0);
  std::deque<PcElement> work;
  seen[index_of(identity())] = 1;
  work.push_back(identity());
  std::int64_t count = 1;
  while (!work.empty()) {
    PcElement u = work.front();
    work.pop_front();
    for (int i = 0; i < ngens(); ++i) {
      PcElement v = multiply(u, generator(i));
      std::int64_t idx = index_of(v);
      if (!seen[idx]) {
        seen[idx] = 1;
        ++count;
        work.push_back(std::move(v));
      }
    }
  }
  return count;
}

PcElement symbolic_trace_power(const PcElement& g, const PcElement& h, int p) {
  const PcGroup* grp = g.group();
  if (grp == nullptr || h.group() != grp)
    throw Error(Errc::GroupMismatch, "trace power needs elements of one group");
  PcElement acc = g;
  PcElement conj = g;
  for (int l = 1; l < p; ++l) {
    conj = grp->conjugate(conj, h);
    acc = grp->multiply(acc, conj);
  }
  return acc;
}

Subgroup::Subgroup(const PcGroup& g, std::vector<PcElement> generators,
                   const std::vector<PcElement>& normalizing)
    : group_(&g) {
  member_.assign(g.order(), 0);
  std::deque<PcElement> work;
  PcElement id = g.identity();
  member_[g.index_of(id)] = 1;
  work.push_back(id);
  // Deduplicated generator list, identity dropped.
  std::set<std::int64_t> gen_seen;
  for (auto& t : generators) {
    if (t.is_identity()) continue;
    if (gen_seen.insert(g.index_of(t)).second) gens_.push_back(t);
  }
  while (!work.empty()) {
    PcElement u = work.front();
    work.pop_front();
    auto push = [&](PcElement v) {
      std::int64_t idx = g.index_of(v);
      if (!member_[idx]) {
        member_[idx] = 1;
        work.push_back(std::move(v));
      }
    };
    for (const auto& t : gens_) push(g.multiply(u, t));
    for (const auto& c : normalizing) push(g.conjugate(u, c));
  }
  for (std::int64_t idx = 0; idx < g.order(); ++idx)
    if (member_[idx]) elems_.push_back(g.element_at(idx));
}

bool Subgroup::contains(const PcElement& a) const {
  if (a.group() != group_) throw Error(Errc::GroupMismatch, "element from another group");
  return member_[group_->index_of(a)] != 0;
}

std::vector<Subgroup> lower_central_series(const PcGroup& g) {
  std::vector<PcElement> all_gens;
  for (int i = 0; i < g.ngens(); ++i) all_gens.push_back(g.generator(i));
  std::vector<Subgroup> series;
  series.emplace_back(g, all_gens);
  while (series.back().order() > 1) {
    std::set<std::int64_t> seen;
    std::vector<PcElement> comms;
    for (const auto& u : series.back().elements()) {
      for (int i = 0; i < g.ngens(); ++i) {
        PcElement c = g.commutator(u, g.generator(i));
        if (c.is_identity()) continue;
        if (seen.insert(g.index_of(c)).second) comms.push_back(std::move(c));
      }
    }
    Subgroup next(g, std::move(comms), all_gens);
    if (next.order() >= series.back().order())
      throw Error(Errc::InconsistentPresentation, "lower central series does not descend");
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup derived_subgroup(const Subgroup& h) {
  const PcGroup& g = h.group();
  std::vector<PcElement> comms;
  for (const auto& a : h.generators())
    for (const auto& b : h.generators()) {
      PcElement c = g.commutator(a, b);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return Subgroup(g, std::move(comms), h.generators());
}

const PcElement& MaxClassGroup::s(int j) const {
  if (j < 2 || j > pres_.m - 1)
    throw Error(Errc::IndexOutOfRange, "s_j defined for 2 <= j <= m-1");
  return s_[j - 2];
}

const Subgroup& MaxClassGroup::maximal_subgroup(int i) const {
  if (i < 1 || i > static_cast<int>(maximals_.size()))
    throw Error(Errc::IndexOutOfRange, "maximal subgroup index out of range");
  return maximals_[i - 1];
}

const Subgroup& MaxClassGroup::maximal_derived(int i) const {
  if (i < 1 || i > static_cast<int>(maximal_derived_.size()))
    throw Error(Errc::IndexOutOfRange, "maximal subgroup index out of range");
  return maximal_derived_[i - 1];
}

namespace {

// Pc presentation for the abelian (p,p) group on x, y.
PcPresentation abelian_presentation(int p) {
  PcPresentation pres;
  pres.rel_orders = {p, p};
  pres.powers.resize(2);
  pres.conj.assign(2, std::vector<PcWord>(2));
  return pres;
}

// Two-generator presentations of the dihedral, quaternion, and semidihedral
// 2-groups: y of order 2^{m-1}, y^x = y^{-1} (D, Q) or y^{2^{m-2}-1} (S),
// x^2 = 1 (D, S) or y^{2^{m-2}} (Q).
PcPresentation two_group_presentation(const MaxClassPresentation& q) {
  std::int64_t half = std::int64_t(1) << (q.m - 1);
  std::int64_t quarter = half / 2;
  PcPresentation pres;
  pres.rel_orders = {2, half};
  pres.powers.resize(2);
  pres.conj.assign(2, std::vector<PcWord>(2));
  using TF = MaxClassPresentation::TwoFamily;
  switch (q.two_family()) {
    case TF::dihedral:
      pres.conj[0][1] = {{1, half - 1}};
      break;
    case TF::quaternion:
      pres.conj[0][1] = {{1, half - 1}};
      pres.powers[0] = {{1, quarter}};
      break;
    case TF::semidihedral:
      pres.conj[0][1] = {{1, quarter - 1}};
      break;
    case TF::none:
      throw Error(Errc::InvalidTwoFamily, "p = 2 presentation is not one of D, Q, S");
  }
  return pres;
}

// Generators x, y, s_2, ..., s_{m-1} with
//   y^x = y s_2,  s_j^x = s_j s_{j+1}  (s_m = 1),  s_j^y = s_j  (k = 0),
//   x^p = s_{m-1}^z,
//   y^p = s_{m-1}^w  prod_{l=2}^{p} s_l^{-C(p,l)},
//   s_j^p = prod_{l=2}^{p} s_{j+l-1}^{-C(p,l)}.
// The power-relation tails are normalized into collected words bottom-up
// within the abelian part.
PcPresentation odd_p_presentation(const MaxClassPresentation& q) {
  const int p = q.p;
  const int m = q.m;
  const int n = m;  // generator count: x, y, s_2..s_{m-1}
  PcPresentation pres;
  pres.rel_orders.assign(n, p);
  pres.powers.resize(n);
  pres.conj.assign(n, std::vector<PcWord>(n));
  auto sgen = [&](int j) { return j; };  // s_j is generator j (j >= 2)

  pres.conj[0][1] = {{1, 1}, {sgen(2), 1}};  // y^x = y s_2
  for (int j = 2; j <= m - 2; ++j) pres.conj[0][sgen(j)] = {{sgen(j), 1}, {sgen(j + 1), 1}};

  // Normal form of an integer exponent vector over s_2..s_{m-1}, reducing
  // entry j modulo p against the already-normalized tail of s_j.
  std::vector<std::vector<std::int64_t>> tail(m, std::vector<std::int64_t>(m, 0));
  for (int j = m - 1; j >= 2; --j) {
    // raw tail of s_j^p: exponent -C(p,l) on s_{j+l-1} for 2 <= l <= p
    std::vector<std::int64_t> vec(m, 0);
    for (int l = 2; l <= p; ++l) {
      int idx = j + l - 1;
      if (idx <= m - 1) vec[idx] -= binomial(p, l);
    }
    // normalize entries j+1..m-1 (entry j itself is zero here)
    for (int t = j + 1; t <= m - 1; ++t) {
      std::int64_t e = vec[t];
      std::int64_t r = floor_mod(e, p);
      std::int64_t quot = (e - r) / p;
      vec[t] = r;
      if (quot != 0)
        for (int u = t + 1; u <= m - 1; ++u) vec[u] += quot * tail[t][u];
    }
    tail[j] = vec;
    PcWord w;
    for (int t = j + 1; t <= m - 1; ++t)
      if (vec[t] != 0) w.emplace_back(sgen(t), vec[t]);
    pres.powers[sgen(j)] = std::move(w);
  }

  if (q.x_power_exponent() != 0) pres.powers[0] = {{sgen(m - 1), q.x_power_exponent()}};

  {
    std::vector<std::int64_t> vec(m, 0);
    vec[m - 1] += q.y_power_exponent();
    for (int l = 2; l <= p; ++l) {
      int idx = l;
      if (idx <= m - 1) vec[idx] -= binomial(p, l);
    }
    for (int t = 2; t <= m - 1; ++t) {
      std::int64_t e = vec[t];
      std::int64_t r = floor_mod(e, p);
      std::int64_t quot = (e - r) / p;
      vec[t] = r;
      if (quot != 0)
        for (int u = t + 1; u <= m - 1; ++u) vec[u] += quot * tail[t][u];
    }
    PcWord w;
    for (int t = 2; t <= m - 1; ++t)
      if (vec[t] != 0) w.emplace_back(sgen(t), vec[t]);
    pres.powers[1] = std::move(w);
  }
  return pres;
}

std::int64_t int_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

MaxClassGroup build_max_class_group(const MaxClassPresentation& q) {
  validate_max(q.p, q.m, q.k, q.a, q.w, q.z).expect();
  if (q.p != 2 && q.k >= 1)
    throw Error(Errc::OutOfOracleScope,
                "conjugation relations for odd p with k >= 1 are not available");
  if (q.p == 2 && q.m > 10)
    throw Error(Errc::OutOfOracleScope, "p = 2 oracle scope is 3 <= m <= 10");
  std::int64_t order = int_pow(q.p, q.m);
  if (order > PcGroup::kOrderCap)
    throw Error(Errc::OutOfOracleScope, "group order exceeds the desk-scale cap");

  PcPresentation pres;
  if (q.abelian())
    pres = abelian_presentation(q.p);
  else if (q.p == 2)
    pres = two_group_presentation(q);
  else
    pres = odd_p_presentation(q);

  MaxClassGroup built;
  built.pres_ = q;
  built.group_ = std::make_unique<PcGroup>(std::move(pres));
  const PcGroup& g = *built.group_;

  if (g.order() != order || !g.satisfies_overlap_conditions() || g.closure_count() != order)
    throw Error(Errc::InconsistentPresentation,
                "presentation failed its consistency certificate: " + family_name(q));

  built.x_ = g.generator(0);
  built.y_ = g.generator(1);
  if (q.m >= 3) {
    built.s_.push_back(g.commutator(built.y_, built.x_));
    for (int j = 3; j <= q.m - 1; ++j)
      built.s_.push_back(g.commutator(built.s_.back(), built.x_));
    if (q.p != 2) {
      // The defining commutators must coincide with the pc generators.
      for (int j = 2; j <= q.m - 1; ++j)
        if (built.s_[j - 2] != g.generator(j))
          throw Error(Errc::InconsistentPresentation, "s_j drifted from its pc generator");
    }
  }

  built.gamma2_ = std::make_unique<Subgroup>(g, built.s_);
  if (built.gamma2_->order() != int_pow(q.p, q.m >= 3 ? q.m - 2 : 0))
    throw Error(Errc::InconsistentPresentation, "gamma_2(G) has the wrong order");

  std::vector<PcElement> base = built.s_;
  base.push_back(built.y_);
  built.maximals_.emplace_back(g, base);
  for (int i = 2; i <= q.p + 1; ++i) {
    base = built.s_;
    base.push_back(g.multiply(built.x_, g.power(built.y_, i - 2)));
    built.maximals_.emplace_back(g, base);
  }
  for (const auto& mi : built.maximals_)
    if (mi.order() * q.p != order)
      throw Error(Errc::InconsistentPresentation, "maximal subgroup has the wrong index");
  for (const auto& mi : built.maximals_) built.maximal_derived_.push_back(derived_subgroup(mi));
  return built;
}

}  // namespace verlag
