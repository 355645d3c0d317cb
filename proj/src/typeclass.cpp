#include "verlag/typeclass.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace verlag {

std::vector<Permutation> symmetric_group(int n) {
  Permutation base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

Permutation compose(const Permutation& pi, const Permutation& sigma) {
  Permutation out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out[i] = pi[sigma[i]];
  return out;
}

Multiplet act(const Multiplet& kappa, const Permutation& pi) {
  const int n = kappa.degree();
  if (static_cast<int>(pi.size()) != n)
    throw Error(Errc::DegreeMismatch, "permutation degree does not match the multiplet");
  Permutation inv(n);
  for (int i = 0; i < n; ++i) inv[pi[i]] = i;
  Multiplet out;
  out.kappa.resize(n);
  for (int i = 0; i < n; ++i) {
    int v = kappa.kappa[pi[i]];
    if (v < 0 || v > n)
      throw Error(Errc::ExponentOutOfRange, "multiplet values must lie in [0, p+1]");
    out.kappa[i] = v == 0 ? 0 : inv[v - 1] + 1;  // pi_0 fixes zero
  }
  return out;
}

std::vector<Multiplet> orbit_of(const Multiplet& kappa) {
  std::set<Multiplet> seen;
  for (const auto& pi : symmetric_group(kappa.degree())) seen.insert(act(kappa, pi));
  return {seen.begin(), seen.end()};
}

Multiplet canonical_representative(const Multiplet& kappa) {
  Multiplet best = kappa;
  for (const auto& pi : symmetric_group(kappa.degree())) {
    Multiplet img = act(kappa, pi);
    if (img < best) best = std::move(img);
  }
  return best;
}

MultipletStats statistics(const Multiplet& kappa) {
  const int n = kappa.degree();
  MultipletStats st;
  st.occupation.assign(n + 1, 0);
  std::set<int> image;
  for (int i = 1; i <= n; ++i) {
    int v = kappa(i);
    st.occupation[v] += 1;
    image.insert(v);
    if (v == i) st.fixed.push_back(i);
    if (v == 0) st.zero_preimage.push_back(i);
  }
  st.image.assign(image.begin(), image.end());
  for (int v = 0; v <= n; ++v)
    if (st.occupation[v] == 2) {
      for (int i = 1; i <= n; ++i)
        if (kappa(i) == v) st.double_preimage.push_back(i);
      break;  // preimage of the smallest value occupied exactly twice
    }
  return st;
}

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::all_of(a.begin(), a.end(), [&](int x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) ++c;
  return c;
}

bool entries_distinct(const Multiplet& k) {
  std::set<int> s(k.kappa.begin(), k.kappa.end());
  return static_cast<int>(s.size()) == k.degree();
}

bool is_permutation_of_positions(const Multiplet& k) {
  std::set<int> s(k.kappa.begin(), k.kappa.end());
  if (s.count(0)) return false;
  return entries_distinct(k);
}

// Cycle type of a permutation multiplet, sorted descending.
std::vector<int> cycle_type(const Multiplet& k) {
  const int n = k.degree();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> type;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = k(j);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

// The single zero entry replaced by the missing nonzero value; requires
// distinct entries with exactly one zero.
Multiplet extend_through_zero(const Multiplet& k) {
  const int n = k.degree();
  std::set<int> present(k.kappa.begin(), k.kappa.end());
  int missing = 0;
  for (int v = 1; v <= n; ++v)
    if (!present.count(v)) missing = v;
  Multiplet out = k;
  for (int& v : out.kappa)
    if (v == 0) v = missing;
  return out;
}

}  // namespace

std::string property_label(OrbitProperty p) {
  switch (p) {
    case OrbitProperty::none: return "";
    case OrbitProperty::constant: return "constant";
    case OrbitProperty::almost_constant: return "almost constant";
    case OrbitProperty::identity: return "identity";
    case OrbitProperty::transposition: return "transposition";
    case OrbitProperty::three_cycle: return "3-cycle";
    case OrbitProperty::four_cycle: return "4-cycle";
    case OrbitProperty::two_disjoint_transpositions: return "2 disj. transp.";
    case OrbitProperty::identity_with_zero: return "identity with 0";
    case OrbitProperty::four_cycle_with_zero: return "4-cycle with 0";
    case OrbitProperty::two_disjoint_transpositions_with_zero: return "2 disj. transp. with 0";
    case OrbitProperty::z_subset_i: return "Z sub I";
    case OrbitProperty::z_not_subset_i: return "Z not sub I";
    case OrbitProperty::d_subset_i: return "D sub I";
    case OrbitProperty::d_not_subset_i: return "D not sub I";
    case OrbitProperty::d_meets_i_once: return "|D cap I| = 1";
    case OrbitProperty::d_disjoint_i: return "D cap I empty";
    case OrbitProperty::d_minus_f_subset_i: return "D minus F sub I";
    case OrbitProperty::d_minus_f_not_subset_i: return "D minus F not sub I";
    case OrbitProperty::d_disjoint_f: return "D cap F empty";
    case OrbitProperty::d_meets_i_once_z_subset_i: return "|D cap I| = 1, Z sub I";
    case OrbitProperty::d_disjoint_i_z_subset_i: return "D cap I empty, Z sub I";
  }
  return "";
}

bool property_holds(OrbitProperty p, const Multiplet& k) {
  MultipletStats st = statistics(k);
  std::vector<int> d_minus_f;
  for (int i : st.double_preimage)
    if (std::find(st.fixed.begin(), st.fixed.end(), i) == st.fixed.end())
      d_minus_f.push_back(i);
  switch (p) {
    case OrbitProperty::none:
      return true;
    case OrbitProperty::constant:
      return std::all_of(k.kappa.begin(), k.kappa.end(),
                         [&](int v) { return v == k.kappa.front(); });
    case OrbitProperty::almost_constant:
      return !property_holds(OrbitProperty::constant, k) &&
             std::any_of(st.occupation.begin(), st.occupation.end(),
                         [&](int c) { return c == k.degree() - 1; });
    case OrbitProperty::identity:
      return static_cast<int>(st.fixed.size()) == k.degree();
    case OrbitProperty::transposition:
      return is_permutation_of_positions(k) &&
             static_cast<int>(st.fixed.size()) == k.degree() - 2;
    case OrbitProperty::three_cycle: {
      if (!is_permutation_of_positions(k)) return false;
      auto t = cycle_type(k);
      return !t.empty() && t.front() == 3 &&
             std::count(t.begin(), t.end(), 1) == static_cast<int>(t.size()) - 1;
    }
    case OrbitProperty::four_cycle:
      return is_permutation_of_positions(k) && cycle_type(k) == std::vector<int>{4};
    case OrbitProperty::two_disjoint_transpositions:
      return is_permutation_of_positions(k) && cycle_type(k) == std::vector<int>{2, 2};
    case OrbitProperty::identity_with_zero: {
      if (st.zero_preimage.empty() || st.fixed.empty()) return false;
      for (int i = 1; i <= k.degree(); ++i)
        if (k(i) != 0 && k(i) != i) return false;
      return true;
    }
    case OrbitProperty::four_cycle_with_zero:
      return entries_distinct(k) && st.zero_preimage.size() == 1 &&
             cycle_type(extend_through_zero(k)) == std::vector<int>{4};
    case OrbitProperty::two_disjoint_transpositions_with_zero:
      return entries_distinct(k) && st.zero_preimage.size() == 1 &&
             cycle_type(extend_through_zero(k)) == std::vector<int>{2, 2};
    case OrbitProperty::z_subset_i:
      return !st.zero_preimage.empty() && subset(st.zero_preimage, st.image);
    case OrbitProperty::z_not_subset_i:
      return !st.zero_preimage.empty() && !subset(st.zero_preimage, st.image);
    case OrbitProperty::d_subset_i:
      return !st.double_preimage.empty() && subset(st.double_preimage, st.image);
    case OrbitProperty::d_not_subset_i:
      return !st.double_preimage.empty() && !subset(st.double_preimage, st.image);
    case OrbitProperty::d_meets_i_once:
      return intersection_size(st.double_preimage, st.image) == 1;
    case OrbitProperty::d_disjoint_i:
      return !st.double_preimage.empty() &&
             intersection_size(st.double_preimage, st.image) == 0;
    case OrbitProperty::d_minus_f_subset_i:
      return !d_minus_f.empty() && subset(d_minus_f, st.image);
    case OrbitProperty::d_minus_f_not_subset_i:
      return !d_minus_f.empty() && !subset(d_minus_f, st.image);
    case OrbitProperty::d_disjoint_f:
      return !st.double_preimage.empty() &&
             intersection_size(st.double_preimage, st.fixed) == 0;
    case OrbitProperty::d_meets_i_once_z_subset_i:
      return property_holds(OrbitProperty::d_meets_i_once, k) &&
             property_holds(OrbitProperty::z_subset_i, k);
    case OrbitProperty::d_disjoint_i_z_subset_i:
      return property_holds(OrbitProperty::d_disjoint_i, k) &&
             property_holds(OrbitProperty::z_subset_i, k);
  }
  return false;
}

namespace {

struct LabelRow {
  const char* section;
  int ordinal;
  std::vector<int> representative;
  OrbitProperty property;
  const char* realizing;
};

using OP = OrbitProperty;

// Classification data for the triplet orbits (p = 2).
const std::vector<LabelRow>& partial_rows_2() {
  static const std::vector<LabelRow> rows = {
      {"A", 1, {1, 1, 1}, OP::constant, "impossible"},
      {"B", 2, {1, 2, 1}, OP::almost_constant, "impossible"},
      {"B", 3, {1, 1, 2}, OP::almost_constant, "impossible"},
      {"S", 4, {2, 1, 1}, OP::almost_constant, "G_0^(m)(1,0) = S(2^m), m >= 4"},
      {"Q", 5, {1, 2, 3}, OP::identity, "G_0^(3)(0,1) = Q(8), m = 3"},
      {"Q", 6, {1, 3, 2}, OP::transposition, "G_0^(m)(0,1) = Q(2^m), m >= 4"},
      {"C", 7, {2, 3, 1}, OP::three_cycle, "impossible"},
  };
  return rows;
}

const std::vector<LabelRow>& total_rows_2() {
  static const std::vector<LabelRow> rows = {
      {"a", 1, {0, 0, 0}, OP::constant, "C(2) x C(2), m = 2"},
      {"b", 2, {1, 0, 0}, OP::none, "impossible"},
      {"b", 3, {0, 1, 0}, OP::none, "impossible"},
      {"c", 4, {1, 1, 0}, OP::none, "impossible"},
      {"c", 5, {0, 1, 1}, OP::none, "impossible"},
      {"e", 6, {1, 2, 0}, OP::identity_with_zero, "impossible"},
      {"e", 7, {0, 2, 1}, OP::none, "impossible"},
      {"d", 8, {2, 1, 0}, OP::z_not_subset_i, "G_0^(m)(0,0) = D(2^m), m >= 3"},
      {"e", 9, {0, 1, 2}, OP::z_subset_i, "impossible"},
  };
  return rows;
}

// Classification data for the quadruplet orbits (p = 3).
const std::vector<LabelRow>& partial_rows_3() {
  static const std::vector<LabelRow> rows = {
      {"A", 1, {1, 1, 1, 1}, OP::constant, "G_0^(3)(0,1)"},
      {"B", 2, {1, 2, 1, 1}, OP::almost_constant, "impossible"},
      {"B", 3, {1, 1, 1, 2}, OP::almost_constant, "impossible"},
      {"H", 4, {2, 1, 1, 1}, OP::almost_constant, "G_1^(5,6)(1,1,1,1)"},
      {"D", 5, {1, 2, 1, 2}, OP::none, "G_0^(4,5)(1,1,-1,1)"},
      {"E", 6, {1, 1, 2, 2}, OP::none, "G_0^(m,m+1)(1,-1,1,1)"},
      {"F", 7, {2, 1, 1, 2}, OP::none, "G_0^(m,m+e-2)(1,1,-1,1)"},
      {"E", 8, {1, 2, 3, 1}, OP::none, "G_0^(m,m+1)(1,0,-1,1)"},
      {"E", 9, {1, 2, 1, 3}, OP::none, "G_0^(m,m+1)(0,0,1,1)"},
      {"D", 10, {1, 1, 2, 3}, OP::d_minus_f_subset_i, "G_0^(4,5)(0,0,-1,1)"},
      {"F", 11, {1, 3, 2, 1}, OP::d_minus_f_not_subset_i, "G_0^(m,m+e-2)(1,1,0,0)"},
      {"F", 12, {3, 2, 1, 1}, OP::d_disjoint_f, "G_0^(m,m+e-2)(1,1,0,-1)"},
      {"F", 13, {2, 1, 1, 3}, OP::d_subset_i, "G_0^(m,m+e-2)(1,1,-1,0)"},
      {"E", 14, {2, 3, 1, 1}, OP::d_not_subset_i, "G_0^(m,m+1)(0,-1,1,1)"},
      {"C", 15, {1, 2, 3, 4}, OP::identity, "impossible"},
      {"G", 16, {2, 1, 3, 4}, OP::transposition, "G_1^(7,8)(1,0,0,1)"},
      {"C", 17, {1, 3, 4, 2}, OP::three_cycle, "impossible"},
      {"C", 18, {2, 3, 4, 1}, OP::four_cycle, "impossible"},
      {"G", 19, {2, 1, 4, 3}, OP::two_disjoint_transpositions, "G_1^(5,6)(0,-1,-1,0)"},
  };
  return rows;
}

const std::vector<LabelRow>& total_rows_3() {
  static const std::vector<LabelRow> rows = {
      {"a", 1, {0, 0, 0, 0}, OP::constant, "G_1^(m)(0,+-1), m >= 5"},
      {"a", 2, {1, 0, 0, 0}, OP::none, "G_0^(m)(0,1), m >= 4"},
      {"a", 3, {0, 1, 0, 0}, OP::none, "G_0^(m)(+-1,0), m >= 4"},
      {"e", 4, {1, 1, 0, 0}, OP::none, "impossible"},
      {"e", 5, {0, 1, 1, 0}, OP::none, "impossible"},
      {"e", 6, {1, 2, 0, 0}, OP::none, "impossible"},
      {"e", 7, {1, 0, 2, 0}, OP::none, "impossible"},
      {"e", 8, {0, 0, 1, 2}, OP::d_subset_i, "impossible"},
      {"e", 9, {0, 1, 2, 0}, OP::d_meets_i_once, "impossible"},
      {"b", 10, {2, 1, 0, 0}, OP::d_disjoint_i, "G_1^(6,8)(0,0,0,0)"},
      {"e", 11, {1, 1, 1, 0}, OP::none, "impossible"},
      {"e", 12, {0, 1, 1, 1}, OP::none, "impossible"},
      {"e", 13, {1, 2, 1, 0}, OP::none, "impossible"},
      {"e", 14, {1, 1, 2, 0}, OP::d_minus_f_subset_i, "impossible"},
      {"e", 15, {1, 0, 1, 2}, OP::d_minus_f_not_subset_i, "impossible"},
      {"e", 16, {0, 2, 1, 1}, OP::d_disjoint_f, "impossible"},
      {"e", 17, {0, 1, 1, 2}, OP::d_meets_i_once_z_subset_i, "impossible"},
      {"c", 18, {2, 0, 1, 1}, OP::d_disjoint_i_z_subset_i, "G_0^(m,m+1)(0,-1,0,1)"},
      {"d", 19, {2, 1, 1, 0}, OP::z_not_subset_i, "G_0^(m,m+e-2)(1,0,1,0)"},
      {"e", 20, {1, 2, 3, 0}, OP::identity_with_zero, "impossible"},
      {"c", 21, {1, 2, 0, 3}, OP::none, "G_0^(m,m+1)(0,0,0,1)"},
      {"e", 22, {1, 0, 2, 3}, OP::z_subset_i, "impossible"},
      {"d", 23, {1, 3, 2, 0}, OP::z_not_subset_i, "G_0^(m,m+e-2)(1,0,0,0)"},
      {"e", 24, {0, 1, 2, 3}, OP::four_cycle_with_zero, "impossible"},
      {"d", 25, {0, 3, 2, 1}, OP::two_disjoint_transpositions_with_zero,
       "G_0^(m,m+e-2)(0,1,0,0)"},
      {"e", 26, {2, 3, 1, 0}, OP::z_not_subset_i, "impossible"},
  };
  return rows;
}

const std::vector<LabelRow>* label_rows(int p, TableKind kind) {
  if (p == 2) return kind == TableKind::partial ? &partial_rows_2() : &total_rows_2();
  if (p == 3) return kind == TableKind::partial ? &partial_rows_3() : &total_rows_3();
  return nullptr;
}

OrbitRecord record_from(const Multiplet& rep, const Multiplet& canon, int orbit_size) {
  OrbitRecord rec;
  rec.representative = rep;
  rec.canonical = canon;
  MultipletStats st = statistics(rep);
  rec.occupation = st.occupation;
  rec.fixed_count = static_cast<int>(st.fixed.size());
  rec.orbit_size = orbit_size;
  return rec;
}

// Enumerates multiplets of one table kind and buckets them by canonical
// representative.
std::map<Multiplet, std::vector<Multiplet>> orbit_buckets(int p, TableKind kind) {
  const int degree = p + 1;
  std::map<Multiplet, std::vector<Multiplet>> buckets;
  std::vector<int> digits(degree, 0);
  for (;;) {
    bool partial = std::all_of(digits.begin(), digits.end(), [](int v) { return v != 0; });
    if ((kind == TableKind::partial) == partial) {
      Multiplet k{digits};
      buckets[canonical_representative(k)].push_back(k);
    }
    int pos = degree - 1;
    while (pos >= 0 && digits[pos] == p + 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return buckets;
}

}  // namespace

std::vector<OrbitRecord> enumerate_orbits(int p, TableKind kind, bool with_labels) {
  const std::vector<LabelRow>* labels = with_labels ? label_rows(p, kind) : nullptr;
  if (with_labels && labels == nullptr)
    throw Error(Errc::UnsupportedPrimeForLabels, "table labels exist only for p in {2, 3}");
  auto buckets = orbit_buckets(p, kind);
  std::vector<OrbitRecord> out;
  if (labels != nullptr) {
    for (const auto& row : *labels) {
      Multiplet rep{row.representative};
      Multiplet canon = canonical_representative(rep);
      auto it = buckets.find(canon);
      if (it == buckets.end())
        throw Error(Errc::InconsistentPresentation, "table row lost its orbit");
      OrbitRecord rec = record_from(rep, canon, static_cast<int>(it->second.size()));
      rec.section = row.section;
      rec.ordinal = row.ordinal;
      rec.property = row.property;
      rec.realizing = row.realizing;
      out.push_back(std::move(rec));
      buckets.erase(it);
    }
    if (!buckets.empty())
      throw Error(Errc::InconsistentPresentation, "orbit census does not match the table");
    return out;
  }
  for (const auto& [canon, members] : buckets)
    out.push_back(record_from(canon, canon, static_cast<int>(members.size())));
  return out;
}

OrbitRecord classify(const Multiplet& kappa, int p) {
  if (kappa.degree() != p + 1)
    throw Error(Errc::DegreeMismatch, "multiplet degree must be p+1");
  for (int v : kappa.kappa)
    if (v < 0 || v > p + 1)
      throw Error(Errc::ExponentOutOfRange, "multiplet values must lie in [0, p+1]");
  TableKind kind = kappa.nu() == 0 ? TableKind::partial : TableKind::total;
  Multiplet canon = canonical_representative(kappa);
  int orbit_size = static_cast<int>(orbit_of(kappa).size());
  const std::vector<LabelRow>* labels = label_rows(p, kind);
  if (labels == nullptr) return record_from(canon, canon, orbit_size);
  for (const auto& row : *labels) {
    Multiplet rep{row.representative};
    if (canonical_representative(rep) != canon) continue;
    OrbitRecord rec = record_from(rep, canon, orbit_size);
    rec.section = row.section;
    rec.ordinal = row.ordinal;
    rec.property = row.property;
    rec.realizing = row.realizing;
    return rec;
  }
  throw Error(Errc::InconsistentPresentation, "multiplet belongs to no orbit record");
}

namespace {

std::string occupation_str(const std::vector<int>& o) {
  std::string s = "(";
  for (int v : o) s += std::to_string(v);
  return s + ")";
}

}  // namespace

std::string orbits_text(const std::vector<OrbitRecord>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"sec", "nr", "repres.", "occupation", "fixed", "property", "card.",
                   "realizing group"});
  long total = 0;
  for (const auto& r : rows) {
    total += r.orbit_size;
    cells.push_back({r.section, std::to_string(r.ordinal), r.representative.str(),
                     occupation_str(r.occupation), std::to_string(r.fixed_count),
                     property_label(r.property), std::to_string(r.orbit_size), r.realizing});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  os << "Total number: " << total << "\n";
  return os.str();
}

std::string orbits_csv(const std::vector<OrbitRecord>& rows) {
  auto quote = [](const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "section,ordinal,representative,occupation,fixed_points,property,orbit_size,"
        "realizing\n";
  for (const auto& r : rows) {
    std::string rep, occ;
    for (int v : r.representative.kappa) rep += std::to_string(v);
    for (int v : r.occupation) occ += std::to_string(v);
    os << r.section << "," << r.ordinal << "," << rep << "," << occ << "," << r.fixed_count
       << "," << quote(property_label(r.property)) << "," << r.orbit_size << ","
       << quote(r.realizing) << "\n";
  }
  return os.str();
}

}  // namespace verlag
