#include "verlag/presentations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace verlag {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::PrimeRequired: return "PrimeRequired";
    case Errc::KOutOfRange: return "KOutOfRange";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::ALeadingZero: return "ALeadingZero";
    case Errc::InvalidTwoFamily: return "InvalidTwoFamily";
    case Errc::IndexRangeViolation: return "IndexRangeViolation";
    case Errc::OutOfOracleScope: return "OutOfOracleScope";
    case Errc::InconsistentPresentation: return "InconsistentPresentation";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::OutOfTheoremScope: return "OutOfTheoremScope";
    case Errc::KernelNotSubgroup: return "KernelNotSubgroup";
    case Errc::AmbiguousKernel: return "AmbiguousKernel";
    case Errc::NotTerminal: return "NotTerminal";
    case Errc::NotInSectionD: return "NotInSectionD";
    case Errc::UnsupportedPrimeForLabels: return "UnsupportedPrimeForLabels";
    case Errc::DegreeMismatch: return "DegreeMismatch";
  }
  return "UnknownError";
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

MaxClassPresentation::TwoFamily MaxClassPresentation::two_family() const {
  if (p != 2 || m == 2) return TwoFamily::none;
  if (w == 0 && z == 0) return TwoFamily::dihedral;
  if (w == 0 && z == 1) return TwoFamily::quaternion;
  if (w == 1 && z == 0) return TwoFamily::semidihedral;
  return TwoFamily::none;
}

Validated<MaxClassPresentation> validate_max(int p, int m, int k, std::vector<int> a,
                                             int w, int z) {
  using V = Validated<MaxClassPresentation>;
  if (!is_prime(p)) return V(Errc::PrimeRequired, "p = " + std::to_string(p) + " is not prime");
  if (m < 2)
    return V(Errc::ExponentOutOfRange, "nilpotency index m must be at least 2");
  if (m == 2) {
    if (k != 0) return V(Errc::KOutOfRange, "abelian case m = 2 requires k = 0");
    if (!a.empty())
      return V(Errc::ALeadingZero, "abelian case m = 2 requires an empty a-vector");
    if (w != 0 || z != 0)
      return V(Errc::ExponentOutOfRange, "abelian case m = 2 requires w = z = 0");
    return V(MaxClassPresentation{p, m, 0, {}, 0, 0});
  }
  // k = 0 for m = 3; 0 <= k <= m-4 for m >= 4; additionally k <= p-2 once m >= p+1.
  int k_max = (m == 3) ? 0 : m - 4;
  if (m >= p + 1) k_max = std::min(k_max, p - 2);
  if (k < 0 || k > k_max)
    return V(Errc::KOutOfRange, "k = " + std::to_string(k) + " outside [0, " +
                                    std::to_string(k_max) + "] for p = " + std::to_string(p) +
                                    ", m = " + std::to_string(m));
  if (static_cast<int>(a.size()) != k)
    return V(Errc::ALeadingZero,
             "a-vector must have exactly k = " + std::to_string(k) + " entries");
  for (int ai : a)
    if (ai < 0 || ai >= p)
      return V(Errc::ExponentOutOfRange, "a-entry " + std::to_string(ai) + " outside [0, p-1]");
  if (k >= 1 && a.front() == 0)
    return V(Errc::ALeadingZero, "leading exponent a(m-k) must be positive");
  if (w < 0 || w >= p || z < 0 || z >= p)
    return V(Errc::ExponentOutOfRange, "w, z must lie in [0, p-1]");
  if (p == 2) {
    bool d = (w == 0 && z == 0);
    bool q = (w == 0 && z == 1);
    bool s = (w == 1 && z == 0) && m >= 4;
    if (!d && !q && !s)
      return V(Errc::InvalidTwoFamily, "(w,z) = (" + std::to_string(w) + "," +
                                           std::to_string(z) + ") with m = " + std::to_string(m) +
                                           " is not one of D, Q, S");
  }
  return V(MaxClassPresentation{p, m, k, std::move(a), w, z});
}

Validated<LowClassPresentation> validate_low(int m, int n, int alpha, int beta, int gamma,
                                             int delta, int rho) {
  using V = Validated<LowClassPresentation>;
  for (int t : {alpha, beta, gamma, delta, rho})
    if (t < -1 || t > 1)
      return V(Errc::ExponentOutOfRange, "relational exponents must lie in {-1, 0, 1}");
  if (!(4 <= m && m < n && n <= 2 * m - 3))
    return V(Errc::IndexRangeViolation,
             "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                 ") violates 4 <= m < n <= 2m-3");
  return V(LowClassPresentation{m, n, alpha, beta, gamma, delta, rho});
}

namespace {

std::string pow2(int m) {
  return std::to_string(1 << m);
}

std::string subscript(const std::vector<int>& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  if (a.size() == 1) {
    os << a[0];
  } else {
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
  }
  return os.str();
}

}  // namespace

std::string family_name(const MaxClassPresentation& q) {
  std::ostringstream os;
  if (q.abelian()) {
    os << "C(" << q.p << ") x C(" << q.p << ")";
    return os.str();
  }
  std::ostringstream base;
  base << "G_" << subscript(q.a) << "^(" << q.m << ")(" << q.w << "," << q.z << ")";
  if (q.p == 2) {
    switch (q.two_family()) {
      case MaxClassPresentation::TwoFamily::dihedral: os << "D(" << pow2(q.m) << ") = "; break;
      case MaxClassPresentation::TwoFamily::quaternion: os << "Q(" << pow2(q.m) << ") = "; break;
      case MaxClassPresentation::TwoFamily::semidihedral: os << "S(" << pow2(q.m) << ") = "; break;
      case MaxClassPresentation::TwoFamily::none: break;
    }
  }
  os << base.str();
  return os.str();
}

std::string family_name(const LowClassPresentation& q) {
  std::ostringstream os;
  os << "G_" << q.rho << "^(" << q.m << "," << q.n << ")(" << q.alpha << "," << q.beta << ","
     << q.gamma << "," << q.delta << ")";
  return os.str();
}

std::string family_name(const Presentation& pres) {
  return std::visit([](const auto& q) { return family_name(q); }, pres);
}

std::optional<std::string> isoclinism_label(const Presentation& pres) {
  if (const auto* q = std::get_if<MaxClassPresentation>(&pres)) {
    if (q->p != 3) return std::nullopt;
    static const std::map<std::tuple<int, int, int, int>, std::string> table = {
        {{3, 0, 0, 1}, "Phi_2(21)"},
        {{4, 0, 0, 1}, "Phi_3(211)_a"},
        {{4, 0, 1, 0}, "Phi_3(211)_b1"},
        {{4, 0, 2, 0}, "Phi_3(211)_b2"},
        {{5, 0, 0, 1}, "Phi_9(2111)_a"},
        {{5, 0, 1, 0}, "Phi_9(2111)_b0"},
        {{6, 0, 0, 1}, "Phi_35(21111)_a"},
        {{6, 0, 1, 0}, "Phi_35(21111)_b0"},
        {{6, 0, 2, 0}, "Phi_35(21111)_b1"},
        {{5, 1, 0, 0}, "Phi_10(1^5)"},
        {{5, 1, 0, 1}, "Phi_10(2111)_a0"},
        {{5, 1, 0, 2}, "Phi_10(2111)_a1"},
    };
    auto it = table.find({q->m, q->k, q->w, q->z});
    if (it != table.end()) return it->second;
    return std::nullopt;
  }
  const auto& q = std::get<LowClassPresentation>(pres);
  if (q.m != 4 || q.n != 5 || q.rho != 0) return std::nullopt;
  static const std::map<std::tuple<int, int, int, int>, std::string> table = {
      {{1, 1, -1, 1}, "Phi_6(221)_a"},
      {{0, 0, -1, 1}, "Phi_6(221)_c2"},
      {{0, -1, -1, 0}, "Phi_6(221)_d0"},
      {{1, 1, 1, 1}, "Phi_6(221)_b1"},
      {{0, -1, 0, 1}, "Phi_6(221)_d1"},
      {{0, 0, 0, 1}, "Phi_6(221)_c1"},
      {{0, 0, 0, 0}, "Phi_6(1^5)"},
  };
  auto it = table.find({q.alpha, q.beta, q.gamma, q.delta});
  if (it != table.end()) return it->second;
  return std::nullopt;
}

}  // namespace verlag
