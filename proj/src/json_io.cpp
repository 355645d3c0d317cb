#include "verlag/json_io.hpp"

namespace verlag {

namespace {

bool get_int(const nlohmann::json& j, const char* key, int fallback, int& out,
             std::string& err) {
  if (!j.contains(key)) {
    out = fallback;
    return true;
  }
  if (!j.at(key).is_number_integer()) {
    err = std::string("field '") + key + "' must be an integer";
    return false;
  }
  out = j.at(key).get<int>();
  return true;
}

}  // namespace

Validated<Presentation> parse_presentation(const nlohmann::json& j) {
  using V = Validated<Presentation>;
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    return V(Errc::ExponentOutOfRange, "presentation JSON needs a string field 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  std::string err;
  if (kind == "max") {
    int p, m, k, w, z;
    if (!get_int(j, "p", 0, p, err) || !get_int(j, "m", 0, m, err) ||
        !get_int(j, "k", 0, k, err) || !get_int(j, "w", 0, w, err) ||
        !get_int(j, "z", 0, z, err))
      return V(Errc::ExponentOutOfRange, err);
    std::vector<int> a;
    if (j.contains("a")) {
      if (!j.at("a").is_array())
        return V(Errc::ExponentOutOfRange, "field 'a' must be an array of integers");
      for (const auto& entry : j.at("a")) {
        if (!entry.is_number_integer())
          return V(Errc::ExponentOutOfRange, "field 'a' must be an array of integers");
        a.push_back(entry.get<int>());
      }
    }
    auto v = validate_max(p, m, k, std::move(a), w, z);
    if (!v.ok()) return V(v.error().code, v.error().message);
    return V(Presentation{v.value()});
  }
  if (kind == "low") {
    int m, n, alpha, beta, gamma, delta, rho;
    if (!get_int(j, "m", 0, m, err) || !get_int(j, "n", 0, n, err) ||
        !get_int(j, "alpha", 0, alpha, err) || !get_int(j, "beta", 0, beta, err) ||
        !get_int(j, "gamma", 0, gamma, err) || !get_int(j, "delta", 0, delta, err) ||
        !get_int(j, "rho", 0, rho, err))
      return V(Errc::ExponentOutOfRange, err);
    auto v = validate_low(m, n, alpha, beta, gamma, delta, rho);
    if (!v.ok()) return V(v.error().code, v.error().message);
    return V(Presentation{v.value()});
  }
  return V(Errc::ExponentOutOfRange, "'kind' must be \"max\" or \"low\"");
}

Validated<Presentation> parse_presentation_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    return Validated<Presentation>(Errc::ExponentOutOfRange, "presentation is not valid JSON");
  return parse_presentation(j);
}

nlohmann::json to_json(const MaxClassPresentation& q) {
  return nlohmann::json{{"kind", "max"}, {"p", q.p}, {"m", q.m}, {"k", q.k},
                        {"a", q.a},      {"w", q.w}, {"z", q.z}};
}

nlohmann::json to_json(const LowClassPresentation& q) {
  return nlohmann::json{{"kind", "low"},     {"m", q.m},         {"n", q.n},
                        {"alpha", q.alpha},  {"beta", q.beta},   {"gamma", q.gamma},
                        {"delta", q.delta},  {"rho", q.rho}};
}

nlohmann::json to_json(const Presentation& pres) {
  return std::visit([](const auto& q) { return to_json(q); }, pres);
}

nlohmann::json to_json(const Multiplet& kappa) {
  nlohmann::json taussky = nlohmann::json::array();
  for (Taussky t : taussky_vector(kappa)) taussky.push_back(t == Taussky::A ? "A" : "B");
  return nlohmann::json{{"kappa", kappa.kappa}, {"nu", kappa.nu()}, {"taussky", taussky}};
}

nlohmann::json to_json(const OrbitRecord& rec) {
  return nlohmann::json{{"section", rec.section},
                        {"ordinal", rec.ordinal},
                        {"representative", rec.representative.kappa},
                        {"canonical", rec.canonical.kappa},
                        {"occupation", rec.occupation},
                        {"fixed_points", rec.fixed_count},
                        {"property", property_label(rec.property)},
                        {"orbit_size", rec.orbit_size},
                        {"realizing", rec.realizing}};
}

}  // namespace verlag
