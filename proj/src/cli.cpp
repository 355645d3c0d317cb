#include "verlag/cli.hpp"

#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "verlag/json_io.hpp"
#include "verlag/sweep.hpp"
#include "verlag/tree.hpp"
#include "verlag/typeclass.hpp"

namespace verlag {

namespace {

using nlohmann::json;

void print_error(std::ostream& err, Errc code, const std::string& message) {
  err << json{{"error", {{"code", errc_name(code)}, {"message", message}}}}.dump() << "\n";
}

std::string read_presentation_arg(const std::string& arg, std::istream& in) {
  if (!arg.empty() && arg != "-") return arg;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_type(const std::string& arg, std::istream& in, std::ostream& out, std::ostream& err) {
  auto parsed = parse_presentation_text(read_presentation_arg(arg, in));
  if (!parsed.ok()) {
    print_error(err, parsed.error().code, parsed.error().message);
    return 1;
  }
  const Presentation& pres = parsed.value();
  try {
    Multiplet kappa = transfer_multiplet(pres);
    int p = std::holds_alternative<MaxClassPresentation>(pres)
                ? std::get<MaxClassPresentation>(pres).p
                : 3;
    json result = to_json(kappa);
    result["family"] = family_name(pres);
    result["coarse"] = coarse_type(kappa);
    if (auto label = isoclinism_label(pres)) result["isoclinism"] = *label;
    OrbitRecord rec = classify(kappa, p);
    json orbit{{"canonical", rec.canonical.kappa}, {"orbit_size", rec.orbit_size}};
    if (!rec.section.empty()) {
      orbit["section"] = rec.section;
      orbit["ordinal"] = rec.ordinal;
      orbit["label"] = rec.section + "." + std::to_string(rec.ordinal);
      orbit["representative"] = rec.representative.kappa;
    }
    result["orbit"] = orbit;
    out << result.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    print_error(err, e.code(), e.what());
    return 1;
  }
}

int cmd_verify(int p, int m_max, const std::string& families_flag, bool serial,
               std::ostream& out, std::ostream& err) {
  std::vector<std::string> families;
  std::stringstream ss(families_flag);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) families.push_back(item);
  std::vector<MaxClassPresentation> cases;
  try {
    cases = sweep_cases(p, m_max, families);
  } catch (const Error& e) {
    print_error(err, e.code(), e.what());
    return 1;
  }
  RunReport report = run_sweep(cases, serial ? ExecMode::serial : ExecMode::parallel);
  json out_json{{"cases_run", report.cases_run}, {"agreements", report.agreements}};
  json disagreements = json::array();
  for (const auto& d : report.disagreements)
    disagreements.push_back({{"presentation", to_json(d.pres)},
                             {"expected", to_json(d.expected)},
                             {"got", to_json(d.got)}});
  out_json["disagreements"] = disagreements;
  json skipped = json::array();
  for (const auto& s : report.skipped)
    skipped.push_back({{"presentation", to_json(s.pres)}, {"reason", s.reason}});
  out_json["skipped"] = skipped;
  out << out_json.dump() << "\n";
  err << "verify: " << report.cases_run << " cases in " << report.elapsed.count() << " ms on "
      << (serial ? 1 : effective_threads()) << " thread(s)\n";
  return report.disagreements.empty() ? 0 : 2;
}

int cmd_orbits(int p, bool total, const std::string& format, std::ostream& out,
               std::ostream& err) {
  if (p != 2 && p != 3) {
    print_error(err, Errc::UnsupportedPrimeForLabels, "orbit tables exist only for p in {2, 3}");
    return 1;
  }
  auto rows = enumerate_orbits(p, total ? TableKind::total : TableKind::partial);
  if (format == "text") {
    out << orbits_text(rows);
  } else if (format == "csv") {
    out << orbits_csv(rows);
  } else {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    out << arr.dump() << "\n";
  }
  return 0;
}

int cmd_tree(const std::string& arg, const std::string& node_kind_flag, bool want_predecessor,
             std::istream& in, std::ostream& out, std::ostream& err) {
  auto parsed = parse_presentation_text(read_presentation_arg(arg, in));
  if (!parsed.ok()) {
    print_error(err, parsed.error().code, parsed.error().message);
    return 1;
  }
  if (!std::holds_alternative<LowClassPresentation>(parsed.value())) {
    print_error(err, Errc::IndexRangeViolation, "tree positions are defined for kind \"low\"");
    return 1;
  }
  const auto& q = std::get<LowClassPresentation>(parsed.value());

  json result{{"family", family_name(parsed.value())},
              {"e", q.e()},
              {"coclass", q.coclass()},
              {"class", q.nilpotency_class()},
              {"k", q.k()}};
  ParityClass parity = parity_classification(q.m, q.e());
  result["parity"] = parity_class_name(parity);

  std::optional<NodeKind> kind;
  if (node_kind_flag == "terminal")
    kind = NodeKind::terminal;
  else if (node_kind_flag == "internal")
    kind = NodeKind::internal;
  else if (parity == ParityClass::terminal)
    kind = NodeKind::terminal;
  else if (parity == ParityClass::internal)
    kind = NodeKind::internal;

  try {
    if (q.in_kernel_scope()) {
      Multiplet kappa = transfer_multiplet(q);
      result["multiplet"] = to_json(kappa);
      OrbitRecord rec = classify(kappa, 3);
      result["orbit"] = rec.section + "." + std::to_string(rec.ordinal);
    }
    if (kind) {
      result["node_kind"] = node_kind_name(*kind);
      if (auto label = section_d_label(q.alpha, q.beta, q.gamma, q.delta, *kind)) {
        Multiplet kappa = section_d_type(q.alpha, q.beta, q.gamma, q.delta, *kind);
        result["section_d"] = {{"label", *label}, {"kappa", kappa.kappa}};
      }
    }
    if (want_predecessor) {
      auto pred = predecessor(q);
      if (!pred.ok()) {
        print_error(err, pred.error().code, pred.error().message);
        return 1;
      }
      json pj = to_json(pred.value());
      pj["family"] = family_name(Presentation{pred.value()});
      result["predecessor"] = pj;
    }
  } catch (const Error& e) {
    print_error(err, e.code(), e.what());
    return 1;
  }
  out << result.dump() << "\n";
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Transfer-type computations for parametric metabelian p-groups"};
  app.require_subcommand(1);

  std::string pres_arg;
  auto* type_cmd = app.add_subcommand(
      "type", "Transfer multiplet, Taussky vector, and orbit classification");
  type_cmd->add_option("presentation", pres_arg,
                       "presentation JSON (or - to read standard input)");

  int p = 2, m_max = 8;
  std::string families;
  bool serial = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "Closed-form vs. brute-force oracle equivalence sweep");
  verify_cmd->add_option("--p", p, "prime")->required();
  verify_cmd->add_option("--m-max", m_max, "largest nilpotency index")->required();
  verify_cmd->add_option("--families", families,
                         "comma-separated families (D,Q,S for p=2; k0 for odd p)");
  verify_cmd->add_flag("--serial", serial, "run the serial reference sweep");

  int orbits_p = 2;
  bool partial = false, total = false;
  std::string format = "text";
  auto* orbits_cmd = app.add_subcommand("orbits", "Orbit classification tables");
  orbits_cmd->add_option("--p", orbits_p, "prime (2 or 3)")->required();
  orbits_cmd->add_flag("--partial", partial, "orbits without total transfers");
  orbits_cmd->add_flag("--total", total, "orbits with at least one total transfer");
  orbits_cmd->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  std::string tree_arg, node_kind;
  bool want_pred = false;
  auto* tree_cmd = app.add_subcommand("tree", "Tree position of a non-maximal-class 3-group");
  tree_cmd->add_option("presentation", tree_arg,
                       "presentation JSON (or - to read standard input)");
  tree_cmd->add_option("--node-kind", node_kind, "terminal or internal")
      ->check(CLI::IsMember({"terminal", "internal"}));
  tree_cmd->add_flag("--predecessor", want_pred, "include the predecessor presentation");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (type_cmd->parsed()) return cmd_type(pres_arg, in, out, err);
  if (verify_cmd->parsed()) return cmd_verify(p, m_max, families, serial, out, err);
  if (orbits_cmd->parsed()) {
    if (partial == total) {
      err << "error: exactly one of --partial/--total is required\n";
      return 1;
    }
    return cmd_orbits(orbits_p, total, format, out, err);
  }
  if (tree_cmd->parsed()) return cmd_tree(tree_arg, node_kind, want_pred, in, out, err);
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace verlag
