#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccm/catalog.hpp"
#include "ccm/error.hpp"
#include "ccm/generation.hpp"
#include "ccm/internal.hpp"
#include "ccm/magma.hpp"
#include "ccm/relation.hpp"

namespace ccm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json results = Json::object();
  int exit_code = kSuccess;
  std::string summary;
  std::vector<std::string> warnings;
  std::optional<Json> error;
};

struct Invocation {
  std::string command;
  Json arguments = Json::object();
  std::optional<std::string> input;  // bytes behind the digest
  std::function<Outcome(Invocation&)> body;
};

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotCancellative:
    case ErrorKind::kNotAbelianGroup:
    case ErrorKind::kNotInjective:
    case ErrorKind::kNotHomomorphism:
    case ErrorKind::kInvalidCombination:
    case ErrorKind::kTheoremViolation:
      return kViolation;
    default:
      return kUsage;
  }
}

Outcome failure(ErrorKind kind, const std::string& message, Json detail = Json::object()) {
  Outcome o;
  o.exit_code = exit_for(kind);
  Json e{{"kind", to_string(kind)}, {"message", message}};
  e.update(detail);
  o.error = std::move(e);
  o.summary = "error (" + std::string(to_string(kind)) + "): " + message;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kPrecondition, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::kPrecondition, "cannot write " + path);
}

std::vector<Element> parse_elements(std::string_view text) {
  std::vector<Element> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    Element value{};
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size() || token.empty())
      throw Error(ErrorKind::kParse, "bad element list '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <std::size_t N>
Json verdict_json(const Verdict<N>& v) {
  return Json{{"holds", v.holds()},
              {"counterexample", v.counterexample ? Json(*v.counterexample) : Json(nullptr)}};
}

Json rows_json(const FiniteMagma& m) {
  Json rows = Json::array();
  for (Element a = 0; a < m.order(); ++a) rows.push_back(Json(std::vector<Element>(m.row(a).begin(), m.row(a).end())));
  return rows;
}

Json axioms_json(const AxiomReport& axioms) {
  return Json{{"commutative", verdict_json(axioms.commutative)},
              {"cancellative", verdict_json(axioms.cancellative)},
              {"medial", verdict_json(axioms.medial)},
              {"associative", verdict_json(axioms.associative)},
              {"ccm", axioms.is_ccm()}};
}

Json flags_json(const PropertyFlags& f) {
  return Json{{"expansive", f.expansive},
              {"symmetric", f.symmetric},
              {"monoid", f.monoid},
              {"group", f.group}};
}

Json optional_text(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Json rational_json(const std::optional<Rational>& q) { return q ? Json(to_string(*q)) : Json(nullptr); }

Json label_json(const std::optional<Label>& l) {
  return l ? Json(std::string(to_string(*l))) : Json(nullptr);
}

void require_element(const FiniteMagma& m, Element e) {
  if (!m.contains(e))
    throw Error(ErrorKind::kPrecondition,
                "unit " + std::to_string(e) + " outside 0.." + std::to_string(m.order() - 1));
}

// Shared front matter: parse, check axioms, stop with exit 1 if not a ccm-magma.
std::optional<Outcome> require_ccm(const FiniteMagma& m, const AxiomReport& axioms) {
  if (axioms.is_ccm()) return std::nullopt;
  Outcome o;
  o.exit_code = kViolation;
  o.results["axioms"] = axioms_json(axioms);
  o.summary = "input is not a ccm-magma";
  (void)m;
  return o;
}

Outcome cmd_check(const std::string& text) {
  const auto m = parse_magma(text);
  const auto axioms = check_axioms(m);
  Outcome o;
  o.results["order"] = m.order();
  o.results["axioms"] = axioms_json(axioms);
  o.results["idempotents"] = axioms.idempotents;
  o.results["idempotent_parity_ok"] = idempotent_parity_audit(m);
  o.results["idempotent_subalgebra"] =
      axioms.is_ccm() ? Json(idempotent_subalgebra(m)) : Json(nullptr);
  o.exit_code = axioms.is_ccm() ? kSuccess : kViolation;
  std::ostringstream s;
  s << "order " << m.order() << ": " << (axioms.is_ccm() ? "ccm-magma" : "not a ccm-magma")
    << ", " << (axioms.associative.holds() ? "associative" : "not associative") << ", "
    << axioms.idempotents.size() << " idempotent(s)";
  o.summary = s.str();
  return o;
}

Outcome cmd_classify(const std::string& text, Element e) {
  const auto m = parse_magma(text);
  const auto axioms = check_axioms(m);
  if (auto stop = require_ccm(m, axioms)) return *stop;
  require_element(m, e);
  const auto label = classify(finite_flags(m, e));
  Outcome o;
  o.results["order"] = m.order();
  o.results["unit"] = e;
  o.results["flags"] = flags_json(label.flags);
  o.results["label"] = to_string(label.label);
  o.summary = "unit " + std::to_string(e) + ": label " + std::string(to_string(label.label));
  return o;
}

Outcome cmd_generate(std::size_t order, std::uint64_t seed, const std::string& out_path) {
  const auto generated = generate_quasigroup(order, seed);
  const auto cayley = format_magma(generated.magma);
  const auto sidecar_path = out_path + ".toyoda.json";
  write_file(out_path, cayley);
  write_file(sidecar_path, nlohmann::json(generated.params).dump(2) + "\n");
  const auto axioms = check_axioms(generated.magma);
  Outcome o;
  o.results["order"] = order;
  o.results["seed"] = seed;
  o.results["group_factors"] = generated.params.group.factors;
  o.results["multipliers"] = generated.params.multipliers;
  o.results["translation"] = generated.params.translation;
  o.results["relabeling"] = generated.params.relabeling;
  o.results["idempotents"] = axioms.idempotents;
  o.results["ccm"] = axioms.is_ccm();
  o.results["files"] = Json{{"cayley", out_path}, {"params", sidecar_path}};
  o.results["cayley_digest"] = digest(cayley);
  o.exit_code = axioms.is_ccm() ? kSuccess : kViolation;
  o.summary = "wrote order-" + std::to_string(order) + " quasigroup to " + out_path;
  return o;
}

Outcome cmd_extract_group(const std::string& text, Element e, const std::string& out_path) {
  const auto m = parse_magma(text);
  const auto axioms = check_axioms(m);
  if (auto stop = require_ccm(m, axioms)) return *stop;
  require_element(m, e);
  Outcome o;
  const bool idempotent = m.op(e, e) == e;
  if (!idempotent)
    o.warnings.push_back("unit " + std::to_string(e) + " is not idempotent");
  const auto group = extract_group(m, e);
  if (!group) throw Error(ErrorKind::kNotAbelianGroup, "extracted table is not an abelian group");
  const auto factors = invariant_factors(*group);
  o.results["order"] = m.order();
  o.results["unit"] = e;
  o.results["unit_idempotent"] = idempotent;
  o.results["group"] = rows_json(*group);
  o.results["invariant_factors"] = factors;
  if (!out_path.empty()) {
    write_file(out_path, format_magma(*group));
    o.results["file"] = out_path;
  }
  std::string shape;
  for (auto d : factors) shape += (shape.empty() ? "Z" : " x Z") + std::to_string(d);
  o.summary = "group at unit " + std::to_string(e) + ": " + (shape.empty() ? "trivial" : shape);
  return o;
}

Outcome cmd_relation(const std::string& text, const std::string& subset, Element e,
                     const std::string& out_path) {
  const auto m = parse_magma(text);
  const auto axioms = check_axioms(m);
  if (auto stop = require_ccm(m, axioms)) return *stop;
  require_element(m, e);
  const auto seed = parse_elements(subset);
  for (auto x : seed) require_element(m, x);
  const auto closure = subalgebra_closure(m, seed);
  if (closure != seed) {
    std::string hint;
    for (auto x : closure) hint += (hint.empty() ? "" : ",") + std::to_string(x);
    return failure(ErrorKind::kNotClosed, "subset is not closed; its closure is {" + hint + "}",
                   Json{{"closure_hint", closure}});
  }
  const auto r = subalgebra_relation(m, seed, e);
  const auto congruence = is_congruence(r);
  const auto difunctional = is_difunctional(r);
  Outcome o;
  o.results["subalgebra"] = seed;
  o.results["unit"] = e;
  o.results["pairs"] = r.size();
  o.results["internal"] = verdict_json(congruence.internal);
  o.results["reflexive"] = verdict_json(congruence.reflexive);
  o.results["symmetric"] = verdict_json(congruence.symmetric);
  o.results["transitive"] = verdict_json(congruence.transitive);
  o.results["difunctional"] = verdict_json(difunctional);
  o.results["congruence"] = congruence.holds();
  o.results["transitivity_criterion"] = transitivity_criterion(m, seed, e);
  if (congruence.holds()) {
    const auto classes = equivalence_classes(r);
    o.results["classes"] = classes;
    o.results["class_count"] = classes.size();
  } else {
    o.results["classes"] = nullptr;
    o.results["class_count"] = nullptr;
  }
  if (!out_path.empty()) {
    write_file(out_path, format_relation(r));
    o.results["file"] = out_path;
  }
  // Internal and reflexive are theorems for every subalgebra relation.
  o.exit_code = congruence.internal.holds() && congruence.reflexive.holds() ? kSuccess : kViolation;
  o.summary = std::string(congruence.holds() ? "congruence" : "not a congruence") + ", " +
              std::to_string(r.size()) + " pairs";
  return o;
}

Json family_json(const ParametricFamily& f) {
  return Json{{"id", f.id},
              {"formula", f.formula},
              {"mode", to_string(f.mode)},
              {"domain", f.domain.to_string()},
              {"unit", rational_json(f.unit)},
              {"expected", label_json(f.expected)}};
}

Json evidence_json(const PropertyEvidence& p) {
  return Json{{"holds", p.holds()},
              {"analytic", p.analytic},
              {"sampled", p.sampled},
              {"witness", optional_text(p.witness)}};
}

Outcome cmd_catalog(const std::string& id, unsigned steps) {
  Outcome o;
  if (id.empty()) {
    Json list = Json::array();
    for (const auto& f : catalog()) list.push_back(family_json(f));
    o.results["families"] = std::move(list);
    o.summary = std::to_string(catalog().size()) + " families";
    return o;
  }
  const auto f = find_family(id);
  const auto samples = default_samples(f, steps);
  const auto report = sampled_axiom_check(f, samples);
  const auto idempotents = analytic_idempotents(f);
  Json points = Json::array();
  for (const auto& q : idempotents.points) points.push_back(to_string(q));

  o.results["family"] = family_json(f);
  o.results["samples"] = Json{{"steps", steps}, {"count", report.samples}};
  o.results["axioms"] = Json{{"m1", {{"holds", report.m1}, {"witness", optional_text(report.m1_witness)}}},
                             {"m2", {{"holds", report.m2}, {"witness", optional_text(report.m2_witness)}}},
                             {"m3", {{"holds", report.m3}, {"witness", optional_text(report.m3_witness)}}},
                             {"worst_residual", report.worst_residual},
                             {"closure_violations", report.closure_violations},
                             {"sampled_idempotents", report.sampled_idempotents}};
  o.results["analytic_idempotents"] = Json{{"all", idempotents.all}, {"points", points}};

  bool ok = report.holds();
  std::string summary = f.id + ": axioms " + (report.holds() ? "hold" : "fail") + " on " +
                        std::to_string(report.samples) + " samples";
  if (report.holds() && f.unit) {
    const auto c = classify_family(f, samples);
    Json classification{{"label", to_string(c.result.label)},
                        {"flags", flags_json(c.result.flags)},
                        {"expansive", evidence_json(c.expansive)},
                        {"symmetric", evidence_json(c.symmetric)},
                        {"monoid", evidence_json(c.monoid)},
                        {"expected", label_json(c.expected)},
                        {"matches", c.matches()}};
    if (c.result.flags.monoid) {
      const bool associative = star_associativity_check(f, samples);
      classification["star_associative"] = associative;
      ok = ok && associative;
    }
    o.results["classification"] = std::move(classification);
    ok = ok && c.matches();
    summary += ", label " + std::string(to_string(c.result.label));
    if (c.expected) summary += c.matches() ? " (matches)" : " (expected " + std::string(to_string(*c.expected)) + ")";
  } else {
    o.results["classification"] = nullptr;
  }
  if (f.id == "harmonic-(0,1]") {
    std::vector<Rational> eighths;
    for (long k = 1; k <= 8; ++k) eighths.push_back(make_rational(k, 8));
    const bool formula = monoid_formula_check(eighths);
    const bool half = half_has_no_inverse_check();
    o.results["monoid_formula"] = formula;
    o.results["half_has_no_inverse"] = half;
    ok = ok && formula && half;
  }
  o.exit_code = ok ? kSuccess : kViolation;
  o.summary = summary;
  return o;
}

}  // namespace

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commutative cancellative medial magmas: checks, classification, generation", "ccm"};
  app.require_subcommand(1);
  bool compact = false, quiet = false, no_timing = false;
  app.add_flag("--json", compact, "Compact single-line JSON");
  app.add_flag("--quiet", quiet, "No summary on stderr");
  app.add_flag("--no-timing", no_timing, "Omit the timing block");

  Invocation inv;
  std::string path, out_path, subset, family;
  Element unit = 0;
  std::size_t order = 0;
  std::uint64_t seed = 0;
  unsigned steps = 16;

  const auto file_command = [&](CLI::App* sub, auto&& body) {
    sub->fallthrough();
    sub->add_option("path", path, "Cayley table file")->required();
    sub->callback([&, sub, body] {
      inv.command = sub->get_name();
      inv.arguments["path"] = path;
      inv.body = [&, body](Invocation& self) {
        self.input = read_file(path);
        return body(*self.input);
      };
    });
  };

  auto* check = app.add_subcommand("check", "Axioms, associativity and idempotents");
  file_command(check, [](const std::string& text) { return cmd_check(text); });

  auto* classify_cmd = app.add_subcommand("classify", "Expansive/symmetric/monoid/group flags at a unit");
  classify_cmd->add_option("--unit", unit, "Idempotent unit e")->required();
  file_command(classify_cmd, [&](const std::string& text) {
    inv.arguments["unit"] = unit;
    return cmd_classify(text, unit);
  });

  auto* extract = app.add_subcommand("extract-group", "Abelian group with unit e");
  extract->add_option("--unit", unit, "Unit e")->required();
  extract->add_option("--out", out_path, "Write the group table here");
  file_command(extract, [&](const std::string& text) {
    inv.arguments["unit"] = unit;
    if (!out_path.empty()) inv.arguments["out"] = out_path;
    return cmd_extract_group(text, unit, out_path);
  });

  auto* relation = app.add_subcommand("relation", "Relation induced by a subalgebra");
  relation->add_option("--subalgebra", subset, "Comma-separated elements, e.g. 0,3,6")->required();
  relation->add_option("--unit", unit, "Idempotent e in the subalgebra")->required();
  relation->add_option("--out", out_path, "Write the relation grid here");
  file_command(relation, [&](const std::string& text) {
    inv.arguments["subalgebra"] = subset;
    inv.arguments["unit"] = unit;
    if (!out_path.empty()) inv.arguments["out"] = out_path;
    return cmd_relation(text, subset, unit, out_path);
  });

  auto* generate = app.add_subcommand("generate", "Random ccm-quasigroup in Toyoda form");
  generate->fallthrough();
  generate->add_option("--order", order, "Order n >= 1")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed, "RNG seed");
  generate->add_option("--out", out_path, "Cayley file; params go to <out>.toyoda.json")->required();
  generate->callback([&] {
    inv.command = "generate";
    inv.arguments = Json{{"order", order}, {"seed", seed}, {"out", out_path}};
    inv.body = [&](Invocation& self) {
      self.input = "order=" + std::to_string(order) + ";seed=" + std::to_string(seed);
      return cmd_generate(order, seed, out_path);
    };
  });

  auto* cat = app.add_subcommand("catalog", "Parametric families; lists ids without --family");
  cat->fallthrough();
  cat->add_option("--family", family, "Family id, e.g. harmonic-(0,1] or affine-Z:2,0");
  cat->add_option("--samples", steps, "Grid steps over the sample window")->check(CLI::PositiveNumber);
  cat->callback([&] {
    inv.command = "catalog";
    inv.arguments = Json{{"family", family.empty() ? Json(nullptr) : Json(family)}, {"samples", steps}};
    inv.body = [&](Invocation& self) {
      self.input = family;
      return cmd_catalog(family, steps);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = inv.body(inv);
  } catch (const Error& e) {
    outcome = failure(e.kind(), e.what());
    if (e.kind() == ErrorKind::kUnknownFamily) {
      Json ids = Json::array();
      for (const auto& f : catalog()) ids.push_back(f.id);
      outcome.error->operator[]("known_families") = std::move(ids);
    }
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  Json report;
  report["schema"] = kSchema;
  report["command"] = inv.command;
  report["arguments"] = inv.arguments;
  report["input_digest"] = inv.input ? Json(digest(*inv.input)) : Json(nullptr);
  report["status"] = outcome.exit_code == kSuccess ? "ok" : outcome.exit_code == kViolation ? "violation" : "error";
  report["exit_code"] = outcome.exit_code;
  report["results"] = outcome.error ? Json(nullptr) : outcome.results;
  report["error"] = outcome.error ? *outcome.error : Json(nullptr);
  report["warnings"] = outcome.warnings;
  if (!no_timing) report["timing"] = Json{{"elapsed_ms", elapsed.count()}};

  out << (compact ? report.dump() : report.dump(2)) << '\n';
  if (!quiet) {
    for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';
    err << inv.command << ": " << outcome.summary << '\n';
  }
  return outcome.exit_code;
}

}  // namespace ccm::cli
