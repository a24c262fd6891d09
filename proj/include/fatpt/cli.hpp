#pragma once

// Command-line front end. Needs CLI11 and nlohmann/json on the include path.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatpt/builtin.hpp"

namespace fatpt::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2 };

struct Options {
  std::string scheme;
  std::size_t k = 0;
  std::string claim;
  std::string subject;
  unsigned window = 0;
  bool windowSet = false;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::size_t point = 0;
  std::string subset;
  unsigned l = 1;
};

inline FatPointScheme loadScheme(const std::string& path) {
  if (path.empty()) throw Error("--scheme FILE is required");
  std::ifstream in(path);
  if (!in) throw Error("cannot open scheme file '" + path + "'");
  try {
    return parseScheme(in);
  } catch (const SchemeFormatError& e) {
    throw Error(path + ": " + e.what());
  }
}

inline nlohmann::ordered_json toJson(const HilbertFunction& hf) {
  std::vector<long long> v;
  for (long d = 0; d <= hf.stableFrom() + 1; ++d) v.push_back(hf(d));
  return {{"values", v}, {"stable_from", hf.stableFrom()}, {"stable_value", *hf.stableValue()}};
}

inline nlohmann::ordered_json toJson(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claimId;
  j["status"] = r.status == Status::Holds ? "holds" : r.status == Status::Fails ? "fails" : "holds-from-degree";
  if (r.status == Status::HoldsFromDegree) j["from_degree"] = r.fromDegree;
  j["schemes"] = r.schemes;
  if (r.witness) j["witness"] = {{"d", r.witness->degree}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  if (r.expectFailure) j["expected"] = "fails";
  j["heuristic"] = r.heuristic;
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.details) d[k] = v;
  j["details"] = d;
  return j;
}

inline int cmdHf(const Options& o, std::ostream& out) {
  FatPointScheme W = loadScheme(o.scheme);
  HilbertFunction hf = hilbertFunction(W.ideal());
  if (o.format == "structured") {
    auto j = toJson(hf);
    j["deg"] = schemeDegree(W);
    j["ri"] = regularityIndex(hf);
    out << j.dump() << "\n";
  } else {
    out << formatHilbertFunction(hf) << "\n";
    out << "deg=" << schemeDegree(W) << " ri=" << regularityIndex(hf) << "\n";
  }
  return kOk;
}

inline int cmdKaehler(const Options& o, std::ostream& out) {
  FatPointScheme W = loadScheme(o.scheme);
  if (o.k < 1 || o.k > W.dimension() + 1)
    throw Error("-k must lie in 1.." + std::to_string(W.dimension() + 1));
  HilbertFunction hf = kaehlerHilbertFunction(W, o.k);
  if (o.format == "structured") {
    auto j = toJson(hf);
    j["k"] = o.k;
    j["HP"] = *hf.stableValue();
    j["ri"] = regularityIndex(hf);
    out << j.dump() << "\n";
  } else {
    out << formatHilbertFunction(hf) << "\n";
    out << "HP=" << *hf.stableValue() << " ri=" << regularityIndex(hf) << "\n";
  }
  return kOk;
}

inline const std::map<std::string, std::string>& claimAliases() {
  static const std::map<std::string, std::string> m{
      {"theorem", "thm-3.7"},    {"bounds", "prop-3.1"},   {"product", "prop-2.6b"}, {"colon", "prop-2.6a"},
      {"chain", "prop-3.5"},     {"jacobian", "lem-2.11"}, {"top-form", "cor-2.12"}, {"separators", "lem-2.3"},
      {"exactness", "prop-4.3"}, {"p2", "prop-4.1"},       {"regularity", "rem-4.2"}, {"lemma", "lem-3.3"},
  };
  return m;
}

/// Claims of one scheme, by id ("all" for every applicable one).
inline std::vector<VerificationReport> verifyScheme(const FatPointScheme& W, const std::string& id, const Options& o) {
  std::size_t n = W.dimension();
  unsigned window = o.windowSet ? o.window : static_cast<unsigned>(n + 3);
  std::vector<VerificationReport> out;
  bool all = id == "all";
  auto want = [&](const char* c) { return all || id == c; };
  bool known = all;
  auto p2only = [&](const char* c) {
    if (n != 2 && !all) throw Error(std::string(c) + " needs a scheme in P^2");
    return n == 2;
  };
  if (want("thm-3.7")) known = true, out.push_back(verifyMainTheorem(W));
  if (want("prop-3.1")) {
    known = true;
    if (o.k != 0) {
      if (o.k > n + 1) throw Error("-k must lie in 1.." + std::to_string(n + 1));
      out.push_back(verifyHPBounds(W, o.k));
    } else {
      for (std::size_t k = 1; k <= n + 1; ++k) out.push_back(verifyHPBounds(W, k));
    }
  }
  if (want("prop-2.6a")) known = true, out.push_back(verifyColonIdentity(W));
  if (want("prop-2.6b")) known = true, out.push_back(verifyProductIntersection(W));
  if (id == "lem-3.3" || (all && !o.subset.empty())) {
    known = true;
    if (o.subset.empty()) throw Error("lem-3.3 needs --subset FILE for Y");
    FatPointScheme Y = loadScheme(o.subset);
    unsigned k = o.k == 0 ? 1 : static_cast<unsigned>(o.k);
    out.push_back(verifyDerivativeInclusion(W, Y, k, o.l, window));
  }
  if (want("prop-3.5")) known = true, out.push_back(verifyDerivativeInclusion(n, multiplicityChain(W), window, "prop-3.5"));
  if (want("lem-2.11")) known = true, out.push_back(verifyJacobianStability(W, window));
  if (want("cor-2.12")) known = true, out.push_back(verifyTopFormPaths(W));
  if (want("lem-2.3")) known = true, out.push_back(verifySeparators(W));
  if (want("prop-4.1") && (known = true, p2only("prop-4.1"))) out.push_back(verifyP2Formulas(W));
  if (want("rem-4.2") && (known = true, p2only("rem-4.2"))) out.push_back(verifyP2RegularityBounds(W));
  if (want("prop-4.3") && (known = true, p2only("prop-4.3"))) out.push_back(verifyComplexExactness(W));
  if (!known) throw Error("unknown claim '" + id + "'");
  return out;
}

inline int cmdVerify(const Options& o, std::ostream& out) {
  std::string subject = o.subject.empty() ? "all" : o.subject;
  if (!o.claim.empty() && !o.subject.empty()) throw Error("give either a claim name or --claim, not both");
  std::string id = !o.claim.empty() ? o.claim : subject;
  if (auto it = claimAliases().find(id); it != claimAliases().end()) id = it->second;

  std::vector<std::pair<std::string, VerificationReport>> reports;
  if (id == "sweep") {
    std::size_t i = 0;
    for (const auto& W : randomSweep(o.seed, 50)) {
      std::string tag = "sweep[" + std::to_string(i++) + "]";
      reports.emplace_back(tag, verifyMainTheorem(W));
      reports.emplace_back(tag, verifyColonIdentity(W));
      for (std::size_t k = 1; k <= W.dimension() + 1; ++k) reports.emplace_back(tag, verifyHPBounds(W, k));
    }
  } else {
    FatPointScheme W = loadScheme(o.scheme);
    for (auto& r : verifyScheme(W, id, o)) reports.emplace_back("", std::move(r));
  }

  bool ok = true;
  for (const auto& [tag, r] : reports) {
    ok = ok && r.holds();
    if (o.format == "structured") {
      auto j = toJson(r);
      if (!tag.empty()) j["instance"] = tag;
      out << j.dump() << "\n";
    } else {
      out << formatReport(r) << "\n";
    }
  }
  return ok ? kOk : kFailed;
}

inline int cmdExample(const Options& o, std::ostream& out) {
  if (o.subject.empty()) {
    for (const auto& name : exampleNames()) out << name << "\n";
    return kOk;
  }
  auto names = exampleNames();
  if (std::find(names.begin(), names.end(), o.subject) == names.end())
    throw Error("unknown example '" + o.subject + "'");
  ExampleResult e = builtinExample(o.subject);
  if (o.format == "structured") {
    nlohmann::ordered_json j;
    j["example"] = e.name;
    j["title"] = e.title;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : e.rows) {
      nlohmann::ordered_json row{{"label", r.label}, {"computed", r.computed}};
      if (r.expected) row["expected"] = *r.expected;
      row["verbatim"] = r.verbatim;
      j["rows"].push_back(row);
    }
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& r : e.reports) j["claims"].push_back(toJson(r));
    out << j.dump() << "\n";
  } else {
    out << formatExample(e);
  }
  return e.ok() ? kOk : kFailed;
}

inline int cmdSeparators(const Options& o, std::ostream& out) {
  FatPointScheme W = loadScheme(o.scheme);
  if (o.point < 1 || o.point > W.size())
    throw Error("--point must lie in 1.." + std::to_string(W.size()));
  auto seps = separators(W, o.point - 1);
  if (o.format == "structured") {
    std::vector<std::string> s;
    for (const auto& f : seps) s.push_back(toString(f));
    out << nlohmann::ordered_json{{"point", o.point}, {"separators", s}}.dump() << "\n";
  } else {
    for (const auto& f : seps) out << toString(f) << "\n";
  }
  return kOk;
}

/// Parses argv and runs one command. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions of fat point schemes and their Kaehler differential modules", "fatpt"};
  app.require_subcommand(1);
  Options o;

  auto addScheme = [&](CLI::App* c) { c->add_option("--scheme", o.scheme, "scheme file")->check(CLI::ExistingFile); };
  auto addFormat = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };

  auto* hf = app.add_subcommand("hf", "Hilbert function of R_W");
  addScheme(hf);
  addFormat(hf);

  auto* ka = app.add_subcommand("kaehler", "Hilbert function of the Kaehler differential k-forms");
  addScheme(ka);
  ka->add_option("-k", o.k, "form degree")->required();
  addFormat(ka);

  auto* ve = app.add_subcommand("verify", "check claims on a scheme, or 'sweep' over random schemes");
  ve->add_option("name", o.subject, "claim alias, claim id, 'all' or 'sweep'");
  addScheme(ve);
  ve->add_option("-k", o.k, "form degree for the bounds check");
  ve->add_option("--claim", o.claim, "claim id");
  ve->add_option("--subset", o.subset, "second scheme Y for lem-3.3")->check(CLI::ExistingFile);
  ve->add_option("-l", o.l, "exponent of I_Y for lem-3.3");
  ve->add_option("--window", o.window, "extra degrees scanned for eventual inclusions");
  ve->add_option("--seed", o.seed, "seed of the random sweep");
  addFormat(ve);

  auto* ex = app.add_subcommand("example", "reproduce a built-in example; no name lists them");
  ex->add_option("name", o.subject, "example name");
  addFormat(ex);

  auto* se = app.add_subcommand("separators", "a minimal set of separators of one point");
  addScheme(se);
  se->add_option("--point", o.point, "1-based point index")->required();
  addFormat(se);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fatpt: " << e.what() << "\n";
    return kUsage;
  }
  o.windowSet = ve->count("--window") > 0;

  try {
    if (*hf) return cmdHf(o, out);
    if (*ka) return cmdKaehler(o, out);
    if (*ve) return cmdVerify(o, out);
    if (*ex) return cmdExample(o, out);
    if (*se) return cmdSeparators(o, out);
  } catch (const Error& e) {
    err << "fatpt: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fatpt::cli
