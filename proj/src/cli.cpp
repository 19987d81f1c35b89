#include "stratsys/cli.hpp"

#include "stratsys/classifier.hpp"
#include "stratsys/homology.hpp"
#include "stratsys/io.hpp"
#include "stratsys/parallel.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <functional>
#include <iomanip>
#include <numeric>

namespace stratsys::cli {

namespace fs = std::filesystem;

namespace {

// Verdicts of a single record. "info" and "flagged" never fail a run;
// "inconclusive" does (a bounded search that proved nothing).
constexpr const char* kPass = "pass";
constexpr const char* kFail = "fail";
constexpr const char* kInfo = "info";
constexpr const char* kFlagged = "flagged";
constexpr const char* kInconclusive = "inconclusive";

Json dims_json(const DimVector& d) { return d.entries(); }

Json module_json(const Module& m) {
  return {{"name", m.name().empty() ? m.dims().to_string() : m.name()}, {"dims", dims_json(m.dims())}};
}

Json system_json(const StratSystem& s) {
  Json out = Json::array();
  for (const Module& m : s.modules) out.push_back(module_json(m));
  return out;
}

Json violation_json(const Violation& v) {
  Json out = {{"axiom", v.axiom}};
  if (v.j) out["j"] = *v.j;
  if (v.i) out["i"] = *v.i;
  if (v.value) out["value"] = *v.value;
  out["message"] = v.message;
  return out;
}

Json record(const std::string& name, const char* verdict, std::string summary = {}) {
  return {{"name", name}, {"verdict", verdict}, {"summary", std::move(summary)},
          {"violations", Json::array()}, {"notes", Json::array()}, {"data", Json::object()}};
}

Json record(const std::string& name, const CheckReport& report, std::string summary = {}) {
  if (summary.empty() && !report.passed()) summary = report.violations().front().message;
  Json r = record(name, report.passed() ? kPass : kFail, std::move(summary));
  for (const auto& v : report.violations()) r["violations"].push_back(violation_json(v));
  for (const auto& n : report.notes()) r["notes"].push_back(n);
  return r;
}

Json family_record(const FamilyInstance& f) {
  CheckReport report = f.report;
  for (const auto& d : f.discrepancies) report.fail("discrepancy", d);
  if (f.completions && *f.completions != 1)
    report.fail(Violation{"uniqueness", std::nullopt, std::nullopt, static_cast<long long>(*f.completions),
                          std::to_string(*f.completions) + " completions of the remaining members"});
  if (f.first_recovered && !*f.first_recovered) report.fail("recovery", "the completion differs from the listed first member");
  Json r = record(f.label(), report, f.system.to_string());
  Json j = {{"family", f.family}, {"params", Json::object()}};
  for (const auto& [k, v] : f.params) j["params"][k] = v;
  j["modules"] = system_json(f.system);
  if (f.completions) j["completions"] = *f.completions;
  if (f.first_recovered) j["first_recovered"] = *f.first_recovered;
  r["data"] = j;
  return r;
}

std::string join(const std::set<VertexLabel>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

Json vertex_map_json(const std::map<int, std::set<VertexLabel>>& m) {
  Json out = Json::object();
  for (const auto& [t, vs] : m) out[std::to_string(t)] = std::vector<VertexLabel>(vs.begin(), vs.end());
  return out;
}

struct Options {
  bool json = false;
  bool timing = false;
  unsigned jobs = 1;
  long long seed = 0;
};

// ---- command bodies; each returns the list of records ----

Json cmd_quiver(const std::string& action, const std::string& file) {
  const Quiver q = load_quiver(file);
  const CheckReport report = validate(q);
  Json details = Json::array();
  if (action == "validate" || !report.passed()) {
    Json r = record("validate", report, report.passed() ? "valid quiver" : "");
    r["data"] = {{"vertices", q.vertex_count()}, {"arrows", q.arrow_count()}, {"quiver", quiver_to_json(q)}};
    details.push_back(r);
  }
  if (action == "classify" && report.passed()) {
    const QuiverClass c = classify_type(q);
    Json r = record("classify", kInfo, to_string(c));
    r["data"]["class"] = to_string(c);
    if (c == QuiverClass::Euclidean) r["data"]["null_root"] = dims_json(null_root(q));
    details.push_back(r);
  }
  return details;
}

Json cmd_rep(const std::string& action, const std::string& x_file, const std::string& y_file) {
  LoadedModule x = load_module(x_file);
  ModuleSpace& space = x.workspace->space();
  Json details = Json::array();
  if (action == "supp") {
    std::set<VertexLabel> s;
    const auto& vs = space.quiver().vertices();
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (x.module.dims()[v] != 0) s.insert(vs[v]);
    Json r = record("supp " + x.module.name(), kInfo, join(s));
    r["data"] = {{"support", std::vector<VertexLabel>(s.begin(), s.end())}, {"sincere", s.size() == vs.size()},
                 {"dims", dims_json(x.module.dims())}};
    details.push_back(r);
    return details;
  }
  if (y_file.empty()) throw InputError("rep " + action + ": a second module file is required");
  const Module y = load_module_into(y_file, *x.workspace);
  const bool hom = action == "hom";
  const std::size_t d = hom ? space.hom_dim(x.module, y) : space.ext1_dim(x.module, y);
  const std::string name = (hom ? "Hom(" : "Ext^1(") + x.module.name() + "," + y.name() + ")";
  Json r = record(name, kInfo, "dim " + std::to_string(d));
  r["data"]["dim"] = d;
  details.push_back(r);
  return details;
}

Json cmd_ar(const std::string& action, const std::string& file, int k) {
  LoadedModule x = load_module(file);
  ModuleSpace& space = x.workspace->space();
  Json details = Json::array();
  if (action == "pos") {
    const ArPosition pos = space.position(x.module);
    Json r = record("position " + x.module.name(), kInfo, pos.to_string());
    const char* kind = pos.kind == ArPosition::Kind::Preprojective  ? "preprojective"
                       : pos.kind == ArPosition::Kind::Preinjective ? "preinjective"
                                                                    : "regular";
    r["data"] = {{"kind", kind}, {"certified", pos.certified}};
    if (pos.kind != ArPosition::Kind::Regular) {
      r["data"]["vertex"] = pos.vertex;
      r["data"]["k"] = pos.k;
    }
    details.push_back(r);
    return details;
  }
  const int steps = action == "tau" ? k : -k;
  const Representation& m = x.module.rep();
  const Representation image = tau_power(m, steps);
  const std::string name = (action == "tau" ? "tau^" : "tau^-") + std::to_string(k) + " " + x.module.name();
  // For an indecomposable M with tau^k M nonzero, dim tau^k M = Phi^k dim M.
  CheckReport report(name);
  const bool checkable = !image.is_zero() && is_brick(m);
  const DimVector expected = space.coxeter().power(m.dims(), steps);
  if (checkable && !(expected == image.dims()))
    report.fail("coxeter", "dims " + image.dims().to_string() + " differ from Phi^" + std::to_string(steps) + " dim M = " +
                               expected.to_string());
  Json r = checkable ? record(name, report, image.dims().to_string()) : record(name, kInfo, image.dims().to_string());
  if (!checkable) r["notes"].push_back(image.is_zero() ? "zero" : "M is not a brick; Coxeter check skipped");
  r["data"] = {{"dims", dims_json(image.dims())}, {"representation", representation_to_json(image)}};
  details.push_back(r);
  return details;
}

Json cmd_ss(const std::string& action, const std::string& file, int bound) {
  LoadedSystem loaded = load_system(file);
  ModuleSpace& space = loaded.workspace->space();
  const StratSystem& s = loaded.system;
  Json details = Json::array();
  if (action == "check" || action == "css") {
    const CheckReport report = action == "check" ? check_ss(space, s) : check_css(space, s);
    Json r = record(action == "check" ? "check_ss" : "check_css", report, report.passed() ? s.to_string() : "");
    r["data"] = {{"size", s.size()}, {"vertices", space.quiver().vertex_count()}, {"modules", system_json(s)}};
    details.push_back(r);
    return details;
  }
  const CheckReport base = check_ss(space, s);
  if (action == "filtfinite") {
    details.push_back(record("check_ss", base, base.passed() ? s.to_string() : ""));
    if (base.passed()) {
      const bool finite = is_filtration_finite(space, s);
      Json r = record("filtration_finite", kInfo, finite ? "finite" : "infinite");
      r["data"]["finite"] = finite;
      details.push_back(r);
    }
    return details;
  }
  ExtendOptions eo;
  eo.exponent_bound = bound;
  if (Apq* apq = loaded.workspace->apq())
    for (const TubeLabel& t : {TubeLabel::infty(), TubeLabel::zero()})
      for (int i = 1; i <= apq->rank(t); ++i) eo.extra_candidates.push_back(apq->mouth(t, i));
  const ExtendResult result = extend_to_complete(space, s, eo);
  Json r = result.first ? record("extend", kPass, result.first->to_string())
                        : record("extend", kFail, result.notes.empty() ? "no completion" : result.notes.front());
  if (!result.first) r["violations"].push_back({{"axiom", "extend"}, {"message", r["summary"]}});
  for (const auto& n : result.notes)
    if (n != r["summary"]) r["notes"].push_back(n);
  if (result.first) r["data"]["completion"] = system_json(*result.first);
  if (result.single_slot_solutions) r["data"]["single_slot_solutions"] = *result.single_slot_solutions;
  if (result.uniqueness_violated) {
    r["verdict"] = kFail;
    r["violations"].push_back({{"axiom", "uniqueness"}, {"message", "more than one module completes the open slot"}});
  }
  details.push_back(r);
  return details;
}

Json cmd_kron(const std::string& action, int m, int bound, long long cap) {
  if (m < 1) throw InputError("--m must be at least 1");
  ModuleSpace space(std::make_shared<const Quiver>(kronecker(m)));
  Json details = Json::array();
  if (action == "list") {
    for (const auto& f : kronecker_css_list(space, bound)) details.push_back(family_record(f));
    return details;
  }
  if (cap < 0) cap = m == 2 ? 9 : 13;
  const KroneckerEnumeration e = enumerate_css_kronecker(space, cap);
  Json r = record("enumerate cap " + std::to_string(cap), e.consistent() ? kPass : kFail,
                  std::to_string(e.found.size()) + " complete systems, " + std::to_string(e.missing.size()) + " missing, " +
                      std::to_string(e.extras.size()) + " extra");
  for (const auto& f : e.missing) r["violations"].push_back({{"axiom", "missing"}, {"message", f.label() + " " + f.system.to_string()}});
  if (e.unexplained_flags)
    r["violations"].push_back({{"axiom", "unlisted"}, {"value", e.unexplained_flags}, {"message", "systems or roots outside the list"}});
  for (const auto& flag : e.flags) r["notes"].push_back(flag);
  Json found = Json::array();
  for (const auto& s : e.found) found.push_back(system_json(s));
  r["data"] = {{"pool", e.pool.size()}, {"imaginary_vectors", e.imaginary_vectors}, {"found", found}};
  details.push_back(r);
  for (const auto& s : e.extras) {
    const bool explained = e.flags.size() && s.size() == 2 && s.modules[0].dims() == space.preinjective(2, 1).dims() &&
                           s.modules[1].dims() == space.preinjective(1, 0).dims();
    Json x = record("extra " + s.to_string(), explained ? kFlagged : kFail, explained ? "i = 0 member of family 5" : "unlisted");
    if (!explained) x["violations"].push_back({{"axiom", "unlisted"}, {"message", "complete system outside the list"}});
    x["data"]["modules"] = system_json(s);
    details.push_back(x);
  }
  return details;
}

Json cmd_apq(const std::string& action, int p, int q, int tbound, int kmax, bool uniqueness, unsigned jobs) {
  if (p < 1 || q < p) throw InputError("need 1 <= --p <= --q");
  Apq apq(p, q);
  Json details = Json::array();
  if (action == "families") {
    FamilyOptions fo;
    fo.t_bound = tbound;
    fo.check_uniqueness = uniqueness;
    fo.jobs = jobs;
    for (const auto& f : apq_families(apq, fo)) details.push_back(family_record(f));
  } else if (action == "ysearch-post" || action == "ysearch-pre") {
    const bool post = action == "ysearch-post";
    const YSearchResult y = post ? y_search_postprojective(apq, tbound, jobs) : y_search_preinjective(apq, tbound, jobs);
    Json r = record(post ? "postprojective Y" : "preinjective Y", y.report);
    r["data"] = {{"found", vertex_map_json(y.found)}, {"expected", vertex_map_json(y.expected)}};
    details.push_back(r);
  } else if (action == "sincerity") {
    const SincerityProfile prof = sincerity_profile(apq, kmax);
    for (const auto& c : prof.claims) {
      const char* verdict = c.holds ? kPass : (c.edge_range ? kFlagged : kFail);
      Json r = record(c.id, verdict, c.statement);
      for (const auto& ce : c.counterexamples) r[c.edge_range ? "notes" : "violations"].push_back(
          c.edge_range ? Json(ce) : Json{{"axiom", c.id}, {"message", ce}});
      if (r["verdict"] == kFail && r["violations"].empty()) r["violations"].push_back({{"axiom", c.id}, {"message", "claim fails"}});
      details.push_back(r);
    }
    Json minimal = Json::object();
    for (const auto& [key, r] : prof.minimal_r)
      minimal[(key.first == 0 ? "post " : "pre ") + std::to_string(key.second)] = r ? Json(*r) : Json(nullptr);
    Json r = record("minimal r", kInfo, "k <= " + std::to_string(kmax));
    r["data"]["minimal_r"] = minimal;
    details.push_back(r);
  } else {
    details.push_back(record("tau cycles", verify_tau_cycles(apq)));
    for (const TubeLabel& t : {TubeLabel::infty(), TubeLabel::zero()}) {
      const StratSystem s = apq.mouth_ss(t);
      CheckReport report = check_ss(apq.space(), s);
      if (static_cast<int>(s.size()) != apq.rank(t) - 1)
        report.fail(Violation{"size", std::nullopt, std::nullopt, static_cast<long long>(s.size()), "mouth system size differs from rank - 1"});
      Json r = record("mouth system " + t.to_string(), report, s.to_string());
      r["data"]["size"] = s.size();
      details.push_back(r);
      if (apq.rank(t) <= 4) {
        const RigidBoundResult b = tube_rigid_bound_check(apq, t);
        Json rb = record("rigid bound " + t.to_string(), b.report,
                         std::to_string(b.disjoint_cone_sets) + " disjoint-cone sets");
        rb["data"] = {{"points", b.points}, {"rigid_points", b.rigid_points}, {"orthogonal_sets", b.orthogonal_sets},
                      {"disjoint_cone_sets", b.disjoint_cone_sets}, {"largest_set", b.largest_set}};
        details.push_back(rb);
      }
    }
    const int n_max = 2 * std::lcm(p, q);
    Json r = record("support formula", verify_support_formula(apq, n_max), "|n| <= " + std::to_string(n_max));
    details.push_back(r);
  }
  return details;
}

Json cmd_wild(const std::string& file, long long cap) {
  const Quiver q = load_quiver(file);
  const CheckReport valid = validate(q);
  if (!valid.passed()) throw InputError(file + ": invalid quiver (" + valid.first_failure() + ")");
  ModuleSpace space(std::make_shared<const Quiver>(q));
  const RegularCssResult result = regular_css_search(space, cap);
  Json r = result.witness ? record("regular c.s.s.", kPass, result.witness->to_string())
                          : record("regular c.s.s.", kInconclusive, result.note);
  if (!result.note.empty()) r["notes"].push_back(result.note);
  r["data"] = {{"pool", result.pool.size()}, {"real_roots", result.real_roots}};
  if (result.witness) r["data"]["witness"] = system_json(*result.witness);
  Json details = Json::array();
  details.push_back(r);
  return details;
}

bool failing(const Json& r) {
  const std::string v = r["verdict"];
  return v == kFail || v == kInconclusive;
}

void print_table(std::ostream& out, const Json& report) {
  out << "command: " << report["command"]["line"].get<std::string>() << "\n";
  std::size_t width = 4;
  for (const auto& r : report["details"]) width = std::max(width, r["name"].get<std::string>().size());
  for (const auto& r : report["details"]) {
    std::string v = r["verdict"];
    for (auto& c : v) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << std::left << std::setw(13) << v << std::setw(static_cast<int>(width) + 2) << r["name"].get<std::string>()
        << r["summary"].get<std::string>() << "\n";
    for (const auto& v2 : r["violations"]) out << "    violation " << v2["axiom"].get<std::string>() << ": " << v2["message"].get<std::string>() << "\n";
    for (const auto& n : r["notes"]) out << "    note: " << n.get<std::string>() << "\n";
  }
  std::size_t bad = 0;
  for (const auto& r : report["details"]) bad += failing(r);
  out << "verdict: " << report["verdict"].get<std::string>() << " (" << report["details"].size() << " records, " << bad
      << " failing)\n";
  if (report["timing"].contains("wall_ms")) out << "time: " << report["timing"]["wall_ms"].get<long long>() << " ms\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stratifying systems over quiver path algebras", "stratsys"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  opt.jobs = default_jobs();
  app.add_flag("--json", opt.json, "Print the report as JSON");
  app.add_flag("--timing", opt.timing, "Include wall-clock time in the report");
  app.add_option("--jobs", opt.jobs, "Worker threads for the classifier (default: STRATSYS_JOBS or 1)")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", opt.seed, "Reserved; no operation is randomized");

  std::function<Json()> body;
  std::string action, file, file2;
  int k = 1, m = 2, bound = -1, p = 0, q = 0, tbound = 12, kmax = 8;
  long long cap = -1;
  bool no_uniqueness = false;

  auto group = [&](const std::string& name, const std::string& help, std::vector<std::string> actions) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    std::vector<CLI::App*> subs;
    for (const auto& a : actions) {
      CLI::App* s = g->add_subcommand(a);
      s->callback([&action, a] { action = a; });
      subs.push_back(s);
    }
    return subs;
  };

  for (CLI::App* s : group("quiver", "Validate or classify a quiver file", {"validate", "classify"})) {
    s->add_option("file", file, "Quiver JSON")->required();
    s->get_parent()->callback([&] { body = [&] { return cmd_quiver(action, file); }; });
  }
  for (CLI::App* s : group("rep", "Hom, Ext^1 and support of module files", {"hom", "ext", "supp"})) {
    s->add_option("X", file, "Module JSON")->required();
    s->add_option("Y", file2, "Second module JSON (hom, ext)");
    s->get_parent()->callback([&] { body = [&] { return cmd_rep(action, file, file2); }; });
  }
  for (CLI::App* s : group("ar", "Auslander-Reiten translate and position", {"tau", "tauinv", "pos"})) {
    s->add_option("X", file, "Module JSON")->required();
    s->add_option("--k", k, "Number of steps")->check(CLI::Range(0, 1000));
    s->get_parent()->callback([&] { body = [&] { return cmd_ar(action, file, k); }; });
  }
  for (CLI::App* s : group("ss", "Stratifying-system files", {"check", "css", "extend", "filtfinite"})) {
    s->add_option("file", file, "System JSON")->required();
    if (s->get_name() == "extend") s->add_option("--bound", bound, "Orbit exponent bound of the candidate pool (default 6)");
    s->get_parent()->callback([&] { body = [&] { return cmd_ss(action, file, bound < 0 ? 6 : bound); }; });
  }
  for (CLI::App* s : group("kron", "Generalized Kronecker classification", {"list", "enumerate"})) {
    s->add_option("--m", m, "Number of arrows")->required();
    if (s->get_name() == "list") s->add_option("--bound", bound, "Largest exponent (default 6)");
    else s->add_option("--cap", cap, "Bound on every dimension entry (default 9 for m = 2, else 13)");
    s->get_parent()->callback([&] { body = [&] { return cmd_kron(action, m, bound < 0 ? 6 : bound, cap); }; });
  }
  for (CLI::App* s : group("apq", "Canonical A~(p,q) verifications",
                           {"families", "ysearch-post", "ysearch-pre", "sincerity", "tubes"})) {
    s->add_option("--p", p)->required();
    s->add_option("--q", q)->required();
    s->add_option("--tbound", tbound, "Largest t (default 12)")->check(CLI::Range(0, 1000));
    if (s->get_name() == "sincerity") s->add_option("--kmax", kmax, "Largest k (default 8)")->check(CLI::Range(0, 1000));
    if (s->get_name() == "families") s->add_flag("--no-uniqueness", no_uniqueness, "Skip the completion uniqueness check");
    s->get_parent()->callback([&] {
      body = [&] { return cmd_apq(action, p, q, tbound, kmax, !no_uniqueness, opt.jobs); };
    });
  }
  for (CLI::App* s : group("wild", "Regular complete systems over wild quivers", {"regcss"})) {
    s->add_option("quiver", file, "Quiver JSON")->required();
    s->add_option("--cap", cap, "Bound on every dimension entry")->required();
    s->get_parent()->callback([&] { body = [&] { return cmd_wild(file, cap); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Json report;
  Json argv_json = Json::array();
  std::string line;
  for (int a = 1; a < argc; ++a) {
    argv_json.push_back(argv[a]);
    line += (a > 1 ? " " : "") + std::string(argv[a]);
  }
  report["command"] = {{"argv", argv_json}, {"line", line}};
  const auto start = std::chrono::steady_clock::now();
  try {
    report["details"] = body();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  bool ok = true;
  for (const auto& r : report["details"]) ok = ok && !failing(r);
  report["verdict"] = ok ? kPass : kFail;
  report["timing"] = {{"measured", opt.timing}};
  if (opt.timing)
    report["timing"]["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (opt.json) out << report.dump(2) << "\n";
  else print_table(out, report);
  return ok ? kExitPass : kExitFail;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"stratsys"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace stratsys::cli
