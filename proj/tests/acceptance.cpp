// Acceptance run: one PASS/FAIL line per criterion, indented detail lines below it.
//
// Exit status: 0 when the set of failing criteria equals the set given with
// --known-failures (empty by default), 1 otherwise.

#include "stratsys/classifier.hpp"
#include "stratsys/homology.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace stratsys;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { details.push_back(text); }
};

std::shared_ptr<const Quiver> shared(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

// Non-projective modules met in criteria 1 and 2, for criterion 4.
std::vector<Representation> generated_modules;

void remember(const Module& m, long long max_total) {
  if (!m.is_zero() && m.total_dim() <= max_total) generated_modules.push_back(m.rep());
}

// Complete systems found by the Kronecker enumerations, for criterion 10.
struct FoundSystems {
  ModuleSpace* space;
  std::vector<StratSystem> systems;
};
std::vector<FoundSystems> kronecker_found;
std::vector<std::unique_ptr<ModuleSpace>> kronecker_spaces;

void criterion1(Criterion& c) {
  for (int m : {2, 3}) {
    kronecker_spaces.push_back(std::make_unique<ModuleSpace>(shared(kronecker(m))));
    ModuleSpace& space = *kronecker_spaces.back();
    const auto list = kronecker_css_list(space, 6);
    std::size_t passing = 0;
    for (const auto& f : list) {
      passing += f.passed();
      c.require(f.passed(), "Kronecker(" + std::to_string(m) + ") " + f.label() + " " + f.report.first_failure());
      for (const auto& x : f.system.modules) remember(x, m == 2 ? 40 : 30);
    }
    const long long cap = m == 2 ? 9 : 13;
    const KroneckerEnumeration e = enumerate_css_kronecker(space, cap);
    c.require(e.consistent(), "Kronecker(" + std::to_string(m) + ") enumeration disagrees with the list");
    for (const auto& x : e.pool) remember(x, m == 2 ? 40 : 30);
    std::ostringstream line;
    line << "Kronecker(" << m << "): " << passing << "/" << list.size() << " listed instances pass; cap " << cap << ": "
         << e.found.size() << " complete pairs, " << e.missing.size() << " missing, " << e.extras.size() << " extra, "
         << e.imaginary_vectors << " imaginary vectors";
    c.note(line.str());
    for (const auto& f : e.flags) c.note("flag: " + f);
    kronecker_found.push_back({&space, e.found});
  }
}

void criterion2(Criterion& c) {
  const std::vector<Rational> lambdas{1, 2, Rational(1, 2), -1};
  for (int m : {2, 3}) {
    ModuleSpace& space = *kronecker_spaces[static_cast<std::size_t>(m - 2)];
    std::ostringstream line;
    line << "Kronecker(" << m << ") dim Ext^1(R,R) for dims (1,1):";
    for (const auto& [lambda, ext] : kronecker_thin_self_ext(space, lambdas)) {
      c.require(ext >= 1, "lambda " + to_string(lambda) + " has no self-extension");
      line << " " << to_string(lambda) << "->" << ext;
    }
    c.note(line.str());
    for (const Rational& lambda : lambdas) {
      std::vector<RationalMatrix> maps(static_cast<std::size_t>(m), RationalMatrix{{0}});
      maps[0] = RationalMatrix{{1}};
      maps[1] = RationalMatrix{{lambda}};
      generated_modules.emplace_back(space.quiver_ptr(), DimVector{1, 1}, maps);
    }
  }
  // Every real root below the cap sits on a preprojective or preinjective orbit.
  ModuleSpace& k2 = *kronecker_spaces[0];
  const KroneckerEnumeration e = enumerate_css_kronecker(k2, 9);
  c.require(e.regular_real_roots.empty(), "Kronecker(2) has a regular real root");
}

void criterion3(Criterion& c) {
  std::mt19937_64 rng(20240601);
  for (Quiver q : {kronecker(2), kronecker(3), canonical_apq(2, 3)}) {
    auto sq = shared(q);
    std::uniform_int_distribution<int> dim(0, 2);
    std::size_t pairs = 0, agree = 0;
    for (int t = 0; t < 120; ++t) {
      DimVector dx(q.vertex_count()), dy(q.vertex_count());
      for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        dx[v] = dim(rng);
        dy[v] = dim(rng);
      }
      const Representation x = random_representation(sq, dx, rng(), 2);
      const Representation y = random_representation(sq, dy, rng(), 2);
      const std::size_t direct = ext1_dim_direct(x, y);
      const std::size_t via_euler = ext1_dim(x, y);
      const long long h = static_cast<long long>(hom_dim(x, y));
      ++pairs;
      const bool ok = direct == via_euler && euler_form(q, dx, dy) == h - static_cast<long long>(direct);
      agree += ok;
      c.require(ok, "pair " + dx.to_string() + " " + dy.to_string());
    }
    c.note(std::to_string(agree) + "/" + std::to_string(pairs) + " random pairs agree over a quiver with " +
           std::to_string(q.vertex_count()) + " vertices and " + std::to_string(q.arrow_count()) + " arrows");
  }
}

void criterion4(Criterion& c) {
  Apq apq(2, 3);
  std::vector<Representation> modules = generated_modules;
  for (const TubeLabel& t : {TubeLabel::infty(), TubeLabel::zero()})
    for (int i = 1; i <= apq.rank(t); ++i) modules.push_back(apq.simple_regular(t, i));
  for (const Rational& lambda : {Rational(1), Rational(2), Rational(1, 2), Rational(-1)})
    modules.push_back(apq.simple_regular(TubeLabel::at(lambda), 1));

  std::size_t checked = 0;
  for (const Representation& m : modules) {
    const Representation t = tau(m);
    if (t.is_zero()) continue;  // projective
    ++checked;
    const CoxeterTransform phi(m.quiver());
    c.require(t.dims() == phi.apply(m.dims()), "dim tau " + m.dims().to_string());
    c.require(auslander_check(m, m).passed(), "auslander (M,M) for " + m.dims().to_string());
    for (VertexLabel v : m.quiver().vertices()) {
      c.require(auslander_check(m, simple(m.quiver_ptr(), v)).passed(), "auslander (M,S) for " + m.dims().to_string());
      c.require(auslander_check(simple(m.quiver_ptr(), v), m).passed(), "auslander (S,M) for " + m.dims().to_string());
    }
  }
  c.note(std::to_string(checked) + " non-projective modules checked (of " + std::to_string(modules.size()) + ")");
}

const std::vector<std::pair<int, int>> kGrid{{1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}};

void criterion5(Criterion& c) {
  for (auto [p, q] : kGrid) {
    Apq apq(p, q);
    const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const CheckReport cycles = verify_tau_cycles(apq);
    c.require(cycles.passed(), at + " tau cycles: " + cycles.first_failure());
    std::ostringstream line;
    line << at << ":";
    for (const TubeLabel& t : {TubeLabel::infty(), TubeLabel::zero()}) {
      const StratSystem s = apq.mouth_ss(t);
      c.require(static_cast<int>(s.size()) == apq.rank(t) - 1, at + " mouth system size in tube " + t.to_string());
      c.require(check_ss(apq.space(), s).passed(), at + " mouth system of tube " + t.to_string());
      line << " tube " << t.to_string() << " rank " << apq.rank(t) << " mouth s.s. size " << s.size();
      if (apq.rank(t) <= 4) {
        const RigidBoundResult b = tube_rigid_bound_check(apq, t);
        c.require(b.report.passed(), at + " rigid bound in tube " + t.to_string() + ": " + b.report.first_failure());
        line << " (" << b.disjoint_cone_sets << " disjoint-cone sets)";
      }
      line << ";";
    }
    c.note(line.str());
  }
}

void criterion6(Criterion& c) {
  for (auto [p, q] : kGrid) {
    Apq apq(p, q);
    const int n_max = 2 * std::lcm(p, q);
    const CheckReport r = verify_support_formula(apq, n_max);
    c.require(r.passed(), "(" + std::to_string(p) + "," + std::to_string(q) + ") " +
                              (r.passed() ? "" : r.violations().front().message));
    c.note("(" + std::to_string(p) + "," + std::to_string(q) + "): |n| <= " + std::to_string(n_max) +
           (r.passed() ? " agree" : " disagree"));
  }
}

void criterion7(Criterion& c) {
  for (auto [p, q] : kGrid) {
    Apq apq(p, q);
    const RegularSearchResult r = max_regular_ss_size(apq.space(), 2 * (p + q));
    const std::size_t bound = static_cast<std::size_t>(p + q - 2);
    const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    c.require(r.max_size <= bound, at + " regular s.s. larger than p+q-2");
    const StratSystem fg = apq.fg_system();
    const bool fg_ok = check_ss(apq.space(), fg).passed() && fg.size() == bound;
    if ((p == 2 && q == 3) || (p == 3 && q == 3)) {
      c.require(r.max_size == bound, at + " maximum below p+q-2");
      c.require(fg_ok, at + " F u G system");
    }
    c.note(at + ": max " + std::to_string(r.max_size) + " <= " + std::to_string(bound) + " over a pool of " +
           std::to_string(r.pool.size()) + "; F u G " + fg.to_string() + (fg_ok ? " attains it" : " does not attain it"));
  }
}

void criterion8(Criterion& c, unsigned jobs) {
  Apq apq(2, 3);
  FamilyOptions fo;
  fo.t_bound = 12;
  fo.jobs = jobs;
  const auto families = apq_families(apq, fo);
  std::size_t passing = 0;
  std::set<int> seen;
  for (const auto& f : families) {
    seen.insert(f.family);
    passing += f.passed();
    if (!f.passed()) {
      std::string why = f.report.passed() ? "" : "check_css " + f.report.violations().front().message;
      if (f.first_recovered && !*f.first_recovered) why += "; unique completion is not the listed X";
      for (const auto& d : f.discrepancies) why += "; " + d;
      c.require(false, f.label() + " " + f.system.to_string() + ": " + why);
    }
  }
  // Family 11 needs 0 < t mod p < p - 1, which has no solution when p = 2.
  for (int family = 1; family <= 12; ++family)
    if (!seen.count(family)) {
      c.require(family == 11, "family " + std::to_string(family) + " has no instance");
      c.note("family " + std::to_string(family) + " has no admissible t at p = 2");
    }
  c.note(std::to_string(passing) + "/" + std::to_string(families.size()) + " family instances pass (families seen: " +
         std::to_string(seen.size()) + ")");
  for (bool post : {true, false}) {
    const YSearchResult y = post ? y_search_postprojective(apq, 12, jobs) : y_search_preinjective(apq, 12, jobs);
    c.require(y.report.passed(), std::string(post ? "postprojective" : "preinjective") + " Y sets differ");
    c.note(std::string(post ? "postprojective" : "preinjective") + " Y sets for t <= 12 " +
           (y.report.passed() ? "match" : "differ"));
  }
}

void criterion9(Criterion& c) {
  Apq apq(2, 3);
  const SincerityProfile prof = sincerity_profile(apq, 8);
  for (const char* id : {"post.2", "post.4a", "pre.2", "pre.4a"}) {
    const SincerityClaim* claim = prof.claim(id);
    c.require(claim && claim->holds, std::string(id) + (claim && !claim->counterexamples.empty() ? ": " + claim->counterexamples.front() : ""));
  }
  c.note("minimal-r claims post.2 post.4a pre.2 pre.4a hold for k <= 8");
  for (const auto& claim : prof.claims)
    if (claim.edge_range)
      c.note("edge range " + claim.id + (claim.holds ? " agrees" : " FLAGGED: " + claim.counterexamples.front()));
}

void criterion10(Criterion& c) {
  std::size_t checked = 0;
  for (const auto& [space, systems] : kronecker_found) {
    const Module i2 = space->preinjective(2, 0), p1 = space->preprojective(1, 0);
    for (const StratSystem& s : systems) {
      const bool infinite = !is_filtration_finite(*space, s);
      const bool is_i2_p1 = ModuleSpace::same_exceptional(s.modules[0], i2) && ModuleSpace::same_exceptional(s.modules[1], p1);
      c.require(infinite == is_i2_p1, "F(X) finiteness for " + s.to_string());
      ++checked;
    }
  }
  c.note("F(X) is infinite exactly for (I2, P1) among " + std::to_string(checked) + " complete Kronecker systems");
  const auto& counters = size_bound_counters();
  c.require(counters.passing_systems > 0, "no stratifying system was produced");
  c.require(counters.oversized == 0, std::to_string(counters.oversized.load()) + " systems longer than n");
  c.note("t <= n held for all " + std::to_string(counters.passing_systems.load()) + " passing systems of this run");
  c.note("module invariants are exercised by the unit test binaries");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int a = 1; a < argc; ++a) {
    if (std::string(argv[a]) == "--known-failures" && a + 1 < argc) {
      std::stringstream in(argv[++a]);
      for (std::string tok; std::getline(in, tok, ',');) known.insert(std::stoi(tok));
    }
  }
  const unsigned jobs = 1;

  std::vector<Criterion> criteria{
      {1, "Kronecker classification", 60},        {2, "regular self-extensions on Kronecker", 5},
      {3, "oracle equivalence", 30},              {4, "tau consistency", 30},
      {5, "tube facts", 60},                      {6, "support formula", 60},
      {7, "regular s.s. bound", 300},             {8, "A~(2,3) families, Y sets and uniqueness", 300},
      {9, "sincerity profiles", 60},              {10, "property suite", 60},
  };
  std::set<int> failing;
  for (Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (c.number) {
        case 1: criterion1(c); break;
        case 2: criterion2(c); break;
        case 3: criterion3(c); break;
        case 4: criterion4(c); break;
        case 5: criterion5(c); break;
        case 6: criterion6(c); break;
        case 7: criterion7(c); break;
        case 8: criterion8(c, jobs); break;
        case 9: criterion9(c); break;
        case 10: criterion10(c); break;
      }
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(seconds <= c.budget_seconds, "time budget " + std::to_string(static_cast<int>(c.budget_seconds)) + " s exceeded");
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << "criterion " << c.number << ": " << (c.pass ? "PASS" : "FAIL") << " " << c.title << " (" << time.str()
              << " s)\n";
    for (const auto& d : c.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    if (!c.pass) failing.insert(c.number);
  }
  std::cout << "summary: " << (criteria.size() - failing.size()) << "/" << criteria.size() << " criteria pass\n";
  if (failing != known) {
    std::cout << "failing criteria differ from the expected set\n";
    return 1;
  }
  return 0;
}
