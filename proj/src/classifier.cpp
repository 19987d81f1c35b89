#include "stratsys/classifier.hpp"

#include "stratsys/homology.hpp"
#include "stratsys/parallel.hpp"
#include "stratsys/roots.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stratsys {

std::string FamilyInstance::label() const {
  std::string out = "family " + std::to_string(family);
  for (const auto& [k, v] : params) out += " " + k + "=" + std::to_string(v);
  return out;
}

namespace {

std::set<VertexLabel> interval(long long lo, long long hi) {
  std::set<VertexLabel> s;
  for (long long v = lo; v <= hi; ++v) s.insert(static_cast<VertexLabel>(v));
  return s;
}

std::set<VertexLabel> unite(std::set<VertexLabel> a, const std::set<VertexLabel>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

std::string set_text(const std::set<VertexLabel>& s) {
  std::string out = "{";
  for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

std::set<VertexLabel> support_of(const DimVector& d, const Quiver& q) {
  std::set<VertexLabel> s;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] != 0) s.insert(q.vertices()[v]);
  return s;
}

std::vector<DimVector> dims_of(const StratSystem& s) {
  std::vector<DimVector> out;
  for (const auto& m : s.modules) out.push_back(m.dims());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Kronecker

std::vector<FamilyInstance> kronecker_css_list(ModuleSpace& space, int bound, int first_shift_5) {
  const Quiver& q = space.quiver();
  if (q.vertex_count() != 2 || !q.has_vertex(1) || !q.has_vertex(2))
    throw std::invalid_argument("kronecker_css_list needs the Kronecker quiver on vertices 1, 2");
  std::vector<FamilyInstance> out;
  auto add = [&](int family, std::map<std::string, long long> params, std::vector<Module> ms) {
    FamilyInstance f;
    f.family = family;
    f.params = std::move(params);
    f.system.modules = std::move(ms);
    f.report = check_css(space, f.system);
    out.push_back(std::move(f));
  };
  add(1, {}, {space.preinjective(2, 0), space.preprojective(1, 0)});
  for (int i = 0; i <= bound; ++i) add(2, {{"i", i}}, {space.preprojective(1, i), space.preprojective(2, i)});
  for (int i = 0; i <= bound; ++i) add(3, {{"i", i}}, {space.preprojective(2, i), space.preprojective(1, i + 1)});
  for (int i = 0; i <= bound; ++i) add(4, {{"i", i}}, {space.preinjective(1, i), space.preinjective(2, i)});
  for (int i = first_shift_5; i <= bound; ++i)
    add(5, {{"i", i}}, {space.preinjective(2, i + 1), space.preinjective(1, i)});
  return out;
}

KroneckerEnumeration enumerate_css_kronecker(ModuleSpace& space, long long dim_cap) {
  const Quiver& q = space.quiver();
  KroneckerEnumeration result;
  for (long long a = 0; a <= dim_cap; ++a)
    for (long long b = 0; b <= dim_cap; ++b) {
      DimVector x{a, b};
      if (x.is_zero()) continue;
      const long long form = tits_form(q, x);
      if (form <= 0) {
        // Any module M of this dimension has dim Ext^1(M, M) >= 1 - q(x) >= 1.
        ++result.imaginary_vectors;
        continue;
      }
      if (!is_real_root(q, x)) continue;
      ArPosition pos;
      try {
        pos = ar_position(q, x);
      } catch (const std::logic_error&) {
        result.unidentified.push_back(x);
        continue;
      }
      if (pos.kind == ArPosition::Kind::Regular) {
        result.regular_real_roots.push_back(x);
        continue;
      }
      const OrbitCoord c{pos.kind == ArPosition::Kind::Preprojective ? OrbitCoord::Side::Preprojective
                                                                     : OrbitCoord::Side::Preinjective,
                         pos.vertex, pos.k};
      Module m = space.orbit_module(c);
      if (m.dims() != x || !space.is_exceptional(m)) {
        result.unidentified.push_back(x);
        continue;
      }
      result.pool.push_back(m);
    }
  std::stable_sort(result.pool.begin(), result.pool.end(), [](const Module& a, const Module& b) {
    return a.total_dim() != b.total_dim() ? a.total_dim() < b.total_dim() : a.dims() < b.dims();
  });

  for (const auto& x : result.pool)
    for (const auto& y : result.pool) {
      if (x == y) continue;
      StratSystem s{{x, y}};
      if (check_css(space, s).passed()) result.found.push_back(s);
    }

  auto within = [&](const StratSystem& s) {
    for (const auto& m : s.modules)
      for (long long e : m.dims().entries())
        if (e > dim_cap) return false;
    return true;
  };
  std::vector<FamilyInstance> listed;
  for (auto& f : kronecker_css_list(space, static_cast<int>(dim_cap)))
    if (within(f.system)) listed.push_back(std::move(f));
  for (const auto& s : result.found) {
    const auto d = dims_of(s);
    bool known = false;
    for (const auto& f : listed) known = known || dims_of(f.system) == d;
    if (!known) result.extras.push_back(s);
  }
  for (const auto& f : listed) {
    bool seen = false;
    for (const auto& s : result.found) seen = seen || dims_of(s) == dims_of(f.system);
    if (!seen) result.missing.push_back(f);
  }
  const DimVector shifted_i2 = space.preinjective(2, 1).dims(), i1 = space.preinjective(1, 0).dims();
  for (const auto& s : result.extras) {
    if (dims_of(s) == std::vector<DimVector>{shifted_i2, i1})
      result.flags.push_back("(tau I2, I1) is complete: the i = 0 member of family 5, outside its stated range i >= 1");
    else {
      result.flags.push_back("unlisted complete system " + s.to_string());
      ++result.unexplained_flags;
    }
  }
  result.unexplained_flags += result.regular_real_roots.size() + result.unidentified.size();
  for (const auto& x : result.regular_real_roots)
    result.flags.push_back("regular real root " + x.to_string() + " could carry an exceptional module");
  for (const auto& x : result.unidentified) result.flags.push_back("real root " + x.to_string() + " not on a tau-orbit");
  return result;
}

std::vector<std::pair<Rational, std::size_t>> kronecker_thin_self_ext(ModuleSpace& space,
                                                                      const std::vector<Rational>& lambdas) {
  const Quiver& q = space.quiver();
  std::vector<std::pair<Rational, std::size_t>> out;
  for (const Rational& lambda : lambdas) {
    std::vector<RationalMatrix> maps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      maps.push_back(RationalMatrix{{a == 0 ? Rational(1) : a == 1 ? lambda : Rational(0)}});
    Module r = space.from_rep(Representation(space.quiver_ptr(), DimVector{1, 1}, std::move(maps)),
                              "R(" + to_string(lambda) + ")");
    out.emplace_back(lambda, space.ext1_dim(r, r));
  }
  return out;
}

// ---------------------------------------------------------------- A~(p,q): Y-sets

std::set<VertexLabel> expected_postprojective_y(int p, int q, int t) {
  std::set<VertexLabel> s;
  if (t % p == 0 && t % q == 0) s.insert({0, p + q - 1});
  if (t % q == 0) {
    const int r = t % p;
    if (r >= 1 && r <= p - 1) s.insert(p - r);
  }
  if (t % p == 0) {
    const int r = t % q;
    if (r >= 1 && r <= q - 1) s.insert(p + q - r - 1);
  }
  return s;
}

std::set<VertexLabel> expected_preinjective_y(int p, int q, int t) {
  std::set<VertexLabel> s;
  if (t < 1) return s;
  const bool a = t % p == p - 1, b = t % q == q - 1;
  if (a && t % q == 0) s.insert(p);
  if (b && t % p == 0) s.insert(1);
  if (a && b) s.insert({0, p + q - 1});
  if (t % p != p - 1 && b) s.insert(t % p + 1);
  if (t % q != q - 1 && a) s.insert(p + t % q);
  return s;
}

namespace {

YSearchResult y_search(Apq& apq, int bound, unsigned jobs, OrbitCoord::Side side) {
  YSearchResult result;
  const bool post = side == OrbitCoord::Side::Preprojective;
  result.report = CheckReport(std::string(post ? "postprojective" : "preinjective") + " Y with (F, G, Y)");
  ModuleSpace& space = apq.space();
  const StratSystem fg = apq.fg_system();
  const int n = static_cast<int>(apq.n());
  std::vector<char> ok(static_cast<std::size_t>((bound + 1) * n), 0);
  parallel_for(ok.size(), jobs, [&](std::size_t cell) {
    const int t = static_cast<int>(cell) / n, l = static_cast<int>(cell) % n;
    StratSystem s = fg;
    s.modules.push_back(space.orbit_module({side, l, t}));
    ok[cell] = check_ss(space, s).passed();
  });
  for (int t = 0; t <= bound; ++t) {
    auto& f = result.found[t];
    for (int l = 0; l < n; ++l)
      if (ok[static_cast<std::size_t>(t * n + l)]) f.insert(l);
    const auto e = post ? expected_postprojective_y(apq.p(), apq.q(), t) : expected_preinjective_y(apq.p(), apq.q(), t);
    result.expected[t] = e;
    if (f != e)
      result.report.fail(Violation{"y_set", std::nullopt, std::nullopt, t,
                                   "t=" + std::to_string(t) + ": found " + set_text(f) + ", listed " + set_text(e)});
  }
  return result;
}

}  // namespace

YSearchResult y_search_postprojective(Apq& apq, int bound, unsigned jobs) {
  return y_search(apq, bound, jobs, OrbitCoord::Side::Preprojective);
}

YSearchResult y_search_preinjective(Apq& apq, int bound, unsigned jobs) {
  return y_search(apq, bound, jobs, OrbitCoord::Side::Preinjective);
}

// ---------------------------------------------------------------- sincerity

const SincerityClaim* SincerityProfile::claim(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

SincerityProfile sincerity_profile(Apq& apq, int k_max) {
  SincerityProfile prof;
  ModuleSpace& space = apq.space();
  const Quiver& q = space.quiver();
  const int p = apq.p(), qq = apq.q(), n = p + qq;
  // supp[side][i][k]
  std::vector<std::vector<std::vector<std::set<VertexLabel>>>> supp(
      2, std::vector<std::vector<std::set<VertexLabel>>>(n, std::vector<std::set<VertexLabel>>(k_max + 1)));
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < n; ++i) {
      std::optional<int> first;
      for (int k = 0; k <= k_max; ++k) {
        Module m = side == 0 ? space.preprojective(i, k) : space.preinjective(i, k);
        const DimVector d = m.rep().dims();
        const bool sincere = d.is_positive() && std::all_of(d.entries().begin(), d.entries().end(),
                                                             [](long long e) { return e > 0; });
        supp[side][i][k] = support_of(d, q);
        prof.rows.push_back({side == 0 ? OrbitCoord::Side::Preprojective : OrbitCoord::Side::Preinjective, i, k, d,
                             sincere});
        if (sincere && !first) first = k;
      }
      prof.minimal_r[{side, i}] = first;
    }
  auto sincere = [&](int side, int i, int k) { return static_cast<int>(supp[side][i][k].size()) == n; };
  auto name = [](int side, int i, int k) {
    return side == 0 ? "tau^-" + std::to_string(k) + " P" + std::to_string(i)
                     : "tau^" + std::to_string(k) + " I" + std::to_string(i);
  };
  // r: smallest exponent with a sincere module, and every later one sincere too.
  auto check_r = [&](SincerityClaim& c, int side, int i, int r) {
    const auto actual = prof.minimal_r[{side, i}];
    bool ok = r >= 0 && r <= k_max && actual == r;
    for (int k = std::max(r, 0); ok && k <= k_max; ++k) ok = sincere(side, i, k);
    if (!ok) {
      c.holds = false;
      c.counterexamples.push_back((side == 0 ? "P" : "I") + std::to_string(i) + ": claimed r=" + std::to_string(r) +
                                  ", computed " + (actual ? std::to_string(*actual) : std::string("none")));
    }
  };
  auto check_supp = [&](SincerityClaim& c, int side, int i, int k, const std::set<VertexLabel>& claimed) {
    if (supp[side][i][k] != claimed) {
      c.holds = false;
      c.counterexamples.push_back(name(side, i, k) + ": support " + set_text(supp[side][i][k]) + ", claimed " +
                                  set_text(claimed));
    }
  };
  auto& claims = prof.claims;
  claims.reserve(32);  // references returned by add() stay valid
  auto add = [&](std::string id, std::string statement, bool edge = false) -> SincerityClaim& {
    claims.push_back(SincerityClaim{std::move(id), std::move(statement), true, edge, {}});
    return claims.back();
  };

  {
    auto& c = add("post.2", "tau^-k P_{p+q-1} is sincere for every k");
    for (int k = 0; k <= k_max; ++k)
      if (!sincere(0, n - 1, k)) {
        c.holds = false;
        c.counterexamples.push_back(name(0, n - 1, k));
      }
  }
  for (int side = 0; side < 2; ++side) {
    auto& c = add(side == 0 ? "post.3" : "pre.3", "p is the least r from which every orbit is sincere");
    int worst = 0;
    bool all = true;
    for (int i = 0; i < n; ++i) {
      bool from = false;
      for (int r = 0; r <= k_max && !from; ++r) {
        bool tail = true;
        for (int k = r; k <= k_max; ++k) tail = tail && sincere(side, i, k);
        if (tail) {
          worst = std::max(worst, r);
          from = true;
        }
      }
      all = all && from;
    }
    if (!all || worst != p) {
      c.holds = false;
      c.counterexamples.push_back("computed " + (all ? std::to_string(worst) : std::string("none")));
    }
  }
  {
    auto& c = add("post.4a", "0 <= i <= p-1: least r is p-i");
    for (int i = 0; i <= p - 1; ++i) check_r(c, 0, i, p - i);
    auto& b = add("post.4b", "0 < k < p-i: support {0..i+k} u {p..p+k-1}");
    for (int i = 0; i <= p - 1; ++i)
      for (int k = 1; k < p - i && k <= k_max; ++k) check_supp(b, 0, i, k, unite(interval(0, i + k), interval(p, p + k - 1)));
    auto& d = add("post.4c", "0 <= i <= p-1: support of P_i is {0..i}");
    for (int i = 0; i <= p - 1; ++i) check_supp(d, 0, i, 0, interval(0, i));
  }
  {
    add("post.5a", "p <= i <= p+q-2, i <= q-1: least r is p", true);
    add("post.5b", "p <= i <= p+q-2, q-1 <= i: least r is p+q-1-i", true);
    add("post.5c", "p <= i <= p+q-2, not sincere: support {p..i+k} u {0..k}");
    const std::size_t base = claims.size() - 3;
    for (int i = p; i <= n - 2; ++i) {
      if (i <= qq - 1) check_r(claims[base], 0, i, p);
      if (i >= qq - 1) check_r(claims[base + 1], 0, i, n - 1 - i);
      for (int k = 0; k <= k_max; ++k)
        if (!sincere(0, i, k)) check_supp(claims[base + 2], 0, i, k, unite(interval(p, i + k), interval(0, k)));
    }
  }
  {
    auto& c = add("post.6", "1 <= k <= p-1: support of tau^-k P_0 is {0..k} u {p..p-1+k}");
    for (int k = 1; k <= p - 1 && k <= k_max; ++k) check_supp(c, 0, 0, k, unite(interval(0, k), interval(p, p - 1 + k)));
  }
  {
    auto& c = add("pre.2", "tau^k I_0 is sincere for every k");
    for (int k = 0; k <= k_max; ++k)
      if (!sincere(1, 0, k)) {
        c.holds = false;
        c.counterexamples.push_back(name(1, 0, k));
      }
  }
  {
    auto& c = add("pre.4a", "1 <= i <= p-1: least r is i");
    for (int i = 1; i <= p - 1; ++i) check_r(c, 1, i, i);
    auto& b = add("pre.4b", "k < i: support {i-k..p-1} u {p+q-k..p+q-1}");
    for (int i = 1; i <= p - 1; ++i)
      for (int k = 0; k < i && k <= k_max; ++k) check_supp(b, 1, i, k, unite(interval(i - k, p - 1), interval(n - k, n - 1)));
  }
  {
    add("pre.5a", "p <= i < q-1: least r is i-p+1", true);
    add("pre.5b", "q-1 <= i, p <= i < p+q-1: least r is p", true);
    add("pre.5c", "p <= i <= p+q-2, not sincere: support {i-k..p+q-1} u {p-k..p-1}");
    const std::size_t base = claims.size() - 3;
    for (int i = p; i <= n - 2; ++i) {
      if (i < qq - 1) check_r(claims[base], 1, i, i - p + 1);
      if (i >= qq - 1) check_r(claims[base + 1], 1, i, p);
      for (int k = 0; k <= k_max; ++k)
        if (!sincere(1, i, k)) check_supp(claims[base + 2], 1, i, k, unite(interval(i - k, n - 1), interval(p - k, p - 1)));
    }
  }
  {
    auto& c = add("pre.6", "k < p: support of tau^k I_{p+q-1} is {p-k..p-1} u {p+q-k..p+q-1}");
    for (int k = 0; k < p && k <= k_max; ++k) check_supp(c, 1, n - 1, k, unite(interval(p - k, p - 1), interval(n - k, n - 1)));
  }
  return prof;
}

// ---------------------------------------------------------------- A~(p,q): families

namespace {

struct Cell {
  int family;
  int t;  // -1 when the family has no parameter
  int r;  // -1 when unused
};

std::vector<Cell> family_cells(int p, int q, int t_bound) {
  std::vector<Cell> cells{{1, -1, -1}, {2, -1, -1}};
  for (int family = 3; family <= 12; ++family)
    for (int t = 1; t <= t_bound; ++t) {
      const bool pt = t % p == 0, qt = t % q == 0;
      const bool a = t % p == p - 1, b = t % q == q - 1;
      switch (family) {
        case 3:
        case 4:
          if (pt && qt) cells.push_back({family, t, -1});
          break;
        case 5:
          if (qt && t % p >= 1) cells.push_back({family, t, t % p});
          break;
        case 6:
          if (pt && t % q >= 1) cells.push_back({family, t, t % q});
          break;
        case 7:
          if (a && qt) cells.push_back({family, t, -1});
          break;
        case 8:
          if (b && pt) cells.push_back({family, t, -1});
          break;
        case 9:
        case 10:
          if (a && b) cells.push_back({family, t, -1});
          break;
        case 11:
          if (b && t % p > 0 && t % p < p - 1) cells.push_back({family, t, t % p});
          break;
        case 12:
          if (a && t % q > 0 && t % q < q - 1) cells.push_back({family, t, t % q});
          break;
      }
    }
  return cells;
}

}  // namespace

std::vector<FamilyInstance> apq_families(Apq& apq, const FamilyOptions& options) {
  const int p = apq.p(), q = apq.q(), n = p + q;
  ModuleSpace& space = apq.space();
  const StratSystem fg = apq.fg_system();
  const auto cells = family_cells(p, q, options.t_bound);
  std::vector<Module> regular_extras;
  for (const TubeLabel& tube : {TubeLabel::infty(), TubeLabel::zero()})
    for (int i = 1; i <= apq.rank(tube); ++i) regular_extras.push_back(apq.mouth(tube, i));
  Module source_simple = apq.space().from_rep(simple(apq.quiver(), n - 1), "S" + std::to_string(n - 1));

  std::vector<FamilyInstance> out(cells.size());
  parallel_for(cells.size(), options.jobs, [&](std::size_t idx) {
    const Cell cell = cells[idx];
    FamilyInstance& f = out[idx];
    f.family = cell.family;
    if (cell.t >= 0) f.params["t"] = cell.t;
    if (cell.r >= 0) f.params["r"] = cell.r;
    const int t = cell.t, r = cell.r;
    using Side = OrbitCoord::Side;
    auto make = [&](Side side, long long vertex, long long k) -> std::optional<Module> {
      if (vertex < 0 || vertex >= n || k < 0) {
        f.discrepancies.push_back(std::string(side == Side::Preprojective ? "tau^-" : "tau^") + std::to_string(k) +
                                  (side == Side::Preprojective ? " P" : " I") + std::to_string(vertex) +
                                  " is not a module of the quiver");
        return std::nullopt;
      }
      return space.orbit_module({side, static_cast<VertexLabel>(vertex), static_cast<int>(k)});
    };
    std::optional<Module> x, y;
    const Side P = Side::Preprojective, I = Side::Preinjective;
    switch (cell.family) {
      case 1: x = source_simple; y = make(P, 0, 0); break;
      case 2: x = p == q ? make(P, 0, p - 1) : make(P, q - 1, p - 1); y = make(P, n - 1, 0); break;
      case 3: x = p == q ? make(P, 0, t + p - 1) : make(P, q - 1, t + p - 1); y = make(P, n - 1, t); break;
      case 4: x = make(P, n - 1, t - 1); y = make(P, 0, t); break;
      case 5: x = make(P, q + r - 1, t + (p - r - 1)); y = make(P, p - r, t); break;
      case 6:
        x = p <= q - r ? make(P, p - q + r, t + q - r - 1) : make(P, q - r - 1, t + p - 1);
        y = make(P, n - r - 1, t);
        break;
      case 7: x = make(I, p - 1, t); y = make(I, p, t); break;
      case 8: x = make(I, n - 2, t); y = make(I, 1, t); break;
      case 9: x = make(I, n - 1, t + 1); y = make(I, 0, t); break;
      case 10: x = make(I, q - 1, t - p + 1); y = make(I, n - 1, t); break;
      case 11: x = make(I, n - r - 2, t - r); y = make(I, r + 1, t); break;
      case 12: x = r < p ? make(I, p - (r + 1), t - r) : make(I, r, t - (p - 1)); y = make(I, p + r, t); break;
    }
    if (!x || !y) {
      f.report = CheckReport(f.label());
      f.report.fail("instantiation", "the family does not produce modules here");
      return;
    }
    f.system.modules.push_back(*x);
    for (const auto& m : fg.modules) f.system.modules.push_back(m);
    f.system.modules.push_back(*y);
    f.report = check_css(space, f.system);
    if (options.check_uniqueness) {
      ExtendOptions eo;
      eo.positions = std::vector<std::size_t>{0};
      eo.exponent_bound = options.t_bound + p + q;
      eo.extra_candidates = regular_extras;
      StratSystem rest{std::vector<Module>(f.system.modules.begin() + 1, f.system.modules.end())};
      ExtendResult er = extend_to_complete(space, rest, eo);
      f.completions = er.single_slot_solutions.value_or(0);
      f.first_recovered = er.first && er.first->modules[0].dims() == x->dims();
    }
  });
  return out;
}

// ---------------------------------------------------------------- wild

RegularCssResult regular_css_search(ModuleSpace& space, long long dim_cap) {
  const Quiver& q = space.quiver();
  if (space.quiver_class() != QuiverClass::Wild || q.vertex_count() < 3)
    throw std::invalid_argument("regular complete systems are searched on wild quivers with at least 3 vertices");
  RegularCssResult result;
  for (const DimVector& x : real_roots(q, dim_cap * static_cast<long long>(q.vertex_count()))) {
    if (std::any_of(x.entries().begin(), x.entries().end(), [&](long long e) { return e > dim_cap; })) continue;
    ++result.real_roots;
    if (ar_position(q, x).kind != ArPosition::Kind::Regular) continue;
    if (auto r = generic_exceptional(space.quiver_ptr(), x)) result.pool.push_back(space.from_rep(std::move(*r), "R" + x.to_string()));
  }
  const auto& pool = result.pool;
  const std::size_t m = pool.size(), n = q.vertex_count();
  std::vector<std::vector<char>> follows(m, std::vector<char>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      follows[a][b] = a != b && space.hom_dim(pool[b], pool[a]) == 0 && space.ext1_dim(pool[b], pool[a]) == 0;
  std::vector<std::size_t> chosen;
  std::function<bool()> grow = [&]() {
    if (chosen.size() == n) return true;
    for (std::size_t c = 0; c < m; ++c) {
      bool fits = true;
      for (std::size_t e : chosen) fits = fits && follows[e][c];
      if (!fits) continue;
      chosen.push_back(c);
      if (grow()) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (grow()) {
    StratSystem s;
    for (std::size_t c : chosen) s.modules.push_back(pool[c]);
    if (!check_css(space, s).passed()) throw std::logic_error("regular search produced an invalid system");
    result.witness = s;
  } else {
    result.note = "none within cap " + std::to_string(dim_cap);
  }
  return result;
}

}  // namespace stratsys
