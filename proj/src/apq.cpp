#include "stratsys/apq.hpp"

#include "stratsys/homology.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace stratsys {

TubeLabel TubeLabel::at(const Rational& lambda) {
  if (is_zero(lambda)) throw std::invalid_argument("tube parameter must be nonzero");
  return {Tag::Lambda, lambda};
}

std::string TubeLabel::to_string() const {
  switch (tag) {
    case Tag::Infty: return "inf";
    case Tag::Zero: return "0";
    case Tag::Lambda: return "lambda=" + stratsys::to_string(lambda);
  }
  return "";
}

std::string TubePoint::to_string() const {
  return "E" + std::to_string(i) + "[" + std::to_string(j) + "]^(" + tube.to_string() + ")";
}

Apq::Apq(int p, int q)
    : p_(p), q_(q), quiver_(std::make_shared<const Quiver>(canonical_apq(p, q))),
      space_(std::make_unique<ModuleSpace>(quiver_)) {}

int Apq::rank(const TubeLabel& t) const {
  switch (t.tag) {
    case TubeLabel::Tag::Infty: return p_;
    case TubeLabel::Tag::Zero: return q_;
    case TubeLabel::Tag::Lambda: return 1;
  }
  return 1;
}

int Apq::wrap(const TubeLabel& t, int index) const {
  const int r = rank(t);
  return ((index - 1) % r + r) % r + 1;
}

namespace {

// Representation with 0/1 dimensions, scalar `value(arrow)` on arrows whose
// ends both carry the field and zero maps elsewhere.
Representation thin(const std::shared_ptr<const Quiver>& q, const std::vector<int>& support,
                    const std::function<Rational(std::size_t)>& value) {
  DimVector dims(q->vertex_count());
  for (int v : support) dims[q->index_of(v)] = 1;
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    RationalMatrix m(static_cast<std::size_t>(dims[q->target_index(a)]),
                     static_cast<std::size_t>(dims[q->source_index(a)]));
    if (!m.empty()) m(0, 0) = value(a);
    maps.push_back(std::move(m));
  }
  return Representation(q, dims, std::move(maps));
}

bool is_upper(const Arrow& a) { return a.label[0] == 'u'; }

}  // namespace

Representation Apq::simple_regular(const TubeLabel& t, int index) const {
  const int r = rank(t);
  if (index < 1 || index > r)
    throw std::invalid_argument("mouth index " + std::to_string(index) + " outside 1.." + std::to_string(r));
  const auto& arrows = quiver_->arrows();
  const int source = p_ + q_ - 1;
  switch (t.tag) {
    case TubeLabel::Tag::Infty: {
      if (index < p_) return simple(quiver_, index);
      std::vector<int> support{0};
      for (int v = p_; v <= source; ++v) support.push_back(v);
      return thin(quiver_, support, [&](std::size_t a) { return is_upper(arrows[a]) ? Rational(0) : Rational(1); });
    }
    case TubeLabel::Tag::Zero: {
      if (index < q_) return simple(quiver_, p_ + index - 1);
      std::vector<int> support{0};
      for (int v = 1; v < p_; ++v) support.push_back(v);
      support.push_back(source);
      return thin(quiver_, support, [&](std::size_t a) { return is_upper(arrows[a]) ? Rational(1) : Rational(0); });
    }
    case TubeLabel::Tag::Lambda: {
      std::vector<int> support(n());
      std::iota(support.begin(), support.end(), 0);
      const std::string last_upper = "u" + std::to_string(p_);
      return thin(quiver_, support, [&](std::size_t a) { return arrows[a].label == last_upper ? t.lambda : Rational(1); });
    }
  }
  throw std::logic_error("unknown tube");
}

Module Apq::mouth(const TubeLabel& t, int index) {
  std::lock_guard lock(mutex_);
  const auto key = std::make_pair(t.to_string(), index);
  auto it = mouth_cache_.find(key);
  if (it != mouth_cache_.end()) return it->second;
  std::string name;
  switch (t.tag) {
    case TubeLabel::Tag::Infty: name = "E" + std::to_string(index) + "^(inf)"; break;
    case TubeLabel::Tag::Zero: name = "E" + std::to_string(index) + "^(0)"; break;
    case TubeLabel::Tag::Lambda: name = "E^(" + to_string(t.lambda) + ")"; break;
  }
  Module m = space_->from_rep(simple_regular(t, index), name);
  mouth_cache_.emplace(key, m);
  return m;
}

Module Apq::f(int i) {
  if (i < 1 || i > p_ - 1) throw std::invalid_argument("F index out of range");
  return mouth(TubeLabel::infty(), p_ - i);
}

Module Apq::g(int i) {
  if (i < 1 || i > q_ - 1) throw std::invalid_argument("G index out of range");
  return mouth(TubeLabel::zero(), q_ - i);
}

StratSystem Apq::fg_system() {
  StratSystem s;
  for (int i = 1; i < p_; ++i) s.modules.push_back(f(i));
  for (int i = 1; i < q_; ++i) s.modules.push_back(g(i));
  return s;
}

StratSystem Apq::mouth_ss(const TubeLabel& t) {
  StratSystem s;
  for (int i = rank(t) - 1; i >= 1; --i) s.modules.push_back(mouth(t, i));
  return s;
}

const Representation& Apq::tube_point(const TubePoint& pt) {
  if (pt.j < 1) throw std::invalid_argument("tube level must be at least 1");
  std::lock_guard lock(mutex_);
  const int i = wrap(pt.tube, pt.i);
  const auto key = std::make_tuple(pt.tube.to_string(), i, pt.j);
  auto it = point_cache_.find(key);
  if (it != point_cache_.end()) return it->second;
  Representation built;
  if (pt.j == 1) {
    built = simple_regular(pt.tube, i);
  } else {
    const Representation& below = tube_point(TubePoint{pt.tube, i, pt.j - 1});
    Representation next = simple_regular(pt.tube, wrap(pt.tube, i + pt.j - 1));
    auto cocycles = ext1_cocycles(next, below);
    if (cocycles.empty()) throw std::logic_error("no extension along the ray at " + pt.to_string());
    built = extension_middle(below, next, cocycles.front());
  }
  return point_cache_.emplace(key, std::move(built)).first->second;
}

std::set<int> Apq::cone(const TubePoint& pt) const {
  std::set<int> out;
  for (int k = 0; k < pt.j && k < rank(pt.tube); ++k) out.insert(wrap(pt.tube, pt.i + k));
  return out;
}

CheckReport verify_tau_cycles(Apq& apq, const std::vector<Rational>& lambdas) {
  CheckReport report("tau cycles of A~(" + std::to_string(apq.p()) + "," + std::to_string(apq.q()) + ")");
  auto holds = [&](const TubeLabel& t, int from, int to) {
    Representation image = tau(apq.simple_regular(t, from));
    Representation expected = apq.simple_regular(t, to);
    return image.dims() == expected.dims() && is_isomorphic(image, expected);
  };
  for (const TubeLabel& t : {TubeLabel::infty(), TubeLabel::zero()}) {
    const int r = apq.rank(t);
    for (int i = 1; i <= r; ++i) {
      const int from = apq.wrap(t, i + 1);
      if (!holds(t, from, i))
        report.fail("tau_cycle", "tau E" + std::to_string(from) + " is not E" + std::to_string(i) + " in tube " +
                                     t.to_string());
    }
  }
  // The two G-side relations, read individually.
  const int q = apq.q();
  if (q >= 2) {
    const bool a = holds(TubeLabel::zero(), 1, q);      // tau G_{q-1} = E_q^(0)
    const bool b = holds(TubeLabel::zero(), q, q - 1);  // tau E_q^(0) = G_1
    report.note(std::string("tau G_{q-1} = E_q^(0): ") + (a ? "holds" : "fails"));
    report.note(std::string("tau E_q^(0) = G_1: ") + (b ? "holds" : "fails"));
  }
  for (const Rational& lambda : lambdas) {
    const TubeLabel t = TubeLabel::at(lambda);
    Representation e = apq.simple_regular(t, 1);
    Representation te = tau(e);
    if (!is_brick(e)) report.fail("brick", "E^(" + to_string(lambda) + ") is not a brick");
    if (te.dims() != e.dims() || !is_isomorphic(te, e))
      report.fail("tau_cycle", "tau E^(" + to_string(lambda) + ") is not E^(" + to_string(lambda) + ")");
    if (hom_dim(e, te) == 0 || ext1_dim(e, e) != 1)
      report.fail("homogeneous", "E^(" + to_string(lambda) + ") does not sit at a rank-1 mouth");
  }
  return report;
}

std::set<VertexLabel> support_formula(int p, int q, FgSide side, long long n) {
  std::set<VertexLabel> all;
  for (int v = 0; v < p + q; ++v) all.insert(v);
  auto without = [&](long long v) {
    auto s = all;
    s.erase(static_cast<VertexLabel>(v));
    return s;
  };
  if (side == FgSide::F) {
    if (p == 1) return {};
    if (n % p == 0) {
      std::set<VertexLabel> s;
      for (int v = 1; v <= p - 1; ++v) s.insert(v);
      return s;
    }
    const long long r = (n < 0 ? -n : n) % p;
    return n > 0 ? without(p - r) : without(r);
  }
  if (q == 1) return {};
  if (n % q == 0) {
    std::set<VertexLabel> s;
    for (int v = p; v <= p + q - 2; ++v) s.insert(v);
    return s;
  }
  const long long r = (n < 0 ? -n : n) % q;
  return n > 0 ? without(p + q - r - 1) : without(p + r - 1);
}

namespace {

std::string set_text(const std::set<VertexLabel>& s) {
  std::string out = "{";
  for (auto v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

}  // namespace

CheckReport verify_support_formula(Apq& apq, int n_max) {
  CheckReport report("support of tau^n F and tau^n G, |n| <= " + std::to_string(n_max));
  for (FgSide side : {FgSide::F, FgSide::G}) {
    std::vector<Representation> members;
    const int count = side == FgSide::F ? apq.p() - 1 : apq.q() - 1;
    for (int i = 1; i <= count; ++i) members.push_back((side == FgSide::F ? apq.f(i) : apq.g(i)).rep());
    // Walk outward in both directions one tau step at a time.
    for (int dir : {1, -1}) {
      std::vector<Representation> cur = members;
      for (int step = 0; step <= n_max; ++step) {
        if (step > 0)
          for (auto& m : cur) m = dir > 0 ? tau(m) : tau_inv(m);
        if (step == 0 && dir < 0) continue;
        const long long n = static_cast<long long>(dir) * step;
        std::set<VertexLabel> actual;
        for (const auto& m : cur) {
          auto s = supp(m);
          actual.insert(s.begin(), s.end());
        }
        const auto expected = support_formula(apq.p(), apq.q(), side, n);
        if (actual != expected)
          report.fail(Violation{side == FgSide::F ? "support_F" : "support_G", std::nullopt, std::nullopt, n,
                                "n=" + std::to_string(n) + ": computed " + set_text(actual) + ", formula " +
                                    set_text(expected)});
      }
    }
  }
  return report;
}

RigidBoundResult tube_rigid_bound_check(Apq& apq, const TubeLabel& t) {
  RigidBoundResult result;
  result.report = CheckReport("rigid sets in tube " + t.to_string());
  const int r = apq.rank(t);
  std::vector<TubePoint> points;
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) points.push_back(TubePoint{t, i, j});
  result.points = points.size();
  std::vector<const Representation*> reps;
  for (const auto& pt : points) {
    const Representation& m = apq.tube_point(pt);
    DimVector expected(apq.n());
    for (int k = 0; k < pt.j; ++k) expected += apq.simple_regular(t, apq.wrap(t, pt.i + k)).dims();
    if (m.dims() != expected) result.report.fail("realization", pt.to_string() + " has the wrong dimension vector");
    reps.push_back(&m);
  }
  std::vector<std::size_t> rigid;
  for (std::size_t k = 0; k < points.size(); ++k)
    if (ext1_dim(*reps[k], *reps[k]) == 0) rigid.push_back(k);
  result.rigid_points = rigid.size();
  const std::size_t m = rigid.size();
  std::vector<std::vector<char>> orth(m, std::vector<char>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      orth[a][b] = orth[b][a] =
          ext1_dim(*reps[rigid[a]], *reps[rigid[b]]) == 0 && ext1_dim(*reps[rigid[b]], *reps[rigid[a]]) == 0;

  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (!chosen.empty()) {
      ++result.orthogonal_sets;
      const std::size_t size = chosen.size();
      result.largest_set = std::max(result.largest_set, size);
      std::string names;
      int length = 0;
      bool disjoint = true;
      std::set<int> covered;
      for (std::size_t c : chosen) {
        const TubePoint& pt = points[rigid[c]];
        names += (names.empty() ? "" : ", ") + pt.to_string();
        length += pt.length();
        for (int idx : apq.cone(pt))
          if (!covered.insert(idx).second) disjoint = false;
      }
      if (size > static_cast<std::size_t>(r - 1))
        result.report.fail(Violation{"orthogonal_size", std::nullopt, std::nullopt, static_cast<long long>(size),
                                     "{" + names + "} exceeds rank - 1"});
      if (disjoint) {
        ++result.disjoint_cone_sets;
        if (length > r - static_cast<int>(size))
          result.report.fail(Violation{"length_bound", std::nullopt, std::nullopt, length,
                                       "{" + names + "}: total length " + std::to_string(length) + " > " +
                                           std::to_string(r - static_cast<int>(size))});
      }
    }
    for (std::size_t c = start; c < m; ++c) {
      bool fits = true;
      for (std::size_t e : chosen) fits = fits && orth[e][c];
      if (!fits) continue;
      chosen.push_back(c);
      walk(c + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return result;
}

}  // namespace stratsys
