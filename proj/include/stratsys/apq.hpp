#pragma once

#include "stratsys/strat_system.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace stratsys {

/// Regular tube of the canonical A~(p,q) quiver: the two exceptional tubes
/// (Infty of rank p, Zero of rank q) or a homogeneous tube Lambda(lambda).
struct TubeLabel {
  enum class Tag { Infty, Zero, Lambda };
  Tag tag = Tag::Infty;
  Rational lambda = 0;  // Lambda only; nonzero

  static TubeLabel infty() { return {Tag::Infty, 0}; }
  static TubeLabel zero() { return {Tag::Zero, 0}; }
  static TubeLabel at(const Rational& lambda);

  std::string to_string() const;
  friend bool operator==(const TubeLabel& a, const TubeLabel& b) {
    return a.tag == b.tag && (a.tag != Tag::Lambda || a.lambda == b.lambda);
  }
};

/// E_i[j]: the module of regular length j on the ray starting at the mouth
/// module E_i, which is its unique simple regular submodule.
struct TubePoint {
  TubeLabel tube;
  int i = 1;
  int j = 1;
  int length() const { return j; }
  std::string to_string() const;
};

enum class FgSide { F, G };

/// Context for the canonical A~(p,q) quiver (vertices 0..p+q-1, sink 0,
/// source p+q-1, upper branch through 1..p-1, lower through p..p+q-2).
class Apq {
 public:
  Apq(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  const std::shared_ptr<const Quiver>& quiver() const { return quiver_; }
  ModuleSpace& space() { return *space_; }
  std::size_t n() const { return static_cast<std::size_t>(p_ + q_); }

  int rank(const TubeLabel& t) const;

  /// Mouth module E_index of the tube. Infty: S_i for i < p, E_p^(inf) for
  /// i = p. Zero: S_{p+j-1} for j < q, E_q^(0) for j = q. Lambda: index 1.
  Representation simple_regular(const TubeLabel& t, int index) const;
  /// Same, wrapped as a (cached) module of the space.
  Module mouth(const TubeLabel& t, int index);

  /// F_i = E_{p-i}^(inf), 1 <= i <= p-1; G_i = E_{q-i}^(0), 1 <= i <= q-1.
  Module f(int i);
  Module g(int i);
  /// (F_1, ..., F_{p-1}, G_1, ..., G_{q-1}).
  StratSystem fg_system();

  /// (E_{r-1}, ..., E_1) of a tube of rank r; empty for rank 1.
  StratSystem mouth_ss(const TubeLabel& t);

  /// E_i[j], built by iterated non-split extensions
  /// 0 -> E_i[j] -> E_i[j+1] -> E_{i+j} -> 0 (indices mod rank).
  const Representation& tube_point(const TubePoint& pt);
  /// Mouth indices covered by E_i[j]: i, ..., i+j-1 mod rank.
  std::set<int> cone(const TubePoint& pt) const;

  /// Reduce a mouth index to 1..rank.
  int wrap(const TubeLabel& t, int index) const;

 private:
  int p_, q_;
  std::shared_ptr<const Quiver> quiver_;
  std::unique_ptr<ModuleSpace> space_;
  mutable std::recursive_mutex mutex_;
  std::map<std::pair<std::string, int>, Module> mouth_cache_;
  std::map<std::tuple<std::string, int, int>, Representation> point_cache_;
};

/// tau E_{i+1} = E_i around each exceptional tube (tau E_1 = E_rank) and
/// tau E^(lambda) = E^(lambda) for the sampled lambdas. Notes record the
/// two G-side relations individually.
CheckReport verify_tau_cycles(Apq& apq, const std::vector<Rational>& lambdas = {1, 2, Rational(1, 2), -1});

/// Closed-form support of tau^n F (or tau^n G), as the union over its members.
std::set<VertexLabel> support_formula(int p, int q, FgSide side, long long n);

/// Structural tau^n F_i, tau^n G_i for |n| <= n_max compared to support_formula.
CheckReport verify_support_formula(Apq& apq, int n_max);

struct RigidBoundResult {
  CheckReport report;
  std::size_t points = 0;             // E_i[j] realized (1 <= j <= rank)
  std::size_t rigid_points = 0;
  std::size_t orthogonal_sets = 0;    // nonempty Ext-orthogonal multiplicity-free sets
  std::size_t disjoint_cone_sets = 0; // those with pairwise disjoint cones
  std::size_t largest_set = 0;
};

/// For every Ext-orthogonal set {N_1..N_t} of tube points with pairwise
/// disjoint cones: sum of lengths <= rank - t. Every Ext-orthogonal set
/// has at most rank - 1 members.
RigidBoundResult tube_rigid_bound_check(Apq& apq, const TubeLabel& t);

}  // namespace stratsys
