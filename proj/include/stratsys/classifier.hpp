#pragma once

#include "stratsys/apq.hpp"
#include "stratsys/strat_system.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stratsys {

/// One member of a numbered family of complete systems.
struct FamilyInstance {
  int family = 0;
  std::map<std::string, long long> params;  // t, r, i as the family uses them
  StratSystem system;
  CheckReport report;                       // check_css of `system`
  std::vector<std::string> discrepancies;   // e.g. a vertex index outside the quiver

  // Uniqueness of the first member given the rest (A~(p,q) families only).
  std::optional<std::size_t> completions;
  std::optional<bool> first_recovered;

  bool passed() const {
    return report.passed() && discrepancies.empty() && completions.value_or(1) == 1 && first_recovered.value_or(true);
  }
  std::string label() const;
};

// ---- generalized Kronecker quiver (vertices 1, 2; arrows 2 -> 1) ----

/// Families (1)-(5) with exponent i <= bound:
///   (1) (I2, P1)  (2) (tau^-i P1, tau^-i P2)  (3) (tau^-i P2, tau^-i-1 P1)
///   (4) (tau^i I1, tau^i I2)  (5) (tau^i+1 I2, tau^i I1), i >= first_shift_5.
std::vector<FamilyInstance> kronecker_css_list(ModuleSpace& space, int bound, int first_shift_5 = 1);

struct KroneckerEnumeration {
  std::vector<Module> pool;                 // exceptional modules with entries <= cap
  std::vector<DimVector> unidentified;      // real roots that matched no orbit module
  std::vector<StratSystem> found;           // every complete pair in the pool
  std::vector<StratSystem> extras;          // found but not in the list
  std::vector<FamilyInstance> missing;      // listed (within cap) but not found
  // Vectors under the cap with q(x) <= 0: every module there has a self-extension.
  std::size_t imaginary_vectors = 0;
  std::vector<DimVector> regular_real_roots;  // real roots off the tau-orbits of P and I (should be none)
  std::vector<std::string> flags;
  // Flags other than the (tau I2, I1) extra; nonzero means the list is incomplete.
  std::size_t unexplained_flags = 0;
  bool consistent() const { return missing.empty() && unexplained_flags == 0; }
};

/// Brute force over ordered pairs of exceptional modules with every entry
/// <= dim_cap, compared against kronecker_css_list.
KroneckerEnumeration enumerate_css_kronecker(ModuleSpace& space, long long dim_cap);

/// dim Ext^1(R, R) for the thin regular bricks R = (1, 1) with maps (1, lambda, 0, ...).
std::vector<std::pair<Rational, std::size_t>> kronecker_thin_self_ext(ModuleSpace& space,
                                                                      const std::vector<Rational>& lambdas);

// ---- canonical A~(p,q) ----

struct YSearchResult {
  std::map<int, std::set<VertexLabel>> found;     // t -> vertices l with (F, G, Y_l^t) an s.s.
  std::map<int, std::set<VertexLabel>> expected;  // closed-form lists
  CheckReport report;                             // "y_set" violation per differing t
};

/// Y = tau^-t P_l (postprojective) resp. tau^t I_l (preinjective), t <= bound.
YSearchResult y_search_postprojective(Apq& apq, int bound, unsigned jobs = 1);
YSearchResult y_search_preinjective(Apq& apq, int bound, unsigned jobs = 1);
std::set<VertexLabel> expected_postprojective_y(int p, int q, int t);
std::set<VertexLabel> expected_preinjective_y(int p, int q, int t);

struct SincerityRow {
  OrbitCoord::Side side;
  VertexLabel vertex;
  int k;
  DimVector dims;
  bool sincere;
};

struct SincerityClaim {
  std::string id;          // e.g. "post.4a"
  std::string statement;
  bool holds = true;
  bool edge_range = false; // a claim whose printed index ranges are suspect; reported, not asserted
  std::vector<std::string> counterexamples;
};

struct SincerityProfile {
  std::vector<SincerityRow> rows;
  // Smallest r with tau^-k P_i (resp. tau^k I_i) sincere for every r <= k <= k_max.
  std::map<std::pair<int, VertexLabel>, std::optional<int>> minimal_r;  // key (0 post / 1 pre, i)
  std::vector<SincerityClaim> claims;
  const SincerityClaim* claim(const std::string& id) const;
};

SincerityProfile sincerity_profile(Apq& apq, int k_max);

struct FamilyOptions {
  int t_bound = 12;
  bool check_uniqueness = true;
  unsigned jobs = 1;
};

/// Instances (X, F, G, Y) of the twelve families for admissible t <= t_bound.
std::vector<FamilyInstance> apq_families(Apq& apq, const FamilyOptions& options);

struct RegularCssResult {
  std::optional<StratSystem> witness;
  std::vector<Module> pool;  // regular exceptional modules within the cap
  std::size_t real_roots = 0;
  std::string note;
};

/// Complete system of regular exceptional modules with entries <= dim_cap.
/// Requires a wild quiver with at least three vertices.
RegularCssResult regular_css_search(ModuleSpace& space, long long dim_cap);

}  // namespace stratsys
