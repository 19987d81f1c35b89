#pragma once

#include "stratsys/check_report.hpp"
#include "stratsys/module.hpp"

#include <atomic>
#include <optional>
#include <string>
#include <vector>

namespace stratsys {

/// Ordered modules (X_1, ..., X_t), written left to right.
struct StratSystem {
  std::vector<Module> modules;

  std::size_t size() const { return modules.size(); }
  std::string to_string() const;
};

/// Running totals over every check_ss call that passed: how many systems
/// were seen and how many had more members than the quiver has vertices.
struct SizeBoundCounters {
  std::atomic<std::size_t> passing_systems{0};
  std::atomic<std::size_t> oversized{0};
};
SizeBoundCounters& size_bound_counters();

/// Hom(X_j, X_i) = 0 for j > i, Ext^1(X_j, X_i) = 0 for j >= i, each X_i
/// exceptional. A passing system larger than the vertex count is recorded as
/// a "size_bound" violation.
CheckReport check_ss(ModuleSpace& space, const StratSystem& s);

/// check_ss plus size == vertex count ("incomplete" otherwise).
CheckReport check_css(ModuleSpace& space, const StratSystem& s);

/// Orders tilting summands so that Hom(T_later, T_earlier) = 0. Throws
/// std::runtime_error("not orderable") when the Hom-quiver has a cycle.
StratSystem tilting_order(ModuleSpace& space, const std::vector<Module>& summands);

/// n pairwise non-isomorphic exceptional summands without mutual extensions.
CheckReport basic_tilting_check(ModuleSpace& space, const std::vector<Module>& summands);

struct FiltrationResult {
  enum class Status { Filtered, NotFiltered, TooLarge };
  Status status = Status::NotFiltered;
  std::vector<long long> multiplicities;  // [M : X_i], when filtered
  std::string detail;
};

inline constexpr long long kFiltrationDimCap = 12;

/// Multiplicities [M : X_i] of a filtration of M with factors in the system.
///
/// The top factor of such a filtration is X_1^{a}, a = dim Hom(M, X_1), and
/// the universal map M -> X_1^a is its projection; the kernel is peeled
/// recursively against (X_2, ..., X_t).
FiltrationResult filtration_multiplicity(ModuleSpace& space, const Module& m, const StratSystem& s,
                                         long long dim_cap = kFiltrationDimCap);

/// True iff Ext^1(X_i, X_j) = 0 for all i, j (then F(X) = add of the X_i).
bool is_filtration_finite(ModuleSpace& space, const StratSystem& s);

struct ExtendOptions {
  int exponent_bound = 6;                  // tau-orbit candidates tau^{-k}P_i, tau^k I_i with k <= bound
  std::vector<Module> extra_candidates;    // e.g. simple regular modules of a Euclidean quiver
  // Final positions (0-based, ascending) of the inserted modules; every
  // placement is tried when unset.
  std::optional<std::vector<std::size_t>> positions;
  bool collect_all = false;                // keep every completion, not just the first
};

struct ExtendResult {
  std::optional<StratSystem> first;
  std::vector<StratSystem> completions;    // filled when collect_all
  // With one open slot at a fixed position, the number of non-isomorphic
  // candidates that complete the system (at most one is expected).
  std::optional<std::size_t> single_slot_solutions;
  bool uniqueness_violated = false;
  std::vector<std::string> notes;
};

/// Candidate pool in deterministic order: (total dim, tau-exponent, vertex index),
/// deduplicated by dimension vector, zero and non-exceptional modules removed.
std::vector<Module> candidate_pool(ModuleSpace& space, const ExtendOptions& options);

ExtendResult extend_to_complete(ModuleSpace& space, const StratSystem& s, const ExtendOptions& options = {});

struct RegularSearchResult {
  std::size_t max_size = 0;
  StratSystem witness;             // a system of that size
  std::vector<Module> pool;        // regular exceptional modules searched
  std::size_t systems_seen = 0;    // passing systems met during the search
};

/// Largest s.s. made of regular exceptional modules of total dimension at
/// most `dim_cap` (exhaustive over the pool). Euclidean quivers only.
RegularSearchResult max_regular_ss_size(ModuleSpace& space, long long dim_cap);

/// Regular exceptional modules with total dimension <= dim_cap, one per real
/// root of defect zero.
std::vector<Module> regular_exceptional_pool(ModuleSpace& space, long long dim_cap);

}  // namespace stratsys
