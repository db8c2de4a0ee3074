#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "omegalex/constructions.hpp"
#include "omegalex/kset.hpp"
#include "omegalex/omega.hpp"

namespace omegalex {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct OracleOptions {
  // Maximum number of size-m families the oracle may enumerate.
  std::uint64_t budget = kDefaultBudget;
  // optimum_count saturates here.
  std::uint64_t count_limit = std::numeric_limits<std::uint64_t>::max();
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Fraction of candidates, in parts per million, whose incrementally kept
  // omega is re-derived from scratch. Selection is a hash of the candidate
  // and the seed, so it does not depend on scheduling.
  std::uint32_t audit_ppm = 0;
  std::uint64_t audit_seed = 0x6f6d6567616c6578ULL;
};

struct VerifyRecord {
  int n;
  int k;
  std::uint64_t m;
  std::uint64_t omega_lex;
  std::uint64_t omega_max;
  bool lex_is_optimal;
  std::uint64_t optimum_count;
  // Lex-least optimum, members in rank order.
  Family witness;
  std::uint64_t audited = 0;
  std::uint64_t audit_mismatches = 0;
};

// Number of size-m subfamilies of C([n], k), exact.
u128 candidate_count(int n, int k, std::uint64_t m);

// Exhaustive maximum of omega over every size-m subfamily of C([n], k).
// Throws BudgetError when candidate_count exceeds options.budget.
VerifyRecord brute_force_max(int n, int k, std::uint64_t m, const OracleOptions& options = {});

// omega(f \ {out} ∪ {in}) - omega(f), via the cross weights of in and out
// against f \ {out}. Throws Error{argument} unless out ∈ f and in ∉ f.
std::int64_t swap_delta(const Family& f, const KSet& out, const KSet& in);

struct SwapStep {
  KSet removed;
  KSet added;
  std::int64_t delta;
};

struct SearchTrace {
  Family start;
  std::uint64_t start_omega;
  std::vector<SwapStep> steps;
  Family final_family;
  std::uint64_t final_omega;
};

// Steepest-ascent hill climbing over single swaps. Among swaps with the best
// positive delta the one removing the lowest-ranked set wins, then the one
// adding the lowest-ranked set. Stops at a local maximum or after max_steps.
SearchTrace local_search(const Family& start, std::size_t max_steps);

// omega(f) = omega(S) + omega(f \ S) + (m - |S|) k C(n-2, k-2) where S is the
// full star at x. Throws Error{argument} if f does not contain that star.
bool check_star_peeling(const Family& f, int x);

// omega(f) = omega(A) + omega(G) - omega(G, A) + k |G| where A is every k-set
// meeting the cover and G = A \ f. Throws Error{argument} if cover does not
// cover f.
bool check_cover_complement(const Family& f, const CoverSet& cover);

struct VerifyRow {
  int n;
  int k;
  std::uint64_t m;
  std::optional<int> cascade_end;         // m >= 1
  std::optional<Rational> bound;          // m >= 1
  std::optional<std::uint64_t> graph_value;  // k == 2
  std::uint64_t omega_lex;
  bool hypothesis_met;
  std::optional<VerifyRecord> record;     // empty when over budget
  std::string budget_required;            // set when over budget
};

// One row per m in [m_from, m_to] (empty when m_from > m_to). Over-budget
// rows are kept with record unset.
std::vector<VerifyRow> verify_table(int n, int k, std::uint64_t m_from, std::uint64_t m_to,
                                    const OracleOptions& options = {});

}  // namespace omegalex
