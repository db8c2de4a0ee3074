#include "omegalex/verify.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "omegalex/binomial.hpp"
#include "omegalex/cascade.hpp"
#include "omegalex/errors.hpp"
#include "omegalex/lex.hpp"

namespace omegalex {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  return (a > cap || b > cap - a) ? cap : a + b;
}

struct TaskResult {
  std::uint64_t best = 0;
  std::uint64_t count = 0;
  std::vector<std::uint32_t> witness;
  std::uint64_t audited = 0;
  std::uint64_t mismatches = 0;
};

// Depth-first walk over the index vectors i_0 < i_1 < ... < i_{m-1} that
// start with a fixed i_0. Degrees are kept incrementally, so adding a set
// raises omega by the current degree sum over its elements.
class SubtreeSearch {
 public:
  SubtreeSearch(const std::vector<std::uint64_t>& ground, int n, int k, std::size_t m,
                const OracleOptions& options)
      : ground_(ground), n_(n), k_(k), m_(m), options_(options), path_(m) {
    elems_.reserve(ground.size() * static_cast<std::size_t>(k));
    for (std::uint64_t bits : ground)
      for (std::uint64_t b = bits; b != 0; b &= b - 1) elems_.push_back(static_cast<std::uint8_t>(std::countr_zero(b)));
  }

  TaskResult run(std::uint32_t first) {
    result_ = TaskResult{};
    degrees_.fill(0);
    descend(0, first, first + 1, 0, 0);
    return result_;
  }

 private:
  std::uint64_t gain(std::uint32_t j) const {
    std::uint64_t g = 0;
    const std::uint8_t* e = elems_.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(k_);
    for (int t = 0; t < k_; ++t) g += degrees_[e[t]];
    return g;
  }

  void bump(std::uint32_t j, int by) {
    const std::uint8_t* e = elems_.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(k_);
    for (int t = 0; t < k_; ++t) degrees_[e[t]] = static_cast<std::uint32_t>(static_cast<int>(degrees_[e[t]]) + by);
  }

  void descend(std::size_t depth, std::uint32_t lo, std::uint32_t hi, std::uint64_t omega_here,
               std::uint64_t signature) {
    if (depth + 1 == m_) {
      for (std::uint32_t j = lo; j < hi; ++j) {
        path_[depth] = j;
        leaf(omega_here + gain(j), signature + mix64(j));
      }
      return;
    }
    for (std::uint32_t j = lo; j < hi; ++j) {
      path_[depth] = j;
      const std::uint64_t g = gain(j);
      bump(j, 1);
      const std::size_t left = m_ - depth - 1;
      descend(depth + 1, j + 1, static_cast<std::uint32_t>(ground_.size() - left + 1), omega_here + g,
              signature + mix64(j));
      bump(j, -1);
    }
  }

  void leaf(std::uint64_t value, std::uint64_t signature) {
    if (result_.count == 0 || value > result_.best) {
      result_.best = value;
      result_.count = 1;
      result_.witness = path_;
    } else if (value == result_.best) {
      result_.count = saturating_add(result_.count, 1, options_.count_limit);
    }
    if (options_.audit_ppm > 0 && mix64(signature ^ options_.audit_seed) % 1'000'000 < options_.audit_ppm) {
      ++result_.audited;
      std::array<std::uint64_t, kMaxUniverse> deg{};
      for (std::uint32_t idx : path_)
        for (int x = 0; x < n_; ++x) deg[static_cast<std::size_t>(x)] += (ground_[idx] >> x) & 1u;
      std::uint64_t fresh = 0;
      for (std::uint64_t d : deg) fresh += d * (d > 0 ? d - 1 : 0) / 2;
      if (fresh != value) ++result_.mismatches;
    }
  }

  const std::vector<std::uint64_t>& ground_;
  int n_;
  int k_;
  std::size_t m_;
  const OracleOptions& options_;
  std::vector<std::uint8_t> elems_;
  std::array<std::uint32_t, kMaxUniverse> degrees_{};
  std::vector<std::uint32_t> path_;
  TaskResult result_;
};

void require_member_shape(const Family& f, const KSet& s, const char* what) {
  if (s.universe() != f.universe() || s.size() != f.arity())
    throw Error(ErrorKind::argument, std::string(what) + " set " + to_string(s) + " does not match the family's (n, k)");
}

}  // namespace

u128 candidate_count(int n, int k, std::uint64_t m) {
  return binomial(binomial64(n, k), m);
}

VerifyRecord brute_force_max(int n, int k, std::uint64_t m, const OracleOptions& options) {
  const Family lex = lex_segment(n, k, m);

  u128 required = 0;
  bool overflowed = false;
  try {
    required = candidate_count(n, k, m);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::overflow) throw;
    overflowed = true;
  }
  if (overflowed || required > options.budget) {
    const std::string need = overflowed ? "more than 2^128" : to_string(required);
    throw BudgetError(need, "enumerating (n, k, m) = (" + std::to_string(n) + ", " + std::to_string(k) + ", " +
                                std::to_string(m) + ") needs " + need + " candidates, budget is " +
                                std::to_string(options.budget));
  }

  VerifyRecord rec{n, k, m, omega_via_degrees(lex), 0, false, 0, Family(n, k), 0, 0};
  if (m == 0) {
    rec.lex_is_optimal = true;
    rec.optimum_count = 1;
    return rec;
  }

  const std::vector<KSet> sets = all_ksets(n, k);
  std::vector<std::uint64_t> ground;
  ground.reserve(sets.size());
  for (const KSet& s : sets) ground.push_back(s.bits());

  const std::size_t tasks = ground.size() - m + 1;
  std::vector<TaskResult> results(tasks);
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    SubtreeSearch search(ground, n, k, m, options);
    for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1))
      results[t] = search.run(static_cast<std::uint32_t>(t));
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  // Merge in task order: the first task reaching the maximum owns the
  // lex-least witness.
  const TaskResult* owner = nullptr;
  for (const TaskResult& r : results) {
    rec.audited += r.audited;
    rec.audit_mismatches += r.mismatches;
    if (owner == nullptr || r.best > rec.omega_max) {
      rec.omega_max = r.best;
      rec.optimum_count = r.count;
      owner = &r;
    } else if (r.best == rec.omega_max) {
      rec.optimum_count = saturating_add(rec.optimum_count, r.count, options.count_limit);
    }
  }
  std::vector<KSet> witness;
  for (std::uint32_t idx : owner->witness) witness.push_back(sets[idx]);
  rec.witness = Family(n, k, std::move(witness));

  if (rec.omega_lex > rec.omega_max) throw std::logic_error("lex segment beats the exhaustive maximum");
  rec.lex_is_optimal = rec.omega_lex == rec.omega_max;
  return rec;
}

std::int64_t swap_delta(const Family& f, const KSet& out, const KSet& in) {
  require_member_shape(f, out, "removed");
  require_member_shape(f, in, "added");
  if (!f.contains(out)) throw Error(ErrorKind::argument, "removed set " + to_string(out) + " is not a member");
  if (f.contains(in)) throw Error(ErrorKind::argument, "added set " + to_string(in) + " is already a member");
  const Family rest = f.without(out);
  return static_cast<std::int64_t>(cross_omega(in, rest)) - static_cast<std::int64_t>(cross_omega(out, rest));
}

SearchTrace local_search(const Family& start, std::size_t max_steps) {
  const int n = start.universe();
  const int k = start.arity();
  const std::vector<KSet> ground = all_ksets(n, k);
  std::vector<bool> present(ground.size(), false);
  for (const KSet& s : start.members()) present[lex_rank(s) - 1] = true;

  std::vector<KSet> members(start.members().begin(), start.members().end());
  DegreeVector deg = degree_vector(start);
  const auto degree_sum = [&](const KSet& s) {
    std::uint64_t sum = 0;
    for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) sum += deg[std::countr_zero(b) + 1];
    return static_cast<std::int64_t>(sum);
  };

  SearchTrace trace{start, omega_via_degrees(start), {}, start, 0};
  while (trace.steps.size() < max_steps) {
    std::int64_t best = 0;
    std::size_t best_out = 0;
    std::size_t best_in = 0;
    for (std::size_t o = 0; o < ground.size(); ++o) {
      if (!present[o]) continue;
      // Cross weight of the removed set against the family without it.
      const std::int64_t out_weight = degree_sum(ground[o]) - k;
      for (std::size_t i = 0; i < ground.size(); ++i) {
        if (present[i]) continue;
        const std::int64_t in_weight = degree_sum(ground[i]) - intersection_size(ground[i], ground[o]);
        if (in_weight - out_weight > best) {
          best = in_weight - out_weight;
          best_out = o;
          best_in = i;
        }
      }
    }
    if (best <= 0) break;

    const KSet& out = ground[best_out];
    const KSet& in = ground[best_in];
    members.erase(std::find(members.begin(), members.end(), out));
    members.push_back(in);
    present[best_out] = false;
    present[best_in] = true;
    for (int x : out.elements()) --deg[x];
    for (int x : in.elements()) ++deg[x];
    trace.steps.push_back({out, in, best});
  }

  trace.final_family = Family(n, k, std::move(members));
  trace.final_omega = omega_via_degrees(trace.final_family);
  std::int64_t gained = 0;
  for (const SwapStep& s : trace.steps) gained += s.delta;
  if (static_cast<std::int64_t>(trace.final_omega) != static_cast<std::int64_t>(trace.start_omega) + gained)
    throw std::logic_error("search trace deltas do not add up");
  return trace;
}

bool check_star_peeling(const Family& f, int x) {
  const int n = f.universe();
  const int k = f.arity();
  if (x < 1 || x > n) throw Error(ErrorKind::argument, "element " + std::to_string(x) + " outside the universe");
  const std::uint64_t star_size = binomial64(n - 1, k - 1);
  if (star_size == 0 || degree_vector(f)[x] != star_size)
    throw Error(ErrorKind::argument, "family does not contain the full star at " + std::to_string(x));

  std::vector<KSet> star;
  std::vector<KSet> rest;
  for (const KSet& s : f.members()) (s.contains(x) ? star : rest).push_back(s);
  const std::uint64_t m = f.size();
  const std::uint64_t rhs = omega(Family(n, k, std::move(star))) + omega(Family(n, k, std::move(rest))) +
                            (m - star_size) * static_cast<std::uint64_t>(k) * binomial64(n - 2, k - 2);
  return omega(f) == rhs;
}

bool check_cover_complement(const Family& f, const CoverSet& cover) {
  if (cover.universe() != f.universe())
    throw Error(ErrorKind::argument, "cover lives in a different universe");
  if (!is_cover(f, cover)) throw Error(ErrorKind::argument, to_string(cover) + " is not a cover of the family");

  std::vector<KSet> meeting;
  std::vector<KSet> missing;
  for (const KSet& s : all_ksets(f.universe(), f.arity())) {
    if ((s.bits() & cover.bits()) == 0) continue;
    meeting.push_back(s);
    if (!f.contains(s)) missing.push_back(s);
  }
  const Family all_meeting(f.universe(), f.arity(), std::move(meeting));
  const Family gap(f.universe(), f.arity(), std::move(missing));
  const std::uint64_t k = static_cast<std::uint64_t>(f.arity());
  return omega(f) + cross_omega(gap, all_meeting) == omega(all_meeting) + omega(gap) + k * gap.size();
}

std::vector<VerifyRow> verify_table(int n, int k, std::uint64_t m_from, std::uint64_t m_to,
                                    const OracleOptions& options) {
  std::vector<VerifyRow> rows;
  if (m_from > m_to) return rows;
  Family shape(n, k);
  const std::uint64_t total = binomial64(n, k);
  if (m_to > total)
    throw Error(ErrorKind::range, "m = " + std::to_string(m_to) + " exceeds C(" + std::to_string(n) + ", " +
                                      std::to_string(k) + ") = " + std::to_string(total));
  for (std::uint64_t m = m_from;; ++m) {
    VerifyRow row{n, k, m, std::nullopt, std::nullopt, std::nullopt, omega_via_degrees(lex_segment(n, k, m)),
                  false, std::nullopt, {}};
    if (m >= 1) {
      row.cascade_end = cascade_end(n, k, m);
      row.bound = bey_bound(n, k, m);
      row.hypothesis_met = lex_optimality_hypothesis_holds(n, k, *row.cascade_end);
    }
    if (k == 2) row.graph_value = graph_best(n, m).value;
    try {
      row.record = brute_force_max(n, k, m, options);
    } catch (const BudgetError& e) {
      row.budget_required = e.required();
    }
    rows.push_back(std::move(row));
    if (m == m_to) break;
  }
  return rows;
}

}  // namespace omegalex
