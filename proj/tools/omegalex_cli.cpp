// omegalex command-line front end. Talks to the library only through the C
// interface in omegalex.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "omegalex/omegalex.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;

// Thrown to unwind with a status already reported by the library.
struct Failure {
  ol_status status;
};

void check(ol_status s) {
  if (s != OL_OK) throw Failure{s};
}

struct FamilyDeleter {
  void operator()(ol_family* f) const { ol_family_free(f); }
};
using FamilyPtr = std::unique_ptr<ol_family, FamilyDeleter>;

struct TraceDeleter {
  void operator()(ol_trace* t) const { ol_trace_free(t); }
};
struct TableDeleter {
  void operator()(ol_table* t) const { ol_table_free(t); }
};

std::string set_string(std::uint64_t bits) {
  std::string out = "{";
  bool first = true;
  for (int x = 1; x <= 64; ++x) {
    if (((bits >> (x - 1)) & 1u) == 0) continue;
    if (!first) out += ' ';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

FamilyPtr read_family(const std::string& path) {
  ol_family* f = nullptr;
  check(ol_family_read(path.c_str(), &f));
  return FamilyPtr(f);
}

void emit_family(const ol_family* f, const std::string& path) {
  if (!path.empty()) {
    check(ol_family_write(f, path.c_str()));
    return;
  }
  char* text = nullptr;
  check(ol_family_format(f, &text));
  std::cout << text;
  ol_string_free(text);
}

std::string bool_string(int b) { return b ? "true" : "false"; }

const char* winner_name(ol_graph_winner w) {
  switch (w) {
    case OL_QUASI_COMPLETE: return "quasi_complete";
    case OL_QUASI_STAR: return "quasi_star";
    case OL_TIE: return "tie";
  }
  return "?";
}

int run_lex(int n, int k, std::uint64_t m, const std::string& out_path) {
  ol_family* f = nullptr;
  check(ol_lex_segment(n, k, m, &f));
  FamilyPtr owned(f);
  emit_family(f, out_path);
  return kExitOk;
}

int run_omega(const std::string& path) {
  FamilyPtr f = read_family(path);
  const int n = ol_family_universe(f.get());
  std::uint64_t value = 0;
  std::uint64_t disjoint = 0;
  std::uint64_t stars = 0;
  std::vector<std::uint64_t> deg(static_cast<std::size_t>(n));
  check(ol_omega(f.get(), &value));
  check(ol_degree_vector(f.get(), deg.data(), deg.size()));
  check(ol_disjoint_pairs(f.get(), &disjoint));
  check(ol_full_stars(f.get(), &stars));
  int found = 0;
  std::uint64_t cover = 0;
  constexpr int kCoverLimit = 4;
  check(ol_minimum_cover(f.get(), kCoverLimit, &found, &cover));

  std::cout << "n = " << n << '\n'
            << "k = " << ol_family_arity(f.get()) << '\n'
            << "m = " << ol_family_size(f.get()) << '\n'
            << "omega = " << value << '\n'
            << "degrees =";
  for (std::uint64_t d : deg) std::cout << ' ' << d;
  std::cout << '\n'
            << "disjoint_pairs = " << disjoint << '\n'
            << "full_stars = " << set_string(stars) << '\n'
            << "minimum_cover = ";
  if (found)
    std::cout << set_string(cover) << '\n';
  else
    std::cout << "none of size <= " << kCoverLimit << '\n';
  return kExitOk;
}

int run_cascade(int n, int k, std::uint64_t m) {
  ol_cascade c{};
  check(ol_cascade_decompose(n, k, m, &c));
  std::cout << "n = " << c.n << '\n' << "k = " << c.k << '\n' << "m = " << c.m << '\n' << "terms = ";
  if (c.length == 0) std::cout << "(empty)";
  for (int i = 0; i < c.length; ++i)
    std::cout << (i ? " + " : "") << "C(" << c.top[i] << "," << c.bottom[i] << ")";
  std::cout << '\n' << "r = (";
  for (int i = 0; i < c.length; ++i) std::cout << (i ? "," : "") << c.offset[i];
  std::cout << ")\n" << "end = " << c.end << '\n' << "last_set = " << set_string(c.last_set_bits) << '\n';
  return kExitOk;
}

int run_bounds(int n, int k, std::uint64_t m) {
  ol_family* lex = nullptr;
  check(ol_lex_segment(n, k, m, &lex));
  FamilyPtr owned(lex);
  std::uint64_t omega_lex = 0;
  check(ol_omega(lex, &omega_lex));

  std::cout << "n = " << n << '\n' << "k = " << k << '\n' << "m = " << m << '\n';
  if (m >= 1) {
    std::int64_t num = 0;
    std::uint64_t den = 0;
    std::size_t catalog = 0;
    check(ol_bey_bound(n, k, m, &num, &den));
    check(ol_bey_catalog_size(n, k, m, &catalog));
    std::cout << "bey_bound = " << num << '/' << den << '\n' << "bey_equality_families = " << catalog << '\n';
  } else {
    std::cout << "bey_bound = n/a\n";
  }
  std::cout << "omega_lex = " << omega_lex << '\n';
  if (k == 2) {
    ol_graph_best best{};
    check(ol_graph_best_of(n, m, &best));
    std::cout << "omega_quasi_complete = " << best.omega_quasi_complete << '\n'
              << "omega_quasi_star = " << best.omega_quasi_star << '\n'
              << "ak_best = " << best.value << " (" << winner_name(best.which) << ")\n";
  }
  return kExitOk;
}

int run_verify(int n, int k, std::uint64_t from, std::uint64_t to, std::uint64_t budget, unsigned threads,
               std::uint64_t seed, std::uint32_t audit_ppm, const std::string& csv_path) {
  ol_oracle_options opts;
  ol_oracle_options_init(&opts);
  if (budget == 0) check(ol_default_budget(&budget));
  opts.budget = budget;
  opts.threads = threads;
  opts.audit_ppm = audit_ppm;
  opts.audit_seed = seed;

  ol_table* raw = nullptr;
  check(ol_verify_table(n, k, from, to, &opts, &raw));
  std::unique_ptr<ol_table, TableDeleter> table(raw);

  std::ostringstream csv;
  csv << "n,k,m,cascade_end,omega_lex,omega_max,lex_is_optimal,optimum_count,bey_bound_num,bey_bound_den,ak_value\n";
  bool over_budget = false;
  bool audit_failed = false;
  for (std::size_t i = 0; i < ol_table_size(raw); ++i) {
    ol_verify_row r{};
    check(ol_table_row(raw, i, &r));
    csv << r.n << ',' << r.k << ',' << r.m << ',';
    if (r.has_cascade_end) csv << r.cascade_end;
    csv << ',' << r.omega_lex << ',';
    if (!r.over_budget) csv << r.omega_max << ',' << bool_string(r.lex_is_optimal) << ',' << r.optimum_count;
    else csv << ",,";
    csv << ',';
    if (r.has_bound) csv << r.bound_num << ',' << r.bound_den;
    else csv << ',';
    csv << ',';
    if (r.has_graph_value) csv << r.graph_value;
    csv << '\n';
    if (r.over_budget) {
      over_budget = true;
      std::cerr << "m = " << r.m << ": budget exceeded, " << ol_table_row_required(raw, i)
                << " candidates required\n";
    }
    if (r.audit_mismatches != 0) {
      audit_failed = true;
      std::cerr << "m = " << r.m << ": " << r.audit_mismatches << " audited candidates disagree\n";
    }
  }
  if (csv_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
    out << csv.str();
    if (!out) {
      std::cerr << "error: cannot write " << csv_path << '\n';
      return kExitInvalid;
    }
  }
  if (audit_failed) return kExitInvalid;
  return over_budget ? kExitBudget : kExitOk;
}

int run_search(const std::string& path, std::size_t max_steps) {
  FamilyPtr f = read_family(path);
  ol_trace* raw = nullptr;
  check(ol_local_search(f.get(), max_steps, &raw));
  std::unique_ptr<ol_trace, TraceDeleter> trace(raw);
  std::cout << "start_omega = " << ol_trace_start_omega(raw) << '\n';
  for (std::size_t i = 0; i < ol_trace_length(raw); ++i) {
    std::uint64_t removed = 0;
    std::uint64_t added = 0;
    std::int64_t delta = 0;
    check(ol_trace_step(raw, i, &removed, &added, &delta));
    std::cout << "step " << i + 1 << ": remove " << set_string(removed) << " add " << set_string(added)
              << " delta +" << delta << '\n';
  }
  std::cout << "steps = " << ol_trace_length(raw) << '\n'
            << "final_omega = " << ol_trace_final_omega(raw) << '\n'
            << "final_family:\n";
  emit_family(ol_trace_final_family(raw), "");
  return kExitOk;
}

int run_complement(const std::string& path, const std::string& out_path) {
  FamilyPtr f = read_family(path);
  ol_family* c = nullptr;
  check(ol_complement(f.get(), &c));
  FamilyPtr owned(c);
  emit_family(c, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection-weight tools for k-uniform set families"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  std::uint64_t m = 0;
  std::string out_path;
  std::string in_path;

  auto* lex = app.add_subcommand("lex", "Write the first M k-subsets of [N] in lex order");
  lex->add_option("--n", n, "Universe size")->required()->check(CLI::Range(1, 64));
  lex->add_option("--k", k, "Set size")->required()->check(CLI::Range(0, 64));
  lex->add_option("--m", m, "Family size")->required();
  lex->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* om = app.add_subcommand("omega", "Report omega, degrees, disjoint pairs, full stars and a minimum cover");
  om->add_option("file", in_path, "Family file")->required();

  auto* cas = app.add_subcommand("cascade", "Cascade expansion of C(N,K) - M and the last lex set");
  cas->add_option("--n", n, "Universe size")->required()->check(CLI::Range(1, 64));
  cas->add_option("--k", k, "Set size")->required()->check(CLI::Range(0, 64));
  cas->add_option("--m", m, "Family size")->required();

  auto* bnd = app.add_subcommand("bounds", "Degree-square upper bound and, for K = 2, the two graph constructions");
  bnd->add_option("--n", n, "Universe size")->required()->check(CLI::Range(1, 64));
  bnd->add_option("--k", k, "Set size")->required()->check(CLI::Range(0, 64));
  bnd->add_option("--m", m, "Family size")->required();

  std::uint64_t m_from = 0;
  std::uint64_t m_to = 0;
  std::uint64_t budget = 0;
  unsigned threads = 0;
  std::uint64_t seed = 0x6f6d6567616c6578ULL;
  std::uint32_t audit_ppm = 10'000;
  std::string csv_path;
  auto* ver = app.add_subcommand("verify", "Exhaustive verification table as CSV");
  ver->add_option("--n", n, "Universe size")->required()->check(CLI::Range(1, 64));
  ver->add_option("--k", k, "Set size")->required()->check(CLI::Range(0, 64));
  ver->add_option("--m-from", m_from, "First family size")->required();
  ver->add_option("--m-to", m_to, "Last family size")->required();
  ver->add_option("--budget", budget, "Candidate budget per row (default $OMEGA_LEX_BUDGET or 1e8)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--threads", threads, "Worker threads (0 = all cores)");
  ver->add_option("--seed", seed, "Seed for audit sampling");
  ver->add_option("--audit-ppm", audit_ppm, "Audited candidates per million")->check(CLI::Range(0, 1'000'000));
  ver->add_option("--csv", csv_path, "CSV output file (default stdout)");

  std::size_t max_steps = 1000;
  auto* sea = app.add_subcommand("search", "Steepest-ascent swap search from a family");
  sea->add_option("file", in_path, "Family file")->required();
  sea->add_option("--max-steps", max_steps, "Step limit");

  auto* comp = app.add_subcommand("complement", "Write the complement family");
  comp->add_option("file", in_path, "Family file")->required();
  comp->add_option("-o,--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*lex) return run_lex(n, k, m, out_path);
    if (*om) return run_omega(in_path);
    if (*cas) return run_cascade(n, k, m);
    if (*bnd) return run_bounds(n, k, m);
    if (*ver) return run_verify(n, k, m_from, m_to, budget, threads, seed, audit_ppm, csv_path);
    if (*sea) return run_search(in_path, max_steps);
    if (*comp) return run_complement(in_path, out_path);
  } catch (const Failure& f) {
    std::cerr << "error: " << ol_status_name(f.status) << ": " << ol_last_error() << '\n';
    return f.status == OL_E_BUDGET ? kExitBudget : kExitInvalid;
  }
  return kExitInvalid;
}
