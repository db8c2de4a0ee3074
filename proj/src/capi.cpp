#include "omegalex/omegalex.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "omegalex/binomial.hpp"
#include "omegalex/cascade.hpp"
#include "omegalex/constructions.hpp"
#include "omegalex/errors.hpp"
#include "omegalex/family_io.hpp"
#include "omegalex/lex.hpp"
#include "omegalex/omega.hpp"
#include "omegalex/verify.hpp"

struct ol_family {
  omegalex::Family value;
};

struct ol_trace {
  omegalex::SearchTrace value;
  ol_family final_family;
};

struct ol_table {
  std::vector<omegalex::VerifyRow> rows;
};

namespace {

using namespace omegalex;

thread_local std::string last_error;

ol_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return OL_E_VALIDATION;
    case ErrorKind::range: return OL_E_RANGE;
    case ErrorKind::overflow: return OL_E_OVERFLOW;
    case ErrorKind::compatibility: return OL_E_COMPATIBILITY;
    case ErrorKind::argument: return OL_E_ARGUMENT;
    case ErrorKind::budget: return OL_E_BUDGET;
    case ErrorKind::parse: return OL_E_PARSE;
    case ErrorKind::io: return OL_E_IO;
  }
  return OL_E_INTERNAL;
}

template <class Fn>
ol_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return OL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return OL_E_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw Error(ErrorKind::argument, std::string(name) + " is null");
}

ol_family* wrap(Family f) { return new ol_family{std::move(f)}; }

std::int64_t to_i64(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorKind::overflow, "value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

OracleOptions to_options(const ol_oracle_options* in) {
  OracleOptions o;
  if (in == nullptr) return o;
  if (in->budget != 0) o.budget = in->budget;
  o.threads = in->threads;
  o.audit_ppm = in->audit_ppm;
  o.audit_seed = in->audit_seed;
  return o;
}

void fill_row(const VerifyRow& r, ol_verify_row* out) {
  *out = ol_verify_row{};
  out->n = r.n;
  out->k = r.k;
  out->m = r.m;
  out->has_cascade_end = r.cascade_end.has_value();
  out->cascade_end = r.cascade_end.value_or(0);
  if (r.bound) {
    out->has_bound = 1;
    out->bound_num = to_i64(r.bound->num());
    out->bound_den = static_cast<std::uint64_t>(to_i64(r.bound->den()));
  }
  out->has_graph_value = r.graph_value.has_value();
  out->graph_value = r.graph_value.value_or(0);
  out->omega_lex = r.omega_lex;
  out->hypothesis_met = r.hypothesis_met;
  out->over_budget = !r.record.has_value();
  if (r.record) {
    out->omega_max = r.record->omega_max;
    out->lex_is_optimal = r.record->lex_is_optimal;
    out->optimum_count = r.record->optimum_count;
    out->audited = r.record->audited;
    out->audit_mismatches = r.record->audit_mismatches;
  }
}

}  // namespace

extern "C" {

const char* ol_last_error(void) { return last_error.c_str(); }

const char* ol_status_name(ol_status status) {
  switch (status) {
    case OL_OK: return "ok";
    case OL_E_VALIDATION: return "validation error";
    case OL_E_RANGE: return "range error";
    case OL_E_OVERFLOW: return "arithmetic overflow";
    case OL_E_COMPATIBILITY: return "compatibility error";
    case OL_E_ARGUMENT: return "argument error";
    case OL_E_BUDGET: return "budget exceeded";
    case OL_E_PARSE: return "parse error";
    case OL_E_IO: return "i/o error";
    case OL_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ol_status ol_binomial(uint64_t n, uint64_t k, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = to_u64(binomial(n, k));
  });
}

ol_status ol_family_parse(const char* text, ol_family** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(parse_family(text));
  });
}

ol_status ol_family_read(const char* path, ol_family** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(read_family_file(path));
  });
}

ol_status ol_family_write(const ol_family* f, const char* path) {
  return guarded([&] {
    require(f, "family");
    require(path, "path");
    write_family_file(path, f->value);
  });
}

ol_status ol_family_format(const ol_family* f, char** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    const std::string text = format_family(f->value);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void ol_string_free(char* s) { std::free(s); }
void ol_family_free(ol_family* f) { delete f; }

int ol_family_universe(const ol_family* f) { return f ? f->value.universe() : 0; }
int ol_family_arity(const ol_family* f) { return f ? f->value.arity() : 0; }
size_t ol_family_size(const ol_family* f) { return f ? f->value.size() : 0; }

ol_status ol_family_member_bits(const ol_family* f, size_t i, uint64_t* out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    if (i >= f->value.size()) throw Error(ErrorKind::range, "member index out of range");
    *out = f->value[i].bits();
  });
}

ol_status ol_lex_segment(int n, int k, uint64_t m, ol_family** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(lex_segment(n, k, m));
  });
}

ol_status ol_complement(const ol_family* f, ol_family** out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    *out = wrap(complement_family(f->value));
  });
}

ol_status ol_lex_rank(int n, uint64_t bits, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = lex_rank(KSet::from_bits(n, bits));
  });
}

ol_status ol_lex_unrank(int n, int k, uint64_t rank, uint64_t* bits) {
  return guarded([&] {
    require(bits, "bits");
    *bits = lex_unrank(n, k, rank).bits();
  });
}

ol_status ol_omega(const ol_family* f, uint64_t* out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    *out = omega(f->value);
  });
}

ol_status ol_omega_via_degrees(const ol_family* f, uint64_t* out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    *out = omega_via_degrees(f->value);
  });
}

ol_status ol_cross_omega(const ol_family* f, const ol_family* g, uint64_t* out) {
  return guarded([&] {
    require(f, "family");
    require(g, "family");
    require(out, "out");
    *out = cross_omega(f->value, g->value);
  });
}

ol_status ol_degree_vector(const ol_family* f, uint64_t* out, size_t capacity) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    const DegreeVector deg = degree_vector(f->value);
    if (capacity < deg.values().size()) throw Error(ErrorKind::argument, "degree buffer too small");
    std::copy(deg.values().begin(), deg.values().end(), out);
  });
}

ol_status ol_disjoint_pairs(const ol_family* f, uint64_t* out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    *out = disjoint_pairs(f->value);
  });
}

ol_status ol_full_stars(const ol_family* f, uint64_t* bits) {
  return guarded([&] {
    require(f, "family");
    require(bits, "bits");
    *bits = full_stars(f->value).bits();
  });
}

ol_status ol_is_cover(const ol_family* f, uint64_t cover_bits, int* out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    *out = is_cover(f->value, CoverSet::from_bits(f->value.universe(), cover_bits)) ? 1 : 0;
  });
}

ol_status ol_minimum_cover(const ol_family* f, int size_limit, int* found, uint64_t* bits) {
  return guarded([&] {
    require(f, "family");
    require(found, "found");
    require(bits, "bits");
    const auto cover = minimum_cover(f->value, size_limit);
    *found = cover.has_value() ? 1 : 0;
    *bits = cover ? cover->bits() : 0;
  });
}

ol_status ol_cascade_decompose(int n, int k, uint64_t m, ol_cascade* out) {
  return guarded([&] {
    require(out, "out");
    const CascadeForm form = cascade_decompose(n, k, m);
    *out = ol_cascade{};
    out->n = form.n;
    out->k = form.k;
    out->m = form.m;
    out->length = static_cast<int>(form.length());
    for (std::size_t i = 0; i < form.length(); ++i) {
      out->top[i] = form.terms[i].top;
      out->bottom[i] = form.terms[i].bottom;
      out->offset[i] = form.offsets[i];
    }
    out->end = form.end();
    out->last_set_bits = last_lex_set(n, k, m).bits();
  });
}

ol_status ol_full_star(int n, int k, int x, ol_family** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(full_star_family(n, k, x));
  });
}

ol_status ol_quasi_complete(int n, uint64_t m, ol_family** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(quasi_complete(n, m));
  });
}

ol_status ol_quasi_star(int n, uint64_t m, ol_family** out) {
  return guarded([&] {
    require(out, "out");
    *out = wrap(quasi_star(n, m));
  });
}

ol_status ol_graph_best_of(int n, uint64_t m, ol_graph_best* out) {
  return guarded([&] {
    require(out, "out");
    const GraphBest best = graph_best(n, m);
    out->value = best.value;
    out->which = best.which == GraphWinner::quasi_complete ? OL_QUASI_COMPLETE
                 : best.which == GraphWinner::quasi_star   ? OL_QUASI_STAR
                                                           : OL_TIE;
    out->omega_quasi_complete = best.omega_quasi_complete;
    out->omega_quasi_star = best.omega_quasi_star;
  });
}

ol_status ol_bey_bound(int n, int k, uint64_t m, int64_t* num, uint64_t* den) {
  return guarded([&] {
    require(num, "num");
    require(den, "den");
    const Rational r = bey_bound(n, k, m);
    *num = to_i64(r.num());
    *den = static_cast<std::uint64_t>(to_i64(r.den()));
  });
}

ol_status ol_bey_catalog_size(int n, int k, uint64_t m, size_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = bey_equality_catalog(n, k, m).size();
  });
}

void ol_oracle_options_init(ol_oracle_options* options) {
  if (options == nullptr) return;
  *options = ol_oracle_options{};
  options->budget = kDefaultBudget;
  options->audit_seed = OracleOptions{}.audit_seed;
}

ol_status ol_default_budget(uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = kDefaultBudget;
    const char* env = std::getenv("OMEGA_LEX_BUDGET");
    if (env == nullptr || *env == '\0') return;
    const std::string_view text(env);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0)
      throw Error(ErrorKind::validation, "OMEGA_LEX_BUDGET must be a positive integer, got '" + std::string(text) + "'");
    *out = v;
  });
}

ol_status ol_verify_table(int n, int k, uint64_t m_from, uint64_t m_to, const ol_oracle_options* options,
                          ol_table** out) {
  return guarded([&] {
    require(out, "out");
    *out = new ol_table{verify_table(n, k, m_from, m_to, to_options(options))};
  });
}

size_t ol_table_size(const ol_table* t) { return t ? t->rows.size() : 0; }

ol_status ol_table_row(const ol_table* t, size_t i, ol_verify_row* out) {
  return guarded([&] {
    require(t, "table");
    require(out, "out");
    if (i >= t->rows.size()) throw Error(ErrorKind::range, "row index out of range");
    fill_row(t->rows[i], out);
  });
}

const char* ol_table_row_required(const ol_table* t, size_t i) {
  if (t == nullptr || i >= t->rows.size()) return "";
  return t->rows[i].budget_required.c_str();
}

void ol_table_free(ol_table* t) { delete t; }

ol_status ol_brute_force_max(int n, int k, uint64_t m, const ol_oracle_options* options, ol_verify_row* row,
                             ol_family** witness) {
  return guarded([&] {
    require(row, "row");
    VerifyRecord rec = brute_force_max(n, k, m, to_options(options));
    VerifyRow full{n, k, m, std::nullopt, std::nullopt, std::nullopt, rec.omega_lex, false, std::nullopt, {}};
    if (m >= 1) {
      full.cascade_end = cascade_end(n, k, m);
      full.bound = bey_bound(n, k, m);
      full.hypothesis_met = lex_optimality_hypothesis_holds(n, k, *full.cascade_end);
    }
    if (k == 2) full.graph_value = graph_best(n, m).value;
    if (witness != nullptr) *witness = wrap(rec.witness);
    full.record = std::move(rec);
    fill_row(full, row);
  });
}

ol_status ol_swap_delta(const ol_family* f, uint64_t out_bits, uint64_t in_bits, int64_t* out) {
  return guarded([&] {
    require(f, "family");
    require(out, "out");
    const int n = f->value.universe();
    *out = swap_delta(f->value, KSet::from_bits(n, out_bits), KSet::from_bits(n, in_bits));
  });
}

ol_status ol_local_search(const ol_family* start, size_t max_steps, ol_trace** out) {
  return guarded([&] {
    require(start, "family");
    require(out, "out");
    SearchTrace trace = local_search(start->value, max_steps);
    Family last = trace.final_family;
    *out = new ol_trace{std::move(trace), ol_family{std::move(last)}};
  });
}

size_t ol_trace_length(const ol_trace* t) { return t ? t->value.steps.size() : 0; }

ol_status ol_trace_step(const ol_trace* t, size_t i, uint64_t* removed_bits, uint64_t* added_bits, int64_t* delta) {
  return guarded([&] {
    require(t, "trace");
    if (i >= t->value.steps.size()) throw Error(ErrorKind::range, "step index out of range");
    const SwapStep& s = t->value.steps[i];
    if (removed_bits) *removed_bits = s.removed.bits();
    if (added_bits) *added_bits = s.added.bits();
    if (delta) *delta = s.delta;
  });
}

uint64_t ol_trace_start_omega(const ol_trace* t) { return t ? t->value.start_omega : 0; }
uint64_t ol_trace_final_omega(const ol_trace* t) { return t ? t->value.final_omega : 0; }
const ol_family* ol_trace_final_family(const ol_trace* t) { return t ? &t->final_family : nullptr; }
void ol_trace_free(ol_trace* t) { delete t; }

}  // extern "C"
