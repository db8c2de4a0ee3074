#include "omegalex/cascade.hpp"

#include "omegalex/binomial.hpp"
#include "omegalex/errors.hpp"

namespace omegalex {

CascadeForm cascade_decompose(int n, int k, std::uint64_t m) {
  if (n < 1 || n > kMaxUniverse || k < 0 || k > n)
    throw Error(ErrorKind::validation, "invalid (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  const std::uint64_t total = binomial64(n, k);
  if (m < 1 || m > total)
    throw Error(ErrorKind::range, "m = " + std::to_string(m) + " outside [1, " + std::to_string(total) + "]");

  CascadeForm form;
  form.n = n;
  form.k = k;
  form.m = m;
  std::uint64_t rest = total - m;
  for (int bottom = k; bottom >= 1 && rest > 0; --bottom) {
    int top = n;
    while (binomial64(top, bottom) > rest) --top;
    form.terms.push_back({top, bottom});
    form.offsets.push_back(n - top);
    rest -= binomial64(top, bottom);
  }
  if (rest != 0)
    throw std::logic_error("greedy cascade left remainder " + std::to_string(rest) + " for (" + std::to_string(n) +
                           ", " + std::to_string(k) + ", " + std::to_string(m) + ")");
  return form;
}

int cascade_end(int n, int k, std::uint64_t m) { return cascade_decompose(n, k, m).end(); }

KSet last_lex_set(int n, int k, std::uint64_t m) {
  const CascadeForm form = cascade_decompose(n, k, m);
  std::vector<int> elems(form.offsets.begin(), form.offsets.end());
  const int s = static_cast<int>(form.length());
  for (int x = n - k + s + 1; x <= n; ++x) elems.push_back(x);
  return KSet(n, elems);
}

std::optional<ReducedInstance> star_peeling_reduction(const CascadeForm& form) {
  if (form.offsets.empty() || form.offsets.front() < 2 || form.k < 1) return std::nullopt;
  return ReducedInstance{form.n - 1, form.k, form.m - binomial64(form.n - 1, form.k - 1)};
}

std::optional<ReducedInstance> cover_reduction(const CascadeForm& form) {
  if (form.offsets.empty() || form.k < 2) return std::nullopt;
  const int n = form.n;
  const int k = form.k;
  const std::uint64_t covered = binomial64(n, k) - binomial64(n - form.offsets.front(), k);
  const std::uint64_t missing = covered - form.m;
  return ReducedInstance{n - 1, k - 1, binomial64(n - 1, k - 1) - missing};
}

bool lex_optimality_hypothesis_holds(int n, int k, int r) {
  const i128 kk = k;
  const i128 rr = r;
  return static_cast<i128>(n) > 36 * kk * (2 * kk + 1) * (kk + rr) * rr;
}

}  // namespace omegalex
