#include "omegalex/family_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "omegalex/errors.hpp"

namespace omegalex {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<long long> parse_integers(std::string_view line, std::size_t lineno) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    const std::string_view tok = line.substr(i, j - i);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(lineno, "expected an integer, got '" + std::string(tok) + "'");
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

Family parse_family(std::string_view text) {
  int n = 0;
  int k = 0;
  bool have_header = false;
  std::vector<KSet> members;
  std::unordered_set<std::uint64_t> seen;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;

    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    const std::vector<long long> values = parse_integers(line, lineno);
    if (!have_header) {
      if (values.size() != 2) throw ParseError(lineno, "header must be 'n k'");
      if (values[0] < 1 || values[0] > kMaxUniverse)
        throw ParseError(lineno, "n must lie in [1, 64]");
      if (values[1] < 1 || values[1] > values[0]) throw ParseError(lineno, "k must lie in [1, n]");
      n = static_cast<int>(values[0]);
      k = static_cast<int>(values[1]);
      have_header = true;
      continue;
    }
    if (values.size() != static_cast<std::size_t>(k))
      throw ParseError(lineno, "expected " + std::to_string(k) + " elements, got " +
                                   std::to_string(values.size()));
    std::vector<int> elems;
    elems.reserve(values.size());
    for (long long v : values) {
      if (v < 1 || v > n)
        throw ParseError(lineno, "element " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
      if (!elems.empty() && v <= elems.back())
        throw ParseError(lineno, "elements must be strictly increasing");
      elems.push_back(static_cast<int>(v));
    }
    const KSet s(n, elems);
    if (!seen.insert(s.bits()).second) throw ParseError(lineno, "duplicate set " + to_string(s));
    members.push_back(s);
  }
  if (!have_header) throw ParseError(lineno, "missing 'n k' header");
  return Family(n, k, std::move(members));
}

std::string format_family(const Family& f) {
  std::ostringstream out;
  out << f.universe() << ' ' << f.arity() << '\n';
  for (const KSet& s : f.members()) {
    bool first = true;
    for (int x : s.elements()) {
      if (!first) out << ' ';
      out << x;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

void write_family_file(const std::string& path, const Family& f) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path);
  out << format_family(f);
  if (!out) throw Error(ErrorKind::io, "write failed for " + path);
}

}  // namespace omegalex
