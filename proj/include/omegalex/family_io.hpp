#pragma once

#include <string>
#include <string_view>

#include "omegalex/kset.hpp"

namespace omegalex {

// Text format:
//   # comment lines start with '#'
//   n k
//   1 2
//   1 3
// Blank lines are skipped. Malformed input raises ParseError with the
// offending line number.
Family parse_family(std::string_view text);
std::string format_family(const Family& f);

Family read_family_file(const std::string& path);
void write_family_file(const std::string& path, const Family& f);

}  // namespace omegalex
