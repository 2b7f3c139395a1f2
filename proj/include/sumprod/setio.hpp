#pragma once

#include "sumprod/core.hpp"
#include "sumprod/finset.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumprod {

/// One numeric token: optionally signed decimal integer, or `p/q` with q > 0.
Rat parse_rat(std::string_view token);

struct ParsedSet {
  FinSet set;
  std::size_t duplicates = 0;
};

/// Set-file format: one element per line; blank lines and `#` lines ignored.
ParsedSet parse_set(std::string_view text);
ParsedSet read_set_file(const std::string& path);  // "-" reads stdin

/// Element-pair file: two tokens per line, same grammar and comment rules.
std::vector<std::pair<Rat, Rat>> parse_pairs(std::string_view text);

/// Non-comment lines split into whitespace-separated tokens, with 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenized_lines(std::string_view text);

std::string read_text(const std::string& path);  // "-" reads stdin

/// One element per line, round-trips through parse_set.
std::string format_set(const FinSet& set);
/// `{a, b, c}` for summaries.
std::string brace_list(const FinSet& set);

}  // namespace sumprod
