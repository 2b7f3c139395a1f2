#include "sumprod/setio.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace sumprod {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view token) {
  const std::string_view original = token;
  bool negative = false;
  if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }
  const auto slash = token.find('/');
  const std::string_view num = token.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : token.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed number '" + std::string(original) + "'");
  // Leading zeros would select octal in the string constructor.
  auto decimal = [](std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return BigInt(std::string(digits));
  };
  BigInt p = decimal(num);
  BigInt q = decimal(den);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(original) + "'");
  if (negative) p = -p;
  return Rat(p, q);
}

std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenized_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens{std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
    out.emplace_back(line_no, std::move(tokens));
  }
  return out;
}

ParsedSet parse_set(std::string_view text) {
  std::vector<Rat> values;
  for (auto& [line_no, tokens] : tokenized_lines(text)) {
    if (tokens.size() != 1)
      throw ParseError("line " + std::to_string(line_no) + ": expected exactly one element");
    try {
      values.push_back(parse_rat(tokens.front()));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  const std::size_t raw = values.size();
  ParsedSet out{FinSet(std::move(values)), 0};
  out.duplicates = raw - out.set.size();
  return out;
}

std::vector<std::pair<Rat, Rat>> parse_pairs(std::string_view text) {
  std::vector<std::pair<Rat, Rat>> out;
  for (auto& [line_no, tokens] : tokenized_lines(text)) {
    if (tokens.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected two elements");
    out.emplace_back(parse_rat(tokens[0]), parse_rat(tokens[1]));
  }
  return out;
}

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

ParsedSet read_set_file(const std::string& path) { return parse_set(read_text(path)); }

std::string format_set(const FinSet& set) {
  std::string out;
  for (const Rat& q : set) {
    out += to_string(q);
    out += '\n';
  }
  return out;
}

std::string brace_list(const FinSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(set[i]);
  }
  return out + "}";
}

}  // namespace sumprod
