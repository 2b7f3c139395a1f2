#include "sumprod/progressions.hpp"

#include "sumprod/arith.hpp"
#include "sumprod/setio.hpp"

#include <limits>
#include <string>

namespace sumprod {

namespace {

using RatRow = std::vector<Rat>;

// Reduced row echelon form of the augmented system M x = b.
struct Solver {
  std::vector<RatRow> rows;  // each row has s coefficients followed by the rhs
  std::vector<std::size_t> pivots;
  bool consistent = true;

  Solver(std::vector<RatRow> augmented, std::size_t s) : rows(std::move(augmented)) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < s && r < rows.size(); ++c) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][c] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      const Rat lead = rows[r][c];
      for (Rat& x : rows[r]) x /= lead;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        const Rat f = rows[i][c];
        for (std::size_t j = c; j <= s; ++j) rows[i][j] -= f * rows[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][s] != 0) consistent = false;
    rows.resize(r);
  }
};

std::uint64_t parse_length(const std::string& token, std::size_t line) {
  const Rat q = parse_rat(token);
  if (!is_integer(q) || q < 1 || q > Rat(BigInt(std::numeric_limits<std::uint64_t>::max())))
    throw ParseError("progression file line " + std::to_string(line) + ": length must be a positive integer, got " +
                     token);
  return numerator_of(q).convert_to<std::uint64_t>();
}

}  // namespace

void ProgressionDesc::validate() const {
  if (base <= 0) throw DomainError("progression: base must be positive, got " + to_string(base));
  if (ratios.size() != lengths.size()) throw DomainError("progression: ratio and length counts differ");
  for (const Rat& r : ratios) {
    if (r <= 0) throw DomainError("progression: ratio must be positive, got " + to_string(r));
    if (r == 1) throw DomainError("progression: ratio 1 adds no direction");
  }
  for (std::uint64_t j : lengths)
    if (j == 0) throw DomainError("progression: lengths must be at least 1");
}

BigInt ProgressionDesc::volume() const {
  BigInt v = 1;
  for (std::uint64_t j : lengths) v *= j;
  return v;
}

ProgressionDesc make_progression(Rat base, std::vector<Rat> ratios, std::vector<std::uint64_t> lengths) {
  ProgressionDesc p{std::move(base), std::move(ratios), std::move(lengths)};
  p.validate();
  return p;
}

FinSet enumerate_progression(const ProgressionDesc& p, const Limits& limits) {
  p.validate();
  if (p.volume() > limits.size_cap)
    throw CapExceeded("progression: " + p.volume().str() + " tuples exceed the size cap of " +
                      std::to_string(limits.size_cap));
  std::vector<Rat> values{p.base};
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    std::vector<Rat> next;
    next.reserve(values.size() * p.lengths[i]);
    for (const Rat& v : values) {
      Rat x = v;
      for (std::uint64_t j = 0; j < p.lengths[i]; ++j) {
        next.push_back(x);
        x *= p.ratios[i];
      }
    }
    values = std::move(next);
  }
  return FinSet(std::move(values));
}

bool is_proper(const ProgressionDesc& p, const Limits& limits) {
  return BigInt(enumerate_progression(p, limits).size()) == p.volume();
}

Containment contains(const ProgressionDesc& p, const FinSet& a, const Limits& limits) {
  p.validate();
  if (!a.all_positive()) throw DomainError("contains: elements must be positive");
  Containment out;
  out.tuples.resize(a.size());
  out.contained = true;
  if (a.empty()) return out;

  std::vector<Rat> all(a.begin(), a.end());
  all.push_back(p.base);
  all.insert(all.end(), p.ratios.begin(), p.ratios.end());
  const FinSet universe(std::move(all));
  const ExponentMatrix m = exponent_matrix(universe, limits);
  const std::size_t ell = m.primes.size();
  const std::size_t s = p.dimension();
  auto row_of = [&](const Rat& x) { return m.rows[*universe.index_of(x)]; };
  const ExponentRow base_row = row_of(p.base);
  std::vector<ExponentRow> ratio_rows;
  for (const Rat& r : p.ratios) ratio_rows.push_back(row_of(r));

  for (std::size_t e = 0; e < a.size(); ++e) {
    const ExponentRow target = row_of(a[e]);
    std::vector<RatRow> aug(ell, RatRow(s + 1));
    for (std::size_t q = 0; q < ell; ++q) {
      for (std::size_t i = 0; i < s; ++i) aug[q][i] = ratio_rows[i][q];
      aug[q][s] = target[q] - base_row[q];
    }
    const Solver sol(std::move(aug), s);
    if (!sol.consistent) {
      out.contained = false;
      continue;
    }
    std::vector<bool> is_pivot(s, false);
    for (std::size_t c : sol.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    BigInt combos = 1;
    for (std::size_t i = 0; i < s; ++i)
      if (!is_pivot[i]) {
        free.push_back(i);
        combos *= p.lengths[i];
      }
    if (combos > limits.enumerate_budget)
      throw CapExceeded("contains: " + combos.str() + " free exponent choices exceed the enumeration budget");

    // every free assignment is tried so the reported tuple is the lexicographic minimum
    std::vector<std::uint64_t> j(s, 0);
    std::optional<std::vector<std::uint64_t>> best;
    while (true) {
      bool ok = true;
      for (std::size_t r = 0; r < sol.pivots.size() && ok; ++r) {
        Rat x = sol.rows[r][s];
        for (std::size_t f : free) x -= sol.rows[r][f] * Rat(j[f]);
        ok = is_integer(x) && x >= 0 && x < Rat(p.lengths[sol.pivots[r]]);
        if (ok) j[sol.pivots[r]] = numerator_of(x).convert_to<std::uint64_t>();
      }
      if (ok && (!best || j < *best)) best = j;
      std::size_t k = free.size();
      while (k > 0) {
        const std::size_t f = free[k - 1];
        if (++j[f] < p.lengths[f]) break;
        j[f] = 0;
        --k;
      }
      if (k == 0) break;
    }
    if (best) out.tuples[e] = std::move(best);
    else out.contained = false;
  }
  return out;
}

std::size_t progression_dimension(const ProgressionDesc& p, const Limits& limits) {
  p.validate();
  std::vector<Rat> moving;
  for (std::size_t i = 0; i < p.dimension(); ++i)
    if (p.lengths[i] >= 2) moving.push_back(p.ratios[i]);
  if (moving.empty()) return 0;
  moving.push_back(Rat(1));
  const FinSet universe(std::move(moving));
  const ExponentMatrix m = exponent_matrix(universe, limits);
  std::vector<ExponentRow> rows;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (universe[i] != 1) rows.push_back(m.rows[i]);
  return integer_rank(rows);
}

Verdict dim_chain_check(const ProgressionDesc& p, const FinSet& a, const Limits& limits) {
  const Containment c = contains(p, a, limits);
  const std::size_t dim_a = mult_dim(a, limits).dimension;
  const std::size_t dim_p = progression_dimension(p, limits);
  Verdict v = make_verdict("dimchain", BigInt(dim_a), Relation::less_equal, BigInt(dim_p), c.contained);
  const bool upper = dim_p <= p.dimension();
  if (c.contained && !upper) v.status = Status::fails;
  v.with("dim_A", dim_a).with("dim_P", dim_p).with("s", p.dimension()).with("dim_P_le_s", upper);
  v.with("contained", c.contained);
  return v;
}

ProgressionDesc parse_progression(std::string_view text) {
  const auto lines = tokenized_lines(text);
  if (lines.empty()) throw ParseError("progression file: missing base line");
  ProgressionDesc p;
  if (lines.front().second.size() != 1)
    throw ParseError("progression file line " + std::to_string(lines.front().first) + ": expected a single base");
  p.base = parse_rat(lines.front().second.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    if (tokens.size() != 2)
      throw ParseError("progression file line " + std::to_string(line) + ": expected `ratio length`");
    p.ratios.push_back(parse_rat(tokens[0]));
    p.lengths.push_back(parse_length(tokens[1], line));
  }
  p.validate();
  return p;
}

ProgressionDesc read_progression_file(const std::string& path) { return parse_progression(read_text(path)); }

}  // namespace sumprod
