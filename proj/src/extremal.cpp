#include "sumprod/extremal.hpp"

#include "sumprod/arith.hpp"
#include "sumprod/exactset.hpp"
#include "sumprod/parallel.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

namespace sumprod {

namespace {

void require_positive_integers(const FinSet& a, const char* what) {
  if (!a.all_positive() || !a.all_integer())
    throw DomainError(std::string(what) + ": elements must be positive integers");
}

using Small = std::vector<long>;

std::uint64_t unique_count(std::vector<std::int64_t>& v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::uint64_t>(std::unique(v.begin(), v.end()) - v.begin());
}

// Objective values on small integer sets, for the search inner loop.
class Evaluator {
 public:
  Evaluator(Objective objective, unsigned k, long universe, const Limits& limits)
      : objective_(objective), k_(k), limits_(limits) {
    // products of up to k elements of [1, N] must fit for the fast g path
    fast_g_ = pow(BigInt(universe), k) < BigInt(std::int64_t{1} << 62);
  }

  std::uint64_t value(const Small& p) const {
    if (objective_ == Objective::f) return f_parts(p).union_size;
    return g_small(p);
  }

  // No completion of p (adding elements above p.back()) can score below this.
  std::uint64_t lower_bound(const Small& p) const {
    const std::uint64_t rest = k_ - p.size();
    if (objective_ == Objective::f) {
      const FParts f = f_parts(p);
      return std::max(f.union_size + rest, std::max(f.sums, f.products) + 2 * rest);
    }
    return g_small(p) + 2 * rest;
  }

 private:
  struct FParts {
    std::uint64_t sums = 0;
    std::uint64_t products = 0;
    std::uint64_t union_size = 0;
  };

  FParts f_parts(const Small& p) const {
    std::vector<std::int64_t> s;
    std::vector<std::int64_t> q;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i; j < p.size(); ++j) {
        s.push_back(p[i] + p[j]);
        q.push_back(static_cast<std::int64_t>(p[i]) * p[j]);
      }
    FParts out;
    out.sums = unique_count(s);
    out.products = unique_count(q);
    s.resize(out.sums);
    q.resize(out.products);
    std::vector<std::int64_t> u;
    std::set_union(s.begin(), s.end(), q.begin(), q.end(), std::back_inserter(u));
    out.union_size = u.size();
    return out;
  }

  std::uint64_t g_small(const Small& p) const {
    if (!fast_g_) return g_value(FinSet::from_integers(p), limits_).convert_to<std::uint64_t>();
    long total = 0;
    for (long x : p) total += x;
    std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
    reach[0] = true;
    long top = 0;
    for (long x : p) {
      for (long v = top; v >= 0; --v)
        if (reach[v]) reach[v + x] = true;
      top += x;
    }
    const auto sums = static_cast<std::uint64_t>(std::count(reach.begin(), reach.end(), true));
    std::vector<std::int64_t> prods{1};
    for (long x : p) {
      const std::size_t n = prods.size();
      for (std::size_t i = 0; i < n; ++i) prods.push_back(prods[i] * x);
      prods.resize(unique_count(prods));
    }
    return sums + prods.size();
  }

  Objective objective_;
  unsigned k_;
  const Limits& limits_;
  bool fast_g_ = false;
};

struct Subtree {
  std::optional<std::uint64_t> best;
  std::vector<Small> certificates;
  std::uint64_t leaves = 0;
  bool aborted = false;
};

class SubtreeSearch {
 public:
  SubtreeSearch(const Evaluator& eval, unsigned k, long universe, std::uint64_t seed, std::uint64_t budget)
      : eval_(eval), k_(k), universe_(universe), bound_(seed), budget_(budget) {}

  Subtree run(long first) {
    Small p{first};
    descend(p);
    return std::move(out_);
  }

 private:
  void descend(Small& p) {
    if (out_.aborted) return;
    if (p.size() == k_) {
      leaf(p);
      return;
    }
    if (eval_.lower_bound(p) > bound_) return;
    const long last = universe_ - static_cast<long>(k_ - p.size()) + 1;
    for (long x = p.back() + 1; x <= last && !out_.aborted; ++x) {
      p.push_back(x);
      descend(p);
      p.pop_back();
    }
  }

  void leaf(const Small& p) {
    if (++out_.leaves > budget_) {
      out_.aborted = true;
      return;
    }
    const std::uint64_t v = eval_.value(p);
    if (v > bound_) return;
    if (!out_.best || v < *out_.best) {
      out_.best = v;
      out_.certificates.clear();
    }
    if (v == *out_.best) out_.certificates.push_back(p);
    bound_ = v;
  }

  const Evaluator& eval_;
  unsigned k_;
  long universe_;
  std::uint64_t bound_;
  std::uint64_t budget_;
  Subtree out_;
};

void check_search_args(unsigned k, long universe) {
  if (k == 0) throw DomainError("search: k must be at least 1");
  if (universe < static_cast<long>(k)) throw DomainError("search: need k <= N");
  if (universe > (1L << 20)) throw DomainError("search: universe bound above 2^20 is not supported");
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write checkpoint " + tmp);
    f << text;
  }
  std::filesystem::rename(tmp, path);
}

constexpr const char* kCheckpointHeader = "sumprod-search-checkpoint v1";

Interval ln_of(const BigInt& x) { return log(Interval(x)); }

}  // namespace

FinSet es_example(unsigned J, const Limits& limits) {
  if (J == 0) throw DomainError("es_example: J must be at least 1");
  const BigInt size = pow(BigInt(J), J);
  if (size > limits.size_cap)
    throw CapExceeded("es_example: J^J = " + size.str() + " exceeds the size cap of " + std::to_string(limits.size_cap));
  std::vector<Rat> values{Rat(1)};
  for (long p : first_primes(J)) {
    std::vector<Rat> next;
    for (const Rat& v : values) {
      BigInt x = 1;
      for (unsigned j = 0; j < J; ++j) {
        next.emplace_back(numerator_of(v) * x);
        x *= p;
      }
    }
    values = std::move(next);
  }
  return FinSet(std::move(values));
}

BigInt f_value(const FinSet& a, const Limits& limits) {
  require_positive_integers(a, "f_value");
  return BigInt(set_union(iterate(a, 2, Op::sum, limits), iterate(a, 2, Op::product, limits)).size());
}

GParts g_parts(const FinSet& a, const Limits& limits) {
  require_positive_integers(a, "g_value");
  GParts out;
  out.sums = BigInt(simple_closure(a, Op::sum, limits).size());
  out.products_by_vectors = vector_simple_sum_count(a, limits);
  out.products_by_values = BigInt(simple_closure(a, Op::product, limits).size());
  return out;
}

BigInt g_value(const FinSet& a, const Limits& limits) {
  require_positive_integers(a, "g_value");
  const BigInt sums(simple_closure(a, Op::sum, limits).size());
  std::optional<ExponentMatrix> m;
  try {
    m = exponent_matrix(a, limits);
  } catch (const CapExceeded&) {
    // an element resisted factorization; count products by value instead
  }
  if (m) return sums + vector_simple_sum_count(*m, limits);
  return sums + BigInt(simple_closure(a, Op::product, limits).size());
}

const char* to_string(Objective objective) { return objective == Objective::f ? "f" : "g"; }

Objective parse_objective(const std::string& text) {
  if (text == "f") return Objective::f;
  if (text == "g") return Objective::g;
  throw ParseError("unknown objective '" + text + "' (expected f or g)");
}

SearchResult search_min(Objective objective, unsigned k, long universe, const SearchOptions& options,
                        const Limits& limits) {
  check_search_args(k, universe);
  const Evaluator eval(objective, k, universe, limits);
  Small seed_set(k);
  std::iota(seed_set.begin(), seed_set.end(), 1L);
  const std::uint64_t seed = eval.value(seed_set);

  SearchResult state;
  state.objective = objective;
  state.k = k;
  state.universe = universe;
  state.next_first = 1;
  std::optional<std::uint64_t> best;

  if (!options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
    std::ifstream f(options.checkpoint, std::ios::binary);
    std::stringstream buffer;
    buffer << f.rdbuf();
    SearchResult saved = parse_checkpoint(buffer.str());
    if (saved.objective != objective || saved.k != k || saved.universe != universe)
      throw DomainError("checkpoint " + options.checkpoint + " was written for a different search");
    state.next_first = saved.next_first;
    state.nodes = saved.nodes;
    state.certificates = std::move(saved.certificates);
    if (!state.certificates.empty()) best = saved.minimum.convert_to<std::uint64_t>();
  }

  const long last_first = universe - static_cast<long>(k) + 1;
  const std::size_t batch = std::max<std::size_t>(1, options.threads) * 4;
  bool stopped = false;
  while (!stopped && state.next_first <= last_first) {
    std::vector<long> firsts;
    for (long a = state.next_first; a <= last_first && firsts.size() < batch; ++a) firsts.push_back(a);
    const auto results = parallel_map(firsts, options.threads, [&](long first) {
      SubtreeSearch s(eval, k, universe, seed, limits.node_budget);
      return s.run(first);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const Subtree& r = results[i];
      if (r.aborted || state.nodes + r.leaves > limits.node_budget) {
        stopped = true;
        break;
      }
      state.nodes += r.leaves;
      state.next_first = firsts[i] + 1;
      if (!r.best) continue;
      if (!best || *r.best < *best) {
        best = r.best;
        state.certificates.clear();
      }
      if (*r.best == *best)
        state.certificates.insert(state.certificates.end(), r.certificates.begin(), r.certificates.end());
    }
    state.complete = !stopped && state.next_first > last_first;
    state.minimum = best ? BigInt(*best) : BigInt(0);
    if (!options.checkpoint.empty()) write_atomically(options.checkpoint, format_checkpoint(state));
  }
  state.complete = !stopped;
  state.minimum = best ? BigInt(*best) : BigInt(0);
  std::sort(state.certificates.begin(), state.certificates.end());
  return state;
}

SearchResult search_min_plain(Objective objective, unsigned k, long universe, const Limits& limits) {
  check_search_args(k, universe);
  SearchResult out;
  out.objective = objective;
  out.k = k;
  out.universe = universe;
  out.next_first = universe - static_cast<long>(k) + 2;
  std::optional<BigInt> best;
  Small p(k);
  std::iota(p.begin(), p.end(), 1L);
  while (true) {
    if (++out.nodes > limits.node_budget) throw CapExceeded("plain search: node budget exhausted");
    const FinSet a = FinSet::from_integers(p);
    const BigInt v = objective == Objective::f ? f_value(a, limits) : g_value(a, limits);
    if (!best || v < *best) {
      best = v;
      out.certificates.clear();
    }
    if (v == *best) out.certificates.push_back(p);
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && p[i - 1] == universe - static_cast<long>(k - i)) --i;
    if (i == 0) break;
    ++p[i - 1];
    for (std::size_t j = i; j < k; ++j) p[j] = p[j - 1] + 1;
  }
  out.minimum = *best;
  return out;
}

std::string format_checkpoint(const SearchResult& r) {
  std::ostringstream out;
  out << kCheckpointHeader << "\n";
  out << "objective " << to_string(r.objective) << "\n";
  out << "k " << r.k << "\n";
  out << "universe " << r.universe << "\n";
  out << "next_first " << r.next_first << "\n";
  out << "nodes " << r.nodes << "\n";
  out << "minimum " << (r.certificates.empty() ? std::string("none") : r.minimum.str()) << "\n";
  for (const Small& c : r.certificates) {
    out << "cert";
    for (long x : c) out << " " << x;
    out << "\n";
  }
  return out.str();
}

SearchResult parse_checkpoint(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCheckpointHeader)
    throw ParseError("checkpoint: missing or unsupported header (expected '" + std::string(kCheckpointHeader) + "')");
  SearchResult r;
  r.complete = false;
  bool have_objective = false;
  bool have_k = false;
  bool have_universe = false;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    auto fail = [&] { throw ParseError("checkpoint line " + std::to_string(lineno) + ": malformed '" + line + "'"); };
    auto read_long = [&] {
      long v = 0;
      if (!(fields >> v)) fail();
      return v;
    };
    if (key == "objective") {
      std::string o;
      fields >> o;
      r.objective = parse_objective(o);
      have_objective = true;
    } else if (key == "k") {
      r.k = static_cast<unsigned>(read_long());
      have_k = true;
    } else if (key == "universe") {
      r.universe = read_long();
      have_universe = true;
    } else if (key == "next_first") {
      r.next_first = read_long();
    } else if (key == "nodes") {
      r.nodes = static_cast<std::uint64_t>(read_long());
    } else if (key == "minimum") {
      std::string m;
      fields >> m;
      if (m.empty()) fail();
      if (m != "none") {
        try {
          r.minimum = BigInt(m);
        } catch (const std::exception&) {
          fail();
        }
      }
    } else if (key == "cert") {
      Small c;
      long x = 0;
      while (fields >> x) c.push_back(x);
      if (c.empty()) fail();
      r.certificates.push_back(std::move(c));
    } else {
      fail();
    }
  }
  if (!have_objective || !have_k || !have_universe) throw ParseError("checkpoint: missing objective, k or universe");
  return r;
}

std::vector<Verdict> verify_section3(unsigned J, const Rat& eps3, const Limits& limits) {
  if (J < 2) throw DomainError("section3: J must be at least 2");
  if (eps3 <= 0) throw DomainError("section3: eps3 must be positive");
  const FinSet a = es_example(J, limits);
  const BigInt k = pow(BigInt(J), J);
  const Interval e3(eps3);
  const Interval one(1L);
  const Interval lnJ = ln_of(J);
  const Interval lnlnJ = log(lnJ);
  const Interval lnk = ln_of(k);
  const Interval lnlnk = log(lnk);
  const Interval ratio = lnk / lnlnk;
  const Rat eps_prime = Rat(2 * eps3 + eps3 * eps3);
  const Rat eps = Rat(3 * eps3 + eps3 * eps3);
  auto k_to = [&](const Interval& x) { return exp(x * lnk); };
  std::vector<Verdict> out;

  Verdict gate = make_verdict("section3.gate", lnJ / lnlnJ, Relation::greater, Interval(Rat(1 / eps3)));
  gate.informational = true;
  gate.with("J", J).with("eps3", eps3);
  const bool gated = gate.status == Status::holds;
  out.push_back(gate);

  auto add = [&](std::string name, Value lhs, Relation rel, Value rhs, bool hyp) -> Verdict& {
    out.push_back(make_verdict(std::move(name), std::move(lhs), rel, std::move(rhs), hyp));
    out.back().with("J", J);
    return out.back();
  };

  add("section3.size", BigInt(a.size()), Relation::equal, k, true);
  add("section3.lemma16.i", lnk, Relation::equal, Interval(BigInt(J)) * lnJ, true);
  add("section3.lemma16.ii", lnlnk, Relation::equal, lnJ + lnlnJ, true);
  add("section3.lemma16.iii", lnlnk, Relation::less, (one + e3) * lnJ, gated);
  add("section3.lemma16.iv", BigInt(J), Relation::less, (one + e3) * ratio, gated);
  add("section3.lemma16.v", BigInt(J * J), Relation::less, Interval(Rat(1 + eps_prime)) * ratio * ratio, gated)
      .with("eps_prime", eps_prime);
  // Claimed to follow from the gate, but it does not near J = 3 where ln ln J is tiny.
  add("section3.log-ratio", ratio, Relation::greater, Interval(Rat(1 / eps3)), gated).informational = true;

  const Interval ln_pow = exp(Interval(BigInt(J * J)) * lnlnk);  // (ln k)^{J^2}
  const BigInt sums(simple_closure(a, Op::sum, limits).size());
  const BigInt prods = vector_simple_sum_count(a, limits);
  add("section3.lemma17.i", numerator_of(a.max()), Relation::less, ln_pow, gated);
  add("section3.lemma17.ii", sums, Relation::less, Interval(k) * ln_pow, gated);
  add("section3.lemma17.iii", prods, Relation::less, BigInt(pow(BigInt(k * J), J)), gated);
  add("section3.simple-sum-bound", sums, Relation::less, k_to(Interval(Rat(1 + eps)) * ratio), gated)
      .with("eps", eps);
  add("section3.simple-product-bound", prods, Relation::less, k_to(Interval(Rat(1 + 2 * eps3)) * ratio), gated);
  add("section3.g-bound", BigInt(sums + prods), Relation::less, Interval(2L) * k_to(Interval(Rat(1 + eps)) * ratio), gated)
      .with("eps", eps)
      .with("simple_sums", sums)
      .with("simple_products", prods);
  return out;
}

}  // namespace sumprod
