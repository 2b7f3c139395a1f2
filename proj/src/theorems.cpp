#include "sumprod/theorems.hpp"

#include "sumprod/arith.hpp"
#include "sumprod/exactset.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <map>
#include <string>

namespace sumprod {

namespace {

BigInt size_of(const FinSet& s) { return BigInt(s.size()); }

Rat size_ratio(std::size_t num, std::size_t den) { return Rat(BigInt(num), BigInt(den)); }

void require_h(unsigned h, const char* what) {
  if (h == 0) throw DomainError(std::string(what) + ": h must be at least 1");
}

void require_positive(const FinSet& a, const char* what) {
  if (a.empty()) throw DomainError(std::string(what) + ": the set is empty");
  if (!a.all_positive()) throw DomainError(std::string(what) + ": elements must be positive");
}

void require_positive_integers(const FinSet& a, const char* what) {
  require_positive(a, what);
  if (!a.all_integer()) throw DomainError(std::string(what) + ": elements must be integers");
}

BigInt floor_of(const Rat& q) {
  BigInt n = numerator_of(q);
  const BigInt d = denominator_of(q);
  BigInt f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Interval ln(const BigInt& x) { return log(Interval(x)); }

}  // namespace

Verdict verify_lemma3(const FinSet& a, unsigned h, const Limits& limits) {
  require_h(h, "lemma3");
  const FinSet ha = iterate(a, h, Op::sum, limits);
  const BigInt e = energy(a, h, EnergyPath::convolve, limits);
  Verdict v = make_verdict("lemma3", BigInt(size_of(ha) * e), Relation::greater_equal,
                           pow(size_of(a), 2 * static_cast<std::uint64_t>(h)));
  v.with("h", h).with("size", a.size()).with("hA", ha.size()).with("energy", e);
  return v;
}

std::vector<Verdict> verify_theorem1(const FinSet& a, unsigned h, std::optional<Rat> alpha, const Limits& limits) {
  require_h(h, "theorem1");
  require_positive_integers(a, "theorem1");
  const FinSet prod = iterate(a, 2, Op::product, limits);
  const Rat data_alpha = size_ratio(prod.size(), a.size());
  const Rat al = alpha.value_or(data_alpha);
  const bool hyp = Rat(size_of(prod)) <= al * size_of(a);
  const Interval ial(al);

  const FinSet two = iterate(a, 2, Op::sum, limits);
  const Interval rhs2 = exp(-(ial * ln(36))) * Interval(pow(size_of(a), 2));
  Verdict sumset = make_verdict("theorem1.sumset", size_of(two), Relation::greater, rhs2, hyp);
  sumset.with("alpha", al).with("A2", prod.size()).with("size", a.size());

  const FinSet ha = h == 2 ? two : iterate(a, h, Op::sum, limits);
  const BigInt c = energy_constant(h);
  const Interval rhsh = exp(-(Interval(BigInt(h)) * ial * ln(c))) * Interval(pow(size_of(a), h));
  Verdict hfold = make_verdict("theorem1.hfold", size_of(ha), Relation::greater, rhsh, hyp);
  hfold.with("alpha", al).with("h", h).with("c_h", c).with("A2", prod.size()).with("size", a.size());
  return {sumset, hfold};
}

Verdict verify_prop10(const FinSet& a, unsigned h, const Limits& limits) {
  require_h(h, "prop10");
  require_positive(a, "prop10");
  const std::size_t m = mult_dim(a, limits).dimension;
  const BigInt c = energy_constant(h);
  const BigInt e = energy(a, h, EnergyPath::convolve, limits);
  const BigInt rhs = pow(c, static_cast<std::uint64_t>(m) * h) * pow(size_of(a), h);
  Verdict v = make_verdict("prop10", e, Relation::less, rhs);
  v.with("m", m).with("h", h).with("c_h", c).with("size", a.size());
  return v;
}

Verdict verify_prop9(const FinSet& a, const WeightVector& d, unsigned h, const Limits& limits) {
  require_h(h, "prop9");
  require_positive(a, "prop9");
  check_weights(a, d);
  const std::size_t m = mult_dim(a, limits).dimension;
  const BigInt c = energy_constant(h);
  Rat sq = 0;
  for (const Rat& x : d) sq += x * x;
  const Rat lhs = weighted_energy(a, d, h, limits);
  const Rat rhs = Rat(pow(c, static_cast<std::uint64_t>(m) * h)) * pow(sq, h);
  Verdict v = make_verdict("prop9", lhs, Relation::less_equal, rhs);
  v.with("m", m).with("h", h).with("c_h", c).with("sum_d2", sq);
  return v;
}

Verdict verify_prop11(const FinSet& a, std::optional<Rat> alpha, const Limits& limits) {
  require_positive(a, "prop11");
  const FinSet prod = iterate(a, 2, Op::product, limits);
  const Rat al = alpha.value_or(size_ratio(prod.size(), a.size()));
  // alpha < sqrt|A| and |A^2| <= alpha |A|
  const bool hyp = al > 0 && al * al < Rat(size_of(a)) && Rat(size_of(prod)) <= al * size_of(a);
  const MultDim md = mult_dim(a, limits);
  Verdict v = make_verdict("prop11", Rat(BigInt(md.dimension)), Relation::less_equal, al, hyp);
  const BigInt fa = floor_of(al);
  const BigInt fa1 = floor_of(al + 1);
  const Rat threshold = Rat(fa * fa1) / (Rat(2) * (Rat(fa1) - al));
  const BigInt refined = floor_of(al - 1);
  const bool above = Rat(size_of(a)) > threshold;
  v.with("alpha", al).with("m", md.dimension).with("A2", prod.size()).with("size", a.size());
  v.with("refined_threshold", threshold).with("above_threshold", above).with("floor_alpha_minus_1", refined);
  if (hyp && above) v.with("refined_holds", BigInt(md.dimension) <= refined);
  v.with("reading", "hypothesis read as |A^2| < alpha|A|; the statement prints |A|^2");
  return v;
}

Verdict verify_prop13(const FinSet& b, unsigned h1, const Limits& limits) {
  require_h(h1, "prop13");
  require_positive(b, "prop13");
  if (h1 > b.size()) throw DomainError("prop13: h1 must not exceed |B|");
  const std::size_t m = mult_dim(b, limits).dimension;
  const BigInt c = energy_constant(h1);
  const FinSet hb = iterate(b, h1, Op::sum, limits);
  const FinSet simple = simple_closure(b, Op::sum, limits);
  const BigInt lhs = size_of(set_intersection(hb, simple));
  const Rat rhs = pow(Rat(size_of(b)) / Rat(pow(c, m + 1)), h1);
  Verdict v = make_verdict("prop13", lhs, Relation::greater_equal, rhs);
  const Rat variant = pow(Rat(size_of(b)) / Rat(pow(c, m) * h1 * h1), h1);
  v.with("m", m).with("h1", h1).with("c_h", c).with("variant_rhs", variant);
  v.with("variant_holds", Rat(lhs) >= variant);
  return v;
}

Verdict verify_ruzsa(const FinSet& m, const FinSet& n, unsigned h, unsigned l, std::optional<Rat> rho,
                     const Limits& limits) {
  if (h + l == 0) throw DomainError("ruzsa: h + l must be at least 1");
  if (m.empty() || n.empty()) throw DomainError("ruzsa: M and N must be nonempty");
  const FinSet mn = combine(m, n, Op::sum, limits);
  const Rat r = rho.value_or(size_ratio(mn.size(), m.size()));
  const bool hyp = Rat(size_of(mn)) <= r * size_of(m);
  const FinSet lhs = sum_diff(n, h, l, limits);
  const Rat rhs = pow(r, h + l) * size_of(m);
  Verdict v = make_verdict("ruzsa", size_of(lhs), Relation::less_equal, rhs, hyp);
  v.with("rho", r).with("h", h).with("l", l).with("M", m.size()).with("M+N", mn.size());
  return v;
}

std::vector<Verdict> verify_intro_suite(const FinSet& a, const Limits& limits) {
  require_positive_integers(a, "intro");
  if (a.size() < 2) throw DomainError("intro: needs at least two elements");
  const BigInt k = size_of(a);
  const FinSet two = iterate(a, 2, Op::sum, limits);
  const FinSet prod = iterate(a, 2, Op::product, limits);
  const BigInt s = size_of(two);
  const BigInt p = size_of(prod);
  const BigInt u = size_of(set_union(two, prod));
  const Interval lnk = ln(k);
  std::vector<Verdict> out;

  // sum-product lower bound with an unspecified constant, reported at c = 1
  const Interval k54 = pow(Interval(k), Interval(Rat(5, 4)));
  Verdict elekes = make_verdict("intro.elekes", u, Relation::greater, k54);
  elekes.informational = true;
  elekes.with("c", 1).with("ratio", Interval(u) / k54);
  out.push_back(elekes);

  Verdict er = make_verdict("intro.elekes-ruzsa", Interval(pow(s, 4) * p) * lnk, Relation::greater, pow(k, 6));
  er.with("2A", s).with("A2", p).with("size", k);
  out.push_back(er);

  const bool small_sum = s <= 3 * k - 4;
  const Interval nt_rhs = (Interval(k) / lnk) * (Interval(k) / lnk);
  Verdict nt = make_verdict("intro.nathanson-tenenbaum", p, Relation::greater_equal, nt_rhs, small_sum);
  nt.with("2A", s).with("bound_2A", BigInt(3 * k - 4));
  out.push_back(nt);

  // c = |2A|/|A| meets the doubling hypothesis by construction; c' = 1 is a
  // tightness probe, so the witness records the c' that would be needed.
  const Rat c = Rat(s, k);
  const Interval er_rhs = Interval(k * k) / lnk;
  Verdict sd = make_verdict("intro.small-doubling", p, Relation::greater_equal, er_rhs, Rat(s) <= c * k);
  sd.informational = true;
  sd.with("c", c).with("c_prime", 1).with("required_c_prime", er_rhs / Interval(p));
  out.push_back(sd);

  Verdict upper = make_verdict("intro.trivial-upper", u, Relation::less_equal, BigInt(k * (k + 1)));
  upper.with("union", u);
  out.push_back(upper);
  return out;
}

BigInt beta(const FinSet& a) {
  std::map<Rat, std::uint64_t> diffs;
  for (const Rat& x : a)
    for (const Rat& y : a) ++diffs[x - y];
  BigInt total = 0;
  for (const auto& [d, c] : diffs) total += BigInt(c) * c;
  return total;
}

Verdict verify_theorem3_chain(const FinSet& a, const PairGraph& g, const Limits& limits) {
  (void)limits;
  if (!(g.ground() == a)) throw DomainError("theorem3: graph is not over the given set");
  const FinSet sums = restricted_combine(a, g, Op::sum);
  const BigInt b = beta(a);
  const BigInt edges(g.size());
  const bool hyp = edges > 0;
  const Rat rhs = b == 0 ? Rat(0) : Rat(edges * edges, b);
  Verdict v = make_verdict("theorem3", size_of(sums), Relation::greater_equal, rhs, hyp);
  v.with("edges", g.size()).with("beta", b);
  if (a.all_nonzero()) v.with("product_size", restricted_combine(a, g, Op::product).size());
  if (!a.empty()) v.with("delta", Rat(edges, pow(size_of(a), 2)));
  return v;
}

std::vector<Verdict> prop14_diagnostic(const BigInt& k, const Rat& eps1, std::optional<std::size_t> m,
                                       const std::optional<FinSet>& b, const Limits& limits) {
  if (k < 3) throw DomainError("prop14: k must be at least 3 so that ln ln k > 0");
  if (!(eps1 > 0 && eps1 < Rat(1, 2))) throw DomainError("prop14: eps1 must lie in (0, 1/2)");
  if (b) require_positive_integers(*b, "prop14");
  if (!m && !b) throw DomainError("prop14: supply m or a set B");
  const std::size_t dim = m ? *m : mult_dim(*b, limits).dimension;
  const Interval lnk = ln(k);
  const Interval lnlnk = log(lnk);
  const Interval ie(eps1);
  std::vector<Verdict> out;

  const Interval gate = (Interval(Rat(1, 4)) - ie / Interval(2L)) * lnk / lnlnk;
  Verdict v8 = make_verdict("prop14.dimension-gate", Interval(BigInt(dim + 1)), Relation::less_equal, gate);
  v8.informational = true;
  v8.with("k", k).with("eps1", eps1).with("m", dim);
  out.push_back(v8);

  const Interval power = exp(Interval(BigInt(2 * dim + 2)) * lnlnk);
  const Interval kpow = exp((Interval(Rat(1, 2)) - ie) * lnk);
  Verdict v10 = make_verdict("prop14.log-power", power, Relation::less_equal, kpow);
  v10.informational = true;
  v10.with("k", k).with("eps1", eps1).with("m", dim);
  out.push_back(v10);

  // h1 = floor(ln k / sqrt 2), taken from the lower endpoint when the
  // enclosure does not straddle an integer
  const Interval x = lnk / sqrt(Interval(2L));
  const BigInt h1(static_cast<long long>(std::floor(x.lower())));
  Verdict v11 = make_verdict("prop14.h1-square", Interval(BigInt(2 * h1 * h1)), Relation::less_equal, lnk * lnk);
  v11.informational = true;
  v11.with("h1", h1);
  out.push_back(v11);

  const Interval bound = exp(ie * Interval(h1) * lnk);
  BigInt g = 0;
  bool hyp = false;
  if (b) {
    g = size_of(simple_closure(*b, Op::sum, limits)) + size_of(simple_closure(*b, Op::product, limits));
    hyp = BigInt(b->size()) * b->size() >= k;
  }
  Verdict v9 = make_verdict("prop14.g-bound", g, Relation::greater, bound, hyp);
  v9.informational = true;
  v9.with("h1", h1).with("set_supplied", b.has_value());
  out.push_back(v9);
  return out;
}

}  // namespace sumprod
