#pragma once

#include "sumprod/core.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/finset.hpp"
#include "sumprod/verdict.hpp"

#include <optional>
#include <vector>

namespace sumprod {

/// |hA| * E_h(A) >= |A|^{2h}, the Cauchy-Schwarz step behind the energy bound.
Verdict verify_lemma3(const FinSet& a, unsigned h, const Limits& limits = default_limits());

/// Two verdicts for the small-product-set theorem, with alpha = |A^2|/|A|
/// unless `alpha` is supplied:
///   theorem1.sumset  |2A| > 36^{-alpha} |A|^2
///   theorem1.hfold   |hA| > (2h^2-h)^{-h alpha} |A|^h
/// The hypothesis is |A^2| <= alpha |A| (closed, so the data value of alpha
/// always qualifies). Requires positive integers.
std::vector<Verdict> verify_theorem1(const FinSet& a, unsigned h, std::optional<Rat> alpha = std::nullopt,
                                     const Limits& limits = default_limits());

/// E_h(A) < (2h^2-h)^{m h} |A|^h with m = mult_dim(A). Strict, so singletons fail.
Verdict verify_prop10(const FinSet& a, unsigned h, const Limits& limits = default_limits());

/// weighted_energy(A, d, h) <= (2h^2-h)^{m h} (sum d_a^2)^h.
Verdict verify_prop9(const FinSet& a, const WeightVector& d, unsigned h, const Limits& limits = default_limits());

/// mult_dim(A) <= alpha whenever alpha < sqrt|A|, alpha = |A^2|/|A| unless
/// supplied. The witness also carries the refined threshold and floor(alpha-1).
Verdict verify_prop11(const FinSet& a, std::optional<Rat> alpha = std::nullopt,
                      const Limits& limits = default_limits());

/// |h1 B cap B[1]| >= (|B| / (2h1^2-h1)^{m+1})^{h1}; the witness carries the
/// variant with denominator (2h1^2-h1)^m h1^2.
Verdict verify_prop13(const FinSet& b, unsigned h1, const Limits& limits = default_limits());

/// |hN - lN| <= rho^{h+l} |M| with rho = |M+N|/|M| unless supplied.
Verdict verify_ruzsa(const FinSet& m, const FinSet& n, unsigned h, unsigned l, std::optional<Rat> rho = std::nullopt,
                     const Limits& limits = default_limits());

/// The introductory sum-product inequalities on one set of at least two
/// positive integers. Verdicts whose constants are unspecified (c = 1, c' = 1)
/// are informational and carry the ratio that would make them tight.
std::vector<Verdict> verify_intro_suite(const FinSet& a, const Limits& limits = default_limits());

/// Number of (n1,n2,n3,n4) in A^4 with n1 - n2 + n3 - n4 = 0, counted from
/// the difference multiset.
BigInt beta(const FinSet& a);

/// |A +_G A| >= |G|^2 / beta(A), gated on |G| > 0.
Verdict verify_theorem3_chain(const FinSet& a, const PairGraph& g, const Limits& limits = default_limits());

/// Informational evaluation of the large-k dimension gate and simple-sum bound
/// for given (k, eps1, m). When `b` is supplied its g value is compared with
/// the bound and m defaults to mult_dim(b).
std::vector<Verdict> prop14_diagnostic(const BigInt& k, const Rat& eps1, std::optional<std::size_t> m,
                                       const std::optional<FinSet>& b = std::nullopt,
                                       const Limits& limits = default_limits());

}  // namespace sumprod
