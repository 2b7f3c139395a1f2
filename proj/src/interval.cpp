#include "sumprod/interval.hpp"

#include <utility>

namespace sumprod {

namespace {

void init_pair(mpfr_t lo, mpfr_t hi) {
  mpfr_init2(lo, Interval::precision);
  mpfr_init2(hi, Interval::precision);
}

// min/max of four candidate endpoints, each computed with the matching rounding.
template <class F>
void hull4(mpfr_t out_lo, mpfr_t out_hi, const mpfr_t a_lo, const mpfr_t a_hi, const mpfr_t b_lo, const mpfr_t b_hi,
           F&& op) {
  mpfr_t t;
  mpfr_init2(t, Interval::precision);
  const mpfr_srcptr as[2] = {a_lo, a_hi};
  const mpfr_srcptr bs[2] = {b_lo, b_hi};
  bool first = true;
  for (auto a : as)
    for (auto b : bs) {
      op(t, a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t, out_lo)) mpfr_set(out_lo, t, MPFR_RNDD);
      op(t, a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out_hi)) mpfr_set(out_hi, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
}

}  // namespace

Interval::Interval() {
  init_pair(lo_, hi_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value) {
  init_pair(lo_, hi_);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const BigInt& value) {
  init_pair(lo_, hi_);
  mpfr_set_z(lo_, value.backend().data(), MPFR_RNDD);
  mpfr_set_z(hi_, value.backend().data(), MPFR_RNDU);
}

Interval::Interval(const Rat& value) {
  init_pair(lo_, hi_);
  mpfr_set_q(lo_, value.backend().data(), MPFR_RNDD);
  mpfr_set_q(hi_, value.backend().data(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  init_pair(lo_, hi_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  init_pair(lo_, hi_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::operator-() const {
  Interval out;
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out;
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out;
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval out;
  hull4(out.lo_, out.hi_, a.lo_, a.hi_, b.lo_, b.hi_,
        [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_mul(r, x, y, rnd); });
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing 0");
  Interval out;
  hull4(out.lo_, out.hi_, a.lo_, a.hi_, b.lo_, b.hi_,
        [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_div(r, x, y, rnd); });
  return out;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("interval log of a non-positive value");
  Interval out;
  mpfr_log(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval exp(const Interval& x) {
  Interval out;
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval sqrt(const Interval& x) { return root(x, 2); }

Interval root(const Interval& x, unsigned long n) {
  if (n == 0) throw DomainError("zeroth root");
  if (mpfr_sgn(x.lo_) < 0) throw DomainError("interval root of a negative value");
  Interval out;
  mpfr_rootn_ui(out.lo_, x.lo_, n, MPFR_RNDD);
  mpfr_rootn_ui(out.hi_, x.hi_, n, MPFR_RNDU);
  return out;
}

Interval pow(const Interval& base, const Interval& exponent) { return exp(exponent * log(base)); }

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_) != 0; }

bool Interval::certainly_less_equal(const Interval& other) const { return mpfr_lessequal_p(hi_, other.lo_) != 0; }

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::approx(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, precision + 1);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, mid);
  std::string out(buffer);
  mpfr_free_str(buffer);
  mpfr_clear(mid);
  return out;
}

Interval Interval::magnitude() const {
  Interval out;
  mpfr_t a;
  mpfr_init2(a, precision);
  mpfr_abs(a, lo_, MPFR_RNDU);
  mpfr_abs(out.hi_, hi_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, a, MPFR_RNDU);
  mpfr_set(out.lo_, out.hi_, MPFR_RNDU);
  mpfr_clear(a);
  return out;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

}  // namespace sumprod
