#include "minrank/entropy.hpp"

#include <algorithm>

#include <mpfr.h>

#include "minrank/errors.hpp"

namespace minrank {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const mpq_class c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw ParameterError("interval division by an interval containing 0");
  mpq_class ilo = 1 / b.hi;
  mpq_class ihi = 1 / b.lo;
  return a * Interval{ilo, ihi};
}

Interval exact(const mpq_class& x) { return {x, x}; }

Interval round_outward(const Interval& x, unsigned bits) {
  mpz_class scale = 1;
  scale <<= bits;
  mpz_class lo_num = x.lo.get_num() * scale;
  mpz_class hi_num = x.hi.get_num() * scale;
  mpz_class lo, hi;
  mpz_fdiv_q(lo.get_mpz_t(), lo_num.get_mpz_t(), x.lo.get_den_mpz_t());
  mpz_cdiv_q(hi.get_mpz_t(), hi_num.get_mpz_t(), x.hi.get_den_mpz_t());
  mpq_class qlo(lo, scale), qhi(hi, scale);
  qlo.canonicalize();
  qhi.canonicalize();
  return {qlo, qhi};
}

namespace {

// RAII wrapper for one MPFR value.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

mpq_class to_rational(mpfr_ptr x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

constexpr mpfr_prec_t kWorkingPrecision = 160;

}  // namespace

Interval log2_enclosure(const mpq_class& x) {
  if (x <= 0) throw ParameterError("log2 of a non-positive number");
  Real xl(kWorkingPrecision), xh(kWorkingPrecision), yl(kWorkingPrecision), yh(kWorkingPrecision);
  mpfr_set_q(xl.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(xh.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_log2(yl.get(), xl.get(), MPFR_RNDD);
  mpfr_log2(yh.get(), xh.get(), MPFR_RNDU);
  return round_outward({to_rational(yl.get()), to_rational(yh.get())});
}

Interval binary_entropy(const mpq_class& x) {
  if (x <= 0 || x >= 1) throw ParameterError("binary entropy needs 0 < x < 1");
  const mpq_class y = 1 - x;
  const Interval h = exact(-x) * log2_enclosure(x) - exact(y) * log2_enclosure(y);
  return round_outward(h);
}

std::string to_decimal(const mpq_class& x, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpq_class scaled = x * scale;
  mpz_class n;
  mpz_tdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool neg = n < 0;
  if (neg) n = -n;
  std::string s = n.get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (neg ? "-" : "") + s;
}

}  // namespace minrank
