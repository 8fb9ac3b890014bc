#pragma once

#include <string>

#include <gmpxx.h>

namespace minrank {

// Closed interval with exact rational endpoints.
struct Interval {
  mpq_class lo;
  mpq_class hi;

  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
  bool within(const mpq_class& a, const mpq_class& b) const { return a <= lo && hi <= b; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Requires 0 outside b.
Interval operator/(const Interval& a, const Interval& b);
Interval exact(const mpq_class& x);

// Widen to multiples of 2^-bits (floor the lower end, ceil the upper end).
Interval round_outward(const Interval& x, unsigned bits = 64);

// Enclosure of log2(x) for rational x > 0, 64 fractional bits.
Interval log2_enclosure(const mpq_class& x);

// Enclosure of the binary entropy -x log2 x - (1-x) log2(1-x), 0 < x < 1.
Interval binary_entropy(const mpq_class& x);

std::string to_decimal(const mpq_class& x, int digits);

}  // namespace minrank
