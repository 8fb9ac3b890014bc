#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace minrank {

// A prime p with 2 <= p < 2^31. Residue products fit in 64 bits.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const { return p_; }
  operator std::uint32_t() const { return p_; }  // NOLINT(google-explicit-constructor)

  std::uint32_t reduce(std::int64_t x) const;
  std::uint32_t reduce(const mpz_class& x) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Requires a != 0.
  std::uint32_t inverse(std::uint32_t a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Dense matrix over F_p. When p = 2 rows are bit-packed, 64 columns per word;
// everything else uses one 32-bit residue per entry.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, PrimeModulus p);

  static FpMatrix identity(std::size_t n, PrimeModulus p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeModulus& modulus() const { return p_; }
  bool is_packed() const { return p_.value() == 2; }

  std::uint32_t get(std::size_t i, std::size_t j) const;
  // value must already be a residue in [0, p).
  void set(std::size_t i, std::size_t j, std::uint32_t value);
  // Reduces an arbitrary integer into [0, p) before storing.
  void set_reduced(std::size_t i, std::size_t j, std::int64_t value);

  // Bit-packed access, only valid when is_packed().
  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> packed_row(std::size_t i) const;
  std::span<std::uint64_t> packed_row(std::size_t i);

  FpMatrix transpose() const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeModulus p_;
  std::size_t words_ = 0;
  std::vector<std::uint32_t> dense_;
  std::vector<std::uint64_t> bits_;
};

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator*=(const mpz_class& scalar);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

// Entries are kept canonical (reduced, positive denominator).
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, mpq_class value);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> data_;
};

// Rank over F_p. Dispatches to the bit-packed eliminator when p = 2.
std::size_t rank_fp(const FpMatrix& m);
// Rank over F_p through the word-residue eliminator regardless of p.
std::size_t rank_fp_generic(const FpMatrix& m);

// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_rational(const IntMatrix& m);
std::size_t rank_rational(const RationalMatrix& m);

FpMatrix mod_reduce(const IntMatrix& m, PrimeModulus p);

FpMatrix matmul_fp(const FpMatrix& a, const FpMatrix& b);
IntMatrix matmul_int(const IntMatrix& a, const IntMatrix& b);

}  // namespace minrank
