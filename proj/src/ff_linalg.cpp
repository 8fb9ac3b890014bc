#include "minrank/ff_linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "minrank/errors.hpp"

namespace minrank {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f : {2ull, 3ull, 5ull}) {
    if (n % f == 0) return n == f;
  }
  for (std::uint64_t f = 7; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(0) {
  if (p >= (std::uint64_t{1} << 31)) throw ParameterError("modulus must be below 2^31");
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeModulus::reduce(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeModulus::reduce(const mpz_class& x) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p_);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t PrimeModulus::add(std::uint32_t a, std::uint32_t b) const {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t PrimeModulus::sub(std::uint32_t a, std::uint32_t b) const {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
}

std::uint32_t PrimeModulus::mul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t base = a % p_;
  std::uint32_t acc = 1 % p_;
  while (e != 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint32_t PrimeModulus::inverse(std::uint32_t a) const {
  if (a % p_ == 0) throw ParameterError("zero has no inverse");
  return pow(a, p_ - 2);
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, PrimeModulus p)
    : rows_(rows), cols_(cols), p_(p) {
  if (is_packed()) {
    words_ = (cols + 63) / 64;
    bits_.assign(rows * words_, 0);
  } else {
    dense_.assign(rows * cols, 0);
  }
}

FpMatrix FpMatrix::identity(std::size_t n, PrimeModulus p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::uint32_t FpMatrix::get(std::size_t i, std::size_t j) const {
  if (is_packed()) return static_cast<std::uint32_t>((bits_[i * words_ + j / 64] >> (j % 64)) & 1u);
  return dense_[i * cols_ + j];
}

void FpMatrix::set(std::size_t i, std::size_t j, std::uint32_t value) {
  if (value >= p_.value()) throw ParameterError("entry is not a residue modulo p");
  if (is_packed()) {
    std::uint64_t& w = bits_[i * words_ + j / 64];
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    w = value ? (w | bit) : (w & ~bit);
  } else {
    dense_[i * cols_ + j] = value;
  }
}

void FpMatrix::set_reduced(std::size_t i, std::size_t j, std::int64_t value) {
  set(i, j, p_.reduce(value));
}

std::span<const std::uint64_t> FpMatrix::packed_row(std::size_t i) const {
  return {bits_.data() + i * words_, words_};
}

std::span<std::uint64_t> FpMatrix::packed_row(std::size_t i) {
  return {bits_.data() + i * words_, words_};
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto v = get(i, j);
      if (v) t.set(j, i, v);
    }
  return t;
}

bool operator==(const FpMatrix& a, const FpMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.dense_ == b.dense_ &&
         a.bits_ == b.bits_;
}

// ---------------------------------------------------------------------------
// IntMatrix / RationalMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const mpz_class& scalar) {
  for (auto& e : data_) e *= scalar;
  return *this;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

void RationalMatrix::set(std::size_t i, std::size_t j, mpq_class value) {
  if (value.get_den() == 0) throw ParameterError("zero denominator");
  value.canonicalize();
  data_[i * cols_ + j] = std::move(value);
}

// ---------------------------------------------------------------------------
// Rank

namespace {

std::size_t rank_gf2_packed(const FpMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t words = m.words_per_row();
  std::vector<std::uint64_t> buf(rows * words);
  for (std::size_t i = 0; i < rows; ++i) {
    auto src = m.packed_row(i);
    std::copy(src.begin(), src.end(), buf.begin() + static_cast<std::ptrdiff_t>(i * words));
  }
  auto row = [&](std::size_t i) { return buf.data() + i * words; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows && !(row(pivot)[w] & bit)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) std::swap_ranges(row(pivot), row(pivot) + words, row(rank));
    const std::uint64_t* prow = row(rank);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint64_t* r = row(i);
      if (r[w] & bit) {
        for (std::size_t k = w; k < words; ++k) r[k] ^= prow[k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_fp_generic(const FpMatrix& m) {
  const PrimeModulus& p = m.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.get(i, j);
  auto row = [&](std::size_t i) { return a.data() + i * cols; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && row(pivot)[col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) std::swap_ranges(row(pivot) + col, row(pivot) + cols, row(rank) + col);
    std::uint32_t* prow = row(rank);
    const std::uint32_t inv = p.inverse(prow[col]);
    for (std::size_t k = col; k < cols; ++k) prow[k] = p.mul(prow[k], inv);
    const std::uint64_t pv = p.value();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint32_t* r = row(i);
      const std::uint32_t f = r[col];
      if (f == 0) continue;
      const std::uint64_t neg = pv - f;
      for (std::size_t k = col; k < cols; ++k) {
        r[k] = static_cast<std::uint32_t>((r[k] + neg * prow[k]) % pv);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_fp(const FpMatrix& m) {
  return m.is_packed() ? rank_gf2_packed(m) : rank_fp_generic(m);
}

std::size_t rank_rational(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = col; k < cols; ++k) std::swap(a.at(pivot, k), a.at(rank, k));
    }
    const mpz_class piv = a.at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class lead = a.at(i, col);
      for (std::size_t k = col + 1; k < cols; ++k) {
        // every entry stays a minor of m, so the division is exact
        tmp = piv * a.at(i, k) - lead * a.at(rank, k);
        mpz_divexact(a.at(i, k).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, col) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const RationalMatrix& m) {
  // Clearing denominators row by row does not change the rank.
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m.at(i, j);
      scaled.at(i, j) = q.get_num() * (l / q.get_den());
    }
  }
  return rank_rational(scaled);
}

FpMatrix mod_reduce(const IntMatrix& m, PrimeModulus p) {
  FpMatrix out(m.rows(), m.cols(), p);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto r = p.reduce(m.at(i, j));
      if (r) out.set(i, j, r);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Products

FpMatrix matmul_fp(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul_fp: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (!(a.modulus() == b.modulus())) throw DimensionError("matmul_fp: moduli differ");
  const PrimeModulus& p = a.modulus();
  FpMatrix c(a.rows(), b.cols(), p);

  if (a.is_packed()) {
    // C row i is the XOR of the B rows selected by A row i.
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto crow = c.packed_row(i);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (!a.get(i, k)) continue;
        auto brow = b.packed_row(k);
        for (std::size_t w = 0; w < crow.size(); ++w) crow[w] ^= brow[w];
      }
    }
    return c;
  }

  const std::uint64_t pv = p.value();
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t x = a.get(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + x * b.get(k, j)) % pv;
    }
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (acc[j]) c.set(i, j, static_cast<std::uint32_t>(acc[j]));
    }
  }
  return c;
}

IntMatrix matmul_int(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul_int: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

}  // namespace minrank
