#include <charconv>
#include "minrank/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

mpz_class parse_integer(const std::string& tok) {
  mpz_class z;
  if (tok.empty() || z.set_str(tok, 10) != 0) throw FormatError("bad integer entry '" + tok + "'");
  return z;
}

mpq_class parse_rational(const std::string& tok) {
  const auto slash = tok.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(tok));
  mpz_class num = parse_integer(tok.substr(0, slash));
  mpz_class den = parse_integer(tok.substr(slash + 1));
  if (den == 0) throw FormatError("zero denominator in '" + tok + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

AnyMatrix parse_matrix(std::istream& in) {
  std::string header;
  while (std::getline(in, header)) {
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream hs(header);
  long long rows = -1, cols = -1, modulus = -1;
  if (!(hs >> rows >> cols >> modulus) || rows < 0 || cols < 0 || modulus < 0) {
    throw FormatError("matrix header must be 'rows cols modulus'");
  }

  std::vector<std::string> tokens;
  tokens.reserve(static_cast<std::size_t>(rows * cols));
  std::string line;
  long long row_count = 0;
  while (row_count < rows && std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    long long n = 0;
    while (ls >> tok) {
      tokens.push_back(tok);
      ++n;
    }
    if (n == 0) continue;
    if (n != cols) {
      throw FormatError("row " + std::to_string(row_count) + " has " + std::to_string(n) +
                        " entries, expected " + std::to_string(cols));
    }
    ++row_count;
  }
  if (row_count != rows) throw FormatError("expected " + std::to_string(rows) + " rows");

  const auto r = static_cast<std::size_t>(rows);
  const auto c = static_cast<std::size_t>(cols);
  if (modulus > 0) {
    const PrimeModulus p(static_cast<std::uint64_t>(modulus));
    FpMatrix m(r, c, p);
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      const auto v = p.reduce(parse_integer(tokens[k]));
      if (v) m.set(k / c, k % c, v);
    }
    return m;
  }
  bool rational = false;
  for (const auto& t : tokens) rational = rational || t.find('/') != std::string::npos;
  if (!rational) {
    IntMatrix m(r, c);
    for (std::size_t k = 0; k < tokens.size(); ++k) m.at(k / c, k % c) = parse_integer(tokens[k]);
    return m;
  }
  RationalMatrix m(r, c);
  for (std::size_t k = 0; k < tokens.size(); ++k) m.set(k / c, k % c, parse_rational(tokens[k]));
  return m;
}

AnyMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const FpMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.modulus().value() << '\n';
  std::string line;
  char digits[16];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    line.clear();
    if (m.is_packed()) {
      const auto row = m.packed_row(i);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) line += ' ';
        line += ((row[j / 64] >> (j % 64)) & 1) ? '1' : '0';
      }
    } else {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) line += ' ';
        const auto res = std::to_chars(digits, digits + sizeof digits, m.get(i, j));
        line.append(digits, res.ptr);
      }
    }
    line += '\n';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << " 0\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j).get_str();
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const RationalMatrix& m) {
  out << m.rows() << ' ' << m.cols() << " 0\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j).get_str();
    out << '\n';
  }
}

template <class M>
std::string to_matrix_text(const M& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

template std::string to_matrix_text<FpMatrix>(const FpMatrix&);
template std::string to_matrix_text<IntMatrix>(const IntMatrix&);
template std::string to_matrix_text<RationalMatrix>(const RationalMatrix&);

std::size_t rank_of(const AnyMatrix& m) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FpMatrix>) {
          return rank_fp(x);
        } else {
          return rank_rational(x);
        }
      },
      m);
}

}  // namespace minrank
