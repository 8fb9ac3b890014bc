#include "minrank/certificates.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "minrank/combinatorics.hpp"
#include "minrank/errors.hpp"

namespace minrank {

KneserVectorCertificate make_certificate(unsigned d, unsigned s, unsigned t, CertificateMode mode) {
  if (!(t < s && s < d)) throw ParameterError("certificate requires t < s < d");
  if (d > kMaxUniverse) throw ParameterError("certificate requires d <= 63");
  const long long s2 = static_cast<long long>(s) * s;
  const long long dt = static_cast<long long>(d) * t;
  if (s2 <= dt) {
    throw ParameterError("certificate requires s^2 > d t (got s^2 = " + std::to_string(s2) +
                         ", d t = " + std::to_string(dt) + ")");
  }
  KneserVectorCertificate c;
  c.d = d;
  c.s = s;
  c.t = t;
  mpq_class ratio(d, s);
  ratio.canonicalize();
  c.z = ratio - 1;
  c.kappa = mpq_class(static_cast<long>(d) * (s - t), static_cast<long>(s2 - dt));
  c.kappa.canonicalize();
  c.mode = mode;
  return c;
}

mpq_class pair_inner_product(unsigned d, unsigned s, unsigned i, const mpq_class& z) {
  const long sym_diff = 2L * (static_cast<long>(s) - i);
  const long outside = static_cast<long>(d) - (2L * s - i);
  return mpq_class(i) * z * z - mpq_class(sym_diff) * z + mpq_class(outside);
}

mpq_class squared_norm(unsigned d, unsigned s, const mpq_class& z) {
  return mpq_class(s) * z * z + mpq_class(static_cast<long>(d) - s);
}

std::vector<unsigned> adjacent_classes(unsigned d, unsigned s, unsigned t, CertificateMode mode) {
  // distinct s-subsets meet in i elements for max(0, 2s - d) <= i <= s - 1
  const unsigned lo = 2 * s > d ? 2 * s - d : 0;
  std::vector<unsigned> out;
  for (unsigned i = lo; i < s; ++i) {
    const bool adjacent = mode == CertificateMode::inequality ? i <= t : i == t;
    if (adjacent) out.push_back(i);
  }
  return out;
}

mpq_class worst_adjacent_cosine(unsigned d, unsigned s, unsigned t, const mpq_class& z) {
  const auto classes = adjacent_classes(d, s, t, CertificateMode::inequality);
  if (classes.empty()) throw ParameterError("graph has no adjacent pairs");
  const mpq_class norm = squared_norm(d, s, z);
  mpq_class worst = pair_inner_product(d, s, classes.front(), z) / norm;
  for (unsigned i : classes) worst = std::max(worst, mpq_class(pair_inner_product(d, s, i, z) / norm));
  return worst;
}

namespace {

// u = U / den with U integral: U_i = num on A, -den off A.
struct ScaledVectors {
  long num;
  long den;
  unsigned d;

  long dot(SubsetMask a, SubsetMask b) const {
    long acc = 0;
    for (unsigned i = 0; i < d; ++i) {
      const long x = ((a >> i) & 1u) ? num : -den;
      const long y = ((b >> i) & 1u) ? num : -den;
      acc += x * y;
    }
    return acc;
  }
};

SubsetMask random_subset(std::mt19937_64& rng, unsigned d, unsigned s) {
  std::vector<unsigned> elems(d);
  std::iota(elems.begin(), elems.end(), 0u);
  std::shuffle(elems.begin(), elems.end(), rng);
  SubsetMask m = 0;
  for (unsigned k = 0; k < s; ++k) m |= SubsetMask{1} << elems[k];
  return m;
}

}  // namespace

CertificateCheck verify_certificate(const KneserVectorCertificate& cert, bool exhaustive, const mpq_class& scale) {
  CertificateCheck out;
  if (scale <= 0) throw ParameterError("scale must be positive");
  const unsigned d = cert.d;
  const unsigned s = cert.s;
  if (cert.kappa <= 1) return out;

  const auto classes = adjacent_classes(d, s, cert.t, cert.mode);
  const mpq_class c2 = scale * scale;
  const mpq_class rhs = -(c2 * squared_norm(d, s, cert.z));
  const mpq_class km1 = cert.kappa - 1;

  bool ok = true;
  std::vector<bool> is_adjacent(s + 1, false);
  for (unsigned i : classes) {
    const mpq_class lhs = c2 * pair_inner_product(d, s, i, cert.z) * km1;
    const bool pass = cert.mode == CertificateMode::equality ? lhs == rhs : lhs <= rhs;
    ok = ok && pass;
    is_adjacent[i] = true;
    ++out.classes_checked;
  }

  // Audit the closed form against coordinatewise dot products.
  const ScaledVectors vecs{cert.z.get_num().get_si(), cert.z.get_den().get_si(), d};
  const long den2 = vecs.den * vecs.den;
  std::vector<mpq_class> expected(s + 1);
  for (unsigned i = 0; i <= s; ++i) expected[i] = pair_inner_product(d, s, i, cert.z) * den2;
  auto audit = [&](SubsetMask a, SubsetMask b) {
    ++out.pairs_audited;
    if (expected[popcount(a & b)] != vecs.dot(a, b)) ok = false;
  };

  if (exhaustive) {
    const auto verts = subsets_of_size(d, s);
    for (auto a : verts)
      for (auto b : verts) {
        if (a != b && is_adjacent[popcount(a & b)]) audit(a, b);
      }
  } else {
    const SubsetMask base = (SubsetMask{1} << s) - 1;
    for (unsigned i : classes) {
      // shares exactly i elements with base
      const SubsetMask low = (SubsetMask{1} << i) - 1;
      const SubsetMask high = ((SubsetMask{1} << (s - i)) - 1) << s;
      audit(base, low | high);
    }
    std::mt19937_64 rng(0x6b6e6573ull);
    for (int k = 0; k < 256; ++k) {
      const SubsetMask a = random_subset(rng, d, s);
      const SubsetMask b = random_subset(rng, d, s);
      if (a != b && is_adjacent[popcount(a & b)]) audit(a, b);
    }
  }
  out.verified = ok;
  return out;
}

mpq_class theta_upper_bound(unsigned d, unsigned s, unsigned t) {
  const auto cert = make_certificate(d, s, t, CertificateMode::equality);
  const auto check = verify_certificate(cert, false);
  if (!check.verified) throw IntegrityError("vector certificate failed verification");
  return cert.kappa;
}

}  // namespace minrank
