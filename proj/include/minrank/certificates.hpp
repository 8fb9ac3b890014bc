#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace minrank {

// Adjacency shape of the Kneser graph the certificate talks about:
// inequality covers T = {0..t}, equality covers T = {t}.
enum class CertificateMode { inequality, equality };

// Vectors u_A with coordinate z on A and -1 off A, z = d/s - 1. Never
// materialized per vertex; inner products only depend on |A n B|.
struct KneserVectorCertificate {
  unsigned d = 0;
  unsigned s = 0;
  unsigned t = 0;
  mpq_class z;
  mpq_class kappa;  // d(s-t) / (s^2 - dt)
  CertificateMode mode = CertificateMode::equality;
};

KneserVectorCertificate make_certificate(unsigned d, unsigned s, unsigned t, CertificateMode mode);

// <u_A, u_B> for |A n B| = i:  i z^2 - 2(s-i) z + (d - 2s + i).
mpq_class pair_inner_product(unsigned d, unsigned s, unsigned i, const mpq_class& z);
// ||u_A||^2 = s z^2 + d - s.
mpq_class squared_norm(unsigned d, unsigned s, const mpq_class& z);

// Intersection sizes realized by distinct adjacent pairs.
std::vector<unsigned> adjacent_classes(unsigned d, unsigned s, unsigned t, CertificateMode mode);

// Largest <w_A, w_B> over adjacent pairs of the inequality-mode graph when the
// vectors use parameter z.
mpq_class worst_adjacent_cosine(unsigned d, unsigned s, unsigned t, const mpq_class& z);

struct CertificateCheck {
  bool verified = false;
  unsigned classes_checked = 0;
  std::uint64_t pairs_audited = 0;  // vertex pairs whose inner product was recomputed coordinatewise
};

// Checks <w_A, w_B> (kappa - 1) <= -1 (== in equality mode) for every adjacent
// intersection class, homogenized so no square roots appear. Each class is
// audited against coordinatewise dot products: every adjacent pair when
// exhaustive, otherwise a representative plus a deterministic sample. `scale`
// multiplies every u vector; the verdict must not depend on it.
CertificateCheck verify_certificate(const KneserVectorCertificate& cert, bool exhaustive,
                                    const mpq_class& scale = 1);

// kappa for the equality-mode certificate, i.e. an upper bound on theta of the
// complement of K(d, s, {t}). Throws IntegrityError if verification fails.
mpq_class theta_upper_bound(unsigned d, unsigned s, unsigned t);

}  // namespace minrank
