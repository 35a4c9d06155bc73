#pragma once

// Representation spaces: tuples of unimodular matrices subject to the
// defining relations of the five-punctured sphere, the twice-punctured
// torus (in D- and C-generators), and the closed genus-2 surface —
// with validation, seeded random sampling, and conjugacy testing.

#include <cstdint>
#include <string>
#include <vector>

#include "isocover/mat2.hpp"
#include "isocover/rng.hpp"
#include "isocover/theta.hpp"

namespace isocover {

// M0 M1 Mt Mlambda Minf = I; traces 0 except trace(Mt) = 2cos(pi theta)
struct FivePuncturedRep {
  Mat2 m0, m1, mt, mlambda, minf;
  Theta theta;
  std::vector<Mat2> matrices() const { return {m0, m1, mt, mlambda, minf}; }
};

// AB = D1 BA D2; trace(D1) = trace(D2) = 2cos(pi theta)
struct TorusTwoRep {
  Mat2 a, b, d1, d2;
  Theta theta;
  std::vector<Mat2> matrices() const { return {a, b, d1, d2}; }
};

// [A,B] = C1 C2; trace(C1) = trace(C2) = 0
struct TorusTwoRepC {
  Mat2 a, b, c1, c2;
  std::vector<Mat2> matrices() const { return {a, b, c1, c2}; }
};

// [A1,B1][A2,B2] = I
struct GenusTwoRep {
  Mat2 a1, b1, a2, b2;
  std::vector<Mat2> matrices() const { return {a1, b1, a2, b2}; }
};

// Empty iff every defining relation (and unimodularity) holds within
// epsilon(); otherwise one human-readable line per violated invariant.
std::vector<std::string> validate(const FivePuncturedRep& rep);
std::vector<std::string> validate(const TorusTwoRep& rep);
std::vector<std::string> validate(const TorusTwoRepC& rep);
std::vector<std::string> validate(const GenusTwoRep& rep);

struct SamplerOptions {
  int max_attempts = 100;          // hard failure beyond this
  double det_margin = 1e-3;        // |det| needed before normalization
  double irreducible_margin = 1e-3;  // |trace[A,B] - 2| needed
  double separation_margin = 1e-3;   // entrywise distance from +-I needed
};

// Entries uniform on [-1,1]^2 in the complex plane, rejected while
// |det| <= det_margin, then scaled to determinant one.
Mat2 random_unimodular(Rng& rng, const SamplerOptions& opt = {});
// As above with trace pinned to 0 (resp. tau) by solving for one entry.
Mat2 random_traceless(Rng& rng, const SamplerOptions& opt = {});
Mat2 random_with_trace(Rng& rng, const Scalar& tau,
                       const SamplerOptions& opt = {});
// Product of shear matrices with small Gaussian-integer parameters;
// stays on the exact backend with determinant exactly one.
Mat2 random_exact_unimodular(Rng& rng, int shear_count = 8);

// Draws A, B with an irreducibility margin and D1 with trace 2cos(pi
// theta) away from +-I, then D2 := A^-1 B^-1 D1^-1 A B, which makes the
// relation AB = D1 BA D2 an identity. Throws std::runtime_error after
// max_attempts rejected draws.
TorusTwoRep sample_torus_rep(const Theta& theta, std::uint64_t seed,
                             const SamplerOptions& opt = {});

// Draws traceless M0, M1 and Mt with trace 2cos(pi theta), solves the
// linear condition trace(M0 M1 Mt * Mlambda) = 0 inside the traceless
// matrices, rescales Mlambda to determinant one, and closes up with
// Minf := (M0 M1 Mt Mlambda)^-1 (traceless automatically).
FivePuncturedRep sample_five_rep(const Theta& theta, std::uint64_t seed,
                                 const SamplerOptions& opt = {});

// True iff one unimodular M conjugates every matrix of rep1 to the
// matching matrix of rep2 (projective: up to a sign per matrix, with
// the generating pair's signs searched). M is found via conjugator on
// the first two matrices; throws if that pair is reducible.
bool is_conjugate(const FivePuncturedRep& r1, const FivePuncturedRep& r2,
                  bool projective = false);
bool is_conjugate(const TorusTwoRep& r1, const TorusTwoRep& r2,
                  bool projective = false);
bool is_conjugate(const TorusTwoRepC& r1, const TorusTwoRepC& r2,
                  bool projective = false);
bool is_conjugate(const GenusTwoRep& r1, const GenusTwoRep& r2,
                  bool projective = false);

// C1 = D1, C2 = (BA) D2 (BA)^-1, turning AB = D1 BA D2 into [A,B] = C1C2.
// Requires theta = 1/2 so that the C-traces vanish.
TorusTwoRepC reparam_d_to_c(const TorusTwoRep& rep);
// Definitional inverse: D1 = C1, D2 = (BA)^-1 C2 (BA), theta = 1/2.
TorusTwoRep reparam_c_to_d(const TorusTwoRepC& rep);

}  // namespace isocover
