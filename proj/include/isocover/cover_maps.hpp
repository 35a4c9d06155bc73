#pragma once

// The explicit correspondences between the representation spaces: the
// degree-two pullback from the five-punctured sphere to the twice-
// punctured torus and its descent (built from the inverting involution),
// the fiber of that descent, and the bielliptic pullback/descent between
// the twice-punctured torus (commutator form) and the closed genus-2
// surface.

#include <array>

#include "isocover/rep_spaces.hpp"

namespace isocover {

// A = M1 Mt Mlambda, B = Mlambda Minf, D1 = Mt, D2 = Minf Mt Minf^-1.
// Throws std::domain_error when the input fails validation.
TorusTwoRep phi1_pullback(const FivePuncturedRep& rep);

struct Phi1Descent {
  FivePuncturedRep rep;
  double residual_bamd1;  // |trace(B A M D1)|, 0 in theory
  bool promoted;          // exact input forced onto the float backend
};

// M0 = -AM, M1 = A B D2^-1 M, Mt = D1, Mlambda = -BM, Minf = M with M
// the sign-fixed inverting involution of (A, B). Requires a valid input
// with (A, B) irreducible and D1, D2 != +-I; the theorem's guarantee
// M D1 M^-1 = D2 is asserted at 10x epsilon (std::runtime_error — an
// assertion failure means an upstream bug, not bad input).
Phi1Descent phi1_descend(const TorusTwoRep& rep);

struct Phi1Fiber {
  FivePuncturedRep plus;   // descent through M
  FivePuncturedRep minus;  // descent through -M
  bool projectively_conjugate;
};

// Both descents; they differ exactly by negating m0, m1, mlambda, minf
// (every image matrix containing one factor of M), and both pull back
// to the input.
Phi1Fiber phi1_fiber(const TorusTwoRep& rep);

// A1 = A, B1 = B, A2 = C1^-1 A C1, B2 = C1^-1 B C1. Throws
// std::domain_error when the input fails validation.
GenusTwoRep pi_pullback(const TorusTwoRepC& rep);

// Finds unimodular M with M A1 M^-1 = A2, M B1 M^-1 = B2 (via the
// conjugator on the generating pair), requires M^2 = -I (automatic
// unless trace[A1,B1] = -2, where it is a genuine condition), and
// returns A = A1, B = B1, C1 = M, C2 = M^-1 [A1,B1]. trace(C2) = 0 is
// asserted at 10x epsilon. Throws std::domain_error when no conjugator
// exists or M^2 != -I.
TorusTwoRepC pi_descend(const GenusTwoRep& rep);

// pi_pullback of reparam_d_to_c of phi1_pullback; needs theta = 1/2.
GenusTwoRep five_to_genus2(const FivePuncturedRep& rep);

}  // namespace isocover
