#pragma once

// Trace calculus for pairs in SL(2,C): the commutator-trace polynomial,
// reducibility test, the normal form of an irreducible pair, conjugators
// between trace-equivalent pairs, and the involution M that inverts both
// generators (M A M^-1 = A^-1, M B M^-1 = B^-1, M^2 = -I).

#include <optional>

#include "isocover/mat2.hpp"

namespace isocover {

// a = tr A, b = tr B, c = tr AB  ->  tr [A,B] = a^2 + b^2 + c^2 - abc - 2
Scalar fricke_trace(const Scalar& a, const Scalar& b, const Scalar& c);

Mat2 commutator(const Mat2& a, const Mat2& b);  // A B A^-1 B^-1

// tr [A,B] == 2 within eps. Irreducible pairs have tr [A,B] != 2.
bool is_reducible_pair(const Mat2& a, const Mat2& b, double eps);
bool is_reducible_pair(const Mat2& a, const Mat2& b);

// tr(XY) + tr(XY^-1) == tr(X) tr(Y) within eps (holds for all of SL2).
bool trace_product_identity_check(const Mat2& x, const Mat2& y, double eps);

// P^-1 A P = [[a,-1],[1,0]], P^-1 B P = [[0,1/gamma],[-gamma,b]] where
// gamma is the eigenvalue of AB with |gamma| >= 1 (ties: nonnegative
// imaginary part, then nonnegative real part) and det P = 1.
// Throws std::domain_error on a reducible pair or when AB = +-I.
struct NormalFormResult {
  Scalar a, b, gamma;
  Mat2 p;
  bool promoted = false;  // exact input forced onto the float backend
};
NormalFormResult normal_form_pair(const Mat2& a, const Mat2& b);

// The inverting involution in the normal frame, as printed:
//   [[(g^2-1)/2g, (a-bg)/2g], [(ag-b)/2, -(g^2-1)/2g]]
// Its determinant is (2 - tr[A,B])/4; it is NOT unimodular before rescaling.
Mat2 involution_normal_frame(const Scalar& a, const Scalar& b,
                             const Scalar& gamma);

// Unimodular M with M A M^-1 = A^-1, M B M^-1 = B^-1, M^2 = -I; unique up
// to sign, pinned by: the first nonzero entry (row-major) has argument in
// (-pi/2, pi/2]. Requires an irreducible pair.
struct InvolutionResult {
  Mat2 m;
  bool promoted = false;
};
InvolutionResult inverting_involution(const Mat2& a, const Mat2& b);

// Unimodular M with M A M^-1 = A2, M B M^-1 = B2 (unique up to sign, same
// sign convention), or nullopt when the trace coordinates (tr A, tr B,
// tr AB) differ. Requires (A,B) irreducible.
std::optional<Mat2> conjugator(const Mat2& a, const Mat2& b, const Mat2& a2,
                               const Mat2& b2);

// Sign normalization used everywhere a matrix is "unique up to sign".
Mat2 fix_sign(const Mat2& m);

}  // namespace isocover
