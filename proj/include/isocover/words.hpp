#pragma once

// Word-level model of the two fundamental groups in play: the orbifold
// group of the five-punctured sphere quotient (generators g0, g1, gt,
// glambda, ginf; g0, g1, glambda, ginf are projectively involutive) and
// the twice-punctured torus group (alpha, beta, delta1, delta2), with
// the index-two embedding of the second into the first and the elliptic
// involution on the second.
//
// Two regimes are kept deliberately distinct:
//   - word rewriting is projective (it may use g^2 = 1 for the
//     involutive generators), while
//   - matrix evaluation is at the lift level, where a traceless
//     unimodular matrix squares to -I, not I.
// The sign bookkeeping of the covering correspondences lives exactly in
// that gap, so reduce() never runs implicitly.

#include <map>
#include <string>
#include <vector>

#include "isocover/mat2.hpp"
#include "isocover/rep_spaces.hpp"

namespace isocover {

enum class Gen {
  g0,
  g1,
  gt,
  glambda,
  ginf,
  alpha,
  beta,
  delta1,
  delta2,
};

// "g0", "g1", "gt", "glambda", "ginf", "alpha", "beta", "delta1", "delta2"
std::string gen_name(Gen g);

bool is_five_letter(Gen g);   // sphere-quotient alphabet
bool is_torus_letter(Gen g);  // twice-punctured torus alphabet
bool is_involutive(Gen g);    // g0, g1, glambda, ginf (not gt)

struct Letter {
  Gen gen;
  int exponent;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word concat(const Word& u, const Word& v);

// Cancels adjacent x x^-1 only; sign-exact at evaluation level.
Word free_reduce(const Word& w);

// Free reduction plus the projective rules g^2 = 1 (equivalently
// g^-1 = g) for the involutive generators; confluent normal form.
Word reduce(const Word& w);

// alpha -> g1 gt glambda, beta -> glambda ginf, delta1 -> gt,
// delta2 -> ginf gt ginf^-1, extended multiplicatively. Returns the
// raw concatenation of letter images, unreduced, so that evaluation
// commutes with the map on the nose.
Word phi_star(const Word& w);

// alpha -> alpha^-1, beta -> beta^-1, delta1 <-> delta2, letterwise.
Word involution(const Word& w);

// Count of letters from {g0, g1, glambda, ginf}; even on every
// phi_star image (the index-two subgroup criterion).
int involutive_letter_count(const Word& w);

// Left-to-right product of assigned matrices (inverses for exponent
// -1); empty word gives I. Throws std::domain_error when a letter has
// no assignment.
Mat2 eval_word(const Word& w, const std::map<Gen, Mat2>& assignment);

std::map<Gen, Mat2> assignment_from(const FivePuncturedRep& rep);
std::map<Gen, Mat2> assignment_from(const TorusTwoRep& rep);

// Whitespace-separated tokens like "g0 g1^-1 gt"; parse throws
// std::invalid_argument on an unknown token or exponent.
std::string to_text(const Word& w);
Word parse_word(const std::string& text);

// alpha beta (delta1 beta alpha delta2)^-1, the defining relation of
// the twice-punctured torus group.
Word torus_relation_word();

// g0 g1 gt glambda ginf, the long relation of the sphere quotient.
Word five_relation_word();

}  // namespace isocover
