#pragma once

// Randomized verification suites: each replays one of the constructive
// identities on seeded random inputs and returns a structured report.
// Identical (suite, trials, seed, backend) produce identical reports,
// except for the elapsed time.
//
// Tolerances derive from the global epsilon(): identities checked at
// epsilon() itself (1e-9 by default) are marked "tight" below, those
// checked at 10x epsilon() (1e-8 by default) "loose" — the latter are
// the ones downstream of a matrix square root or a conjugation solve.

#include <cstdint>
#include <string>
#include <vector>

#include "isocover/json_io.hpp"

namespace isocover {

enum class Backend { floating, exact };

struct VerifyFailure {
  std::string case_id;             // "trial-17"
  std::string violated_invariant;  // one human-readable line
  Json input;                      // enough to replay the trial
};

struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<VerifyFailure> failures;  // in trial order
  std::int64_t elapsed_ms = 0;

  bool ok() const { return failures.empty(); }
};

Json to_json(const VerifyFailure& f);
Json to_json(const RunReport& r);

// Commutator-trace polynomial on random unimodular pairs: tight on the
// floating backend, exact equality on the exact one.
RunReport verify_fricke(int trials, std::uint64_t seed,
                        Backend backend = Backend::floating);

// Inverting involution on random normal-form triples (a, b, gamma):
// the printed frame matrix has determinant (2 - trace[A,B])/4 (tight);
// the rescaled M is unimodular, squares to -I, and inverts both
// generators by conjugation (loose).
RunReport verify_involution(int trials, std::uint64_t seed);

// Descent from the twice-punctured torus: succeeds on sampled tuples
// (theta cycling 1/2, 1/3, 0.137), output satisfies all constraints,
// the internal diagnostic trace(B A M D1) vanishes, and the pullback
// of the descent returns the input entrywise (all loose).
RunReport verify_r0(int trials, std::uint64_t seed);

// The descent fiber: exactly two preimages, both valid, genuinely
// different as lifts yet projectively conjugate, and both pulling back
// to the input (loose).
RunReport verify_two_to_one(int trials, std::uint64_t seed);

// Bielliptic correspondence at theta = 1/2: the pullback to genus 2 is
// valid, the descent recovers (C1, C2) up to a joint sign, and — when
// the commutator trace stays 1e-3 away from 2 — the chain back down to
// the five-punctured sphere is projectively conjugate to the direct
// descent of the input (loose).
RunReport verify_bielliptic(int trials, std::uint64_t seed);

// Word/matrix consistency: evaluating the embedded image of each torus
// generator equals the pullback matrix (tight), the relation word
// evaluates to +I through the embedding, and the elliptic involution
// on words is an exact involution (10x trials random words).
RunReport verify_words(int trials, std::uint64_t seed);

}  // namespace isocover
