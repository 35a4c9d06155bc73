#include "isocover/verify.hpp"

#include <chrono>
#include <cmath>
#include <utility>

#include "isocover/cover_maps.hpp"
#include "isocover/rng.hpp"
#include "isocover/sl2.hpp"
#include "isocover/words.hpp"

namespace isocover {

namespace {

// Scales the global tolerance for the duration of a suite whose
// contract is stated at 10x epsilon, restoring it afterwards.
class EpsilonScale {
 public:
  explicit EpsilonScale(double factor) : saved_(epsilon()) {
    set_epsilon(saved_ * factor);
  }
  ~EpsilonScale() { set_epsilon(saved_); }
  EpsilonScale(const EpsilonScale&) = delete;
  EpsilonScale& operator=(const EpsilonScale&) = delete;

 private:
  double saved_;
};

class SuiteRun {
 public:
  SuiteRun(std::string command, std::uint64_t seed, int trials) {
    report_.command = std::move(command);
    report_.seed = seed;
    report_.trials = trials;
    start_ = std::chrono::steady_clock::now();
  }

  void fail(int trial, std::string invariant, Json input) {
    report_.failures.push_back(
        {"trial-" + std::to_string(trial), std::move(invariant),
         std::move(input)});
  }

  // Wraps one trial body; an exception is itself a failure.
  template <typename F>
  void trial(int index, const F& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(index, std::string("exception: ") + e.what(), Json());
    }
  }

  RunReport finish() {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    return std::move(report_);
  }

 private:
  RunReport report_;
  std::chrono::steady_clock::time_point start_;
};

Theta theta_cycle(int trial) {
  switch (trial % 3) {
    case 0: return Theta::half();
    case 1: return Theta::from_rational(Rational(1, 3));
    default: return Theta::from_double(0.137);
  }
}

Scalar cplx(const std::complex<double>& z) { return Scalar(z); }

bool entrywise_close(const Mat2& x, const Mat2& y, double tol) {
  return max_entry_dist(x, y) <= tol;
}

}  // namespace

Json to_json(const VerifyFailure& f) {
  return Json{{"case-id", f.case_id},
              {"violated-invariant", f.violated_invariant},
              {"input", f.input}};
}

Json to_json(const RunReport& r) {
  Json failures = Json::array();
  for (const VerifyFailure& f : r.failures) failures.push_back(to_json(f));
  return Json{{"command", r.command},
              {"seed", r.seed},
              {"trials", r.trials},
              {"failures", failures},
              {"elapsed", r.elapsed_ms}};
}

RunReport verify_fricke(int trials, std::uint64_t seed, Backend backend) {
  const bool exact = backend == Backend::exact;
  SuiteRun run(exact ? "verify fricke --backend exact"
                     : "verify fricke --backend float",
               seed, trials);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    run.trial(t, [&] {
      const Mat2 a = exact ? random_exact_unimodular(rng) : random_unimodular(rng);
      const Mat2 b = exact ? random_exact_unimodular(rng) : random_unimodular(rng);
      const Scalar lhs = trace(commutator(a, b));
      const Scalar rhs = fricke_trace(trace(a), trace(b), trace(a * b));
      const bool ok = exact ? approx_eq(lhs, rhs, 0.0)
                            : (lhs - rhs).abs() <= epsilon();
      if (!ok)
        run.fail(t,
                 "trace[A,B] != a^2+b^2+c^2-abc-2 (difference " +
                     std::to_string((lhs - rhs).abs()) + ")",
                 Json{{"a", to_json(a)}, {"b", to_json(b)}});
    });
  }
  return run.finish();
}

RunReport verify_involution(int trials, std::uint64_t seed) {
  SuiteRun run("verify involution", seed, trials);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    run.trial(t, [&] {
      // Random normal-form triple with an irreducibility margin.
      Scalar a, b, gamma;
      Mat2 ma, mb;
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 100) throw std::runtime_error("sampler exhausted");
        a = cplx(rng.box());
        b = cplx(rng.box());
        std::complex<double> g = rng.box();
        if (std::abs(g) < 1e-3) continue;
        if (std::abs(g) < 1.0) g = 1.0 / g;
        gamma = cplx(g);
        ma = Mat2{a, Scalar(-1), Scalar(1), Scalar(0)};
        mb = Mat2{Scalar(0), Scalar(1) / gamma, -gamma, b};
        if (!is_reducible_pair(ma, mb, 1e-3)) break;
      }
      const Json input{{"a", to_json(a)},
                       {"b", to_json(b)},
                       {"gamma", to_json(gamma)}};

      // The frame matrix as printed: determinant (2 - trace[A,B])/4.
      const Mat2 frame = involution_normal_frame(a, b, gamma);
      const Scalar expected = (Scalar(2) - trace(commutator(ma, mb))) *
                              Scalar(Rational(1, 4));
      if ((det(frame) - expected).abs() > epsilon())
        run.fail(t, "det of the frame involution != (2 - trace[A,B])/4",
                 input);

      // Rescaled involution: unimodular, squares to -I, inverts both.
      const double loose = 10 * epsilon();
      const Mat2 m = inverting_involution(ma, mb).m;
      if ((det(m) - Scalar(1)).abs() > loose)
        run.fail(t, "rescaled involution is not unimodular", input);
      if (!entrywise_close(m * m, -Mat2::identity(), loose))
        run.fail(t, "involution squared is not -I", input);
      if (!entrywise_close(m * ma * inverse(m), inverse(ma), loose))
        run.fail(t, "M A M^-1 != A^-1", input);
      if (!entrywise_close(m * mb * inverse(m), inverse(mb), loose))
        run.fail(t, "M B M^-1 != B^-1", input);
    });
  }
  return run.finish();
}

RunReport verify_r0(int trials, std::uint64_t seed) {
  SuiteRun run("verify r0", seed, trials);
  EpsilonScale scale(10);
  for (int t = 0; t < trials; ++t) {
    run.trial(t, [&] {
      const TorusTwoRep rep = sample_torus_rep(theta_cycle(t), seed + t);
      const Json input = to_json(rep);
      const Phi1Descent descent = phi1_descend(rep);
      for (const std::string& violation : validate(descent.rep))
        run.fail(t, "descent output invalid: " + violation, input);
      if (descent.residual_bamd1 > epsilon())
        run.fail(t,
                 "diagnostic trace(B A M D1) = " +
                     std::to_string(descent.residual_bamd1),
                 input);
      const TorusTwoRep back = phi1_pullback(descent.rep);
      const std::vector<Mat2> expect = rep.matrices();
      const std::vector<Mat2> got = back.matrices();
      for (size_t i = 0; i < expect.size(); ++i)
        if (!entrywise_close(expect[i], got[i], epsilon())) {
          run.fail(t, "pullback of the descent differs from the input",
                   input);
          break;
        }
    });
  }
  return run.finish();
}

RunReport verify_two_to_one(int trials, std::uint64_t seed) {
  SuiteRun run("verify two-to-one", seed, trials);
  EpsilonScale scale(10);
  for (int t = 0; t < trials; ++t) {
    run.trial(t, [&] {
      const TorusTwoRep rep = sample_torus_rep(theta_cycle(t), seed + t);
      const Json input = to_json(rep);
      const Phi1Fiber fiber = phi1_fiber(rep);
      for (const std::string& violation : validate(fiber.plus))
        run.fail(t, "first preimage invalid: " + violation, input);
      for (const std::string& violation : validate(fiber.minus))
        run.fail(t, "second preimage invalid: " + violation, input);

      double separation = 0.0;
      const std::vector<Mat2> plus = fiber.plus.matrices();
      const std::vector<Mat2> minus = fiber.minus.matrices();
      for (size_t i = 0; i < plus.size(); ++i)
        separation = std::max(separation, max_entry_dist(plus[i], minus[i]));
      if (separation <= 1e-3)
        run.fail(t, "the two preimages coincide", input);
      if (!fiber.projectively_conjugate)
        run.fail(t, "preimages are not projectively conjugate", input);

      for (const FivePuncturedRep* pre : {&fiber.plus, &fiber.minus}) {
        const TorusTwoRep back = phi1_pullback(*pre);
        const std::vector<Mat2> expect = rep.matrices();
        const std::vector<Mat2> got = back.matrices();
        for (size_t i = 0; i < expect.size(); ++i)
          if (!entrywise_close(expect[i], got[i], epsilon())) {
            run.fail(t, "a preimage does not pull back to the input", input);
            break;
          }
      }
    });
  }
  return run.finish();
}

RunReport verify_bielliptic(int trials, std::uint64_t seed) {
  SuiteRun run("verify bielliptic", seed, trials);
  EpsilonScale scale(10);
  for (int t = 0; t < trials; ++t) {
    run.trial(t, [&] {
      const TorusTwoRep rep = sample_torus_rep(Theta::half(), seed + t);
      const Json input = to_json(rep);
      const TorusTwoRepC c = reparam_d_to_c(rep);
      const GenusTwoRep genus2 = pi_pullback(c);
      for (const std::string& violation : validate(genus2))
        run.fail(t, "genus-2 pullback invalid: " + violation, input);

      // Descent recovers (C1, C2) up to one joint sign.
      const TorusTwoRepC back = pi_descend(genus2);
      const double tol = epsilon();
      const bool plus = entrywise_close(back.c1, c.c1, tol) &&
                        entrywise_close(back.c2, c.c2, tol);
      const bool minus = entrywise_close(back.c1, -c.c1, tol) &&
                         entrywise_close(back.c2, -c.c2, tol);
      if (!plus && !minus)
        run.fail(t, "descent does not recover C1, C2 up to sign", input);

      // Away from the reducible locus, the chain closes projectively.
      const Scalar comm_trace = trace(commutator(c.a, c.b));
      if ((comm_trace - Scalar(2)).abs() > 1e-3) {
        const FivePuncturedRep five_back =
            phi1_descend(reparam_c_to_d(back)).rep;
        const FivePuncturedRep five_direct = phi1_descend(rep).rep;
        if (!is_conjugate(five_back, five_direct, true))
          run.fail(t, "chain back down is not projectively conjugate",
                   input);
      }
    });
  }
  return run.finish();
}

RunReport verify_words(int trials, std::uint64_t seed) {
  SuiteRun run("verify words", seed, trials);
  Rng rng(seed);
  const std::vector<Gen> torus_letters = {Gen::alpha, Gen::beta, Gen::delta1,
                                          Gen::delta2};
  for (int t = 0; t < trials; ++t) {
    run.trial(t, [&] {
      const FivePuncturedRep rep = sample_five_rep(theta_cycle(t), seed + t);
      const Json input = to_json(rep);
      const TorusTwoRep pulled = phi1_pullback(rep);
      const auto five_assignment = assignment_from(rep);
      const auto torus_assignment = assignment_from(pulled);

      // Embedding consistency on every generator.
      for (Gen x : torus_letters) {
        const Word image = phi_star({Letter{x, 1}});
        const Mat2 via_words = eval_word(image, five_assignment);
        const Mat2 via_matrices = eval_word({Letter{x, 1}}, torus_assignment);
        if (!entrywise_close(via_words, via_matrices, epsilon())) {
          run.fail(t,
                   "embedded word for " + gen_name(x) +
                       " evaluates off the pullback matrix",
                   input);
        }
      }

      // The relation word lifts with the + sign through the embedding.
      const Mat2 relation =
          eval_word(phi_star(torus_relation_word()), five_assignment);
      if (!entrywise_close(relation, Mat2::identity(), 10 * epsilon()))
        run.fail(t, "relation word does not evaluate to +I", input);
    });
  }

  // The elliptic involution is an exact involution on words.
  for (int t = 0; t < 10 * trials; ++t) {
    run.trial(trials + t, [&] {
      Word w;
      const int length = rng.range(0, 12);
      for (int i = 0; i < length; ++i)
        w.push_back(Letter{torus_letters[rng.range(0, 3)],
                           rng.range(0, 1) == 0 ? 1 : -1});
      if (!(involution(involution(w)) == w))
        run.fail(trials + t, "involution applied twice changed the word",
                 Json{{"word", to_text(w)}});
    });
  }
  return run.finish();
}

}  // namespace isocover
