#include "isocover/rep_spaces.hpp"

#include <cstdlib>
#include <stdexcept>

#include "isocover/sl2.hpp"

namespace isocover {

namespace {

void check_unimodular(std::vector<std::string>& out, const char* name,
                      const Mat2& m) {
  if (!is_unimodular(m)) out.push_back(std::string(name) + " is not unimodular");
}

void check_trace(std::vector<std::string>& out, const char* name,
                 const Mat2& m, const Scalar& want) {
  if (!approx_eq(trace(m), want))
    out.push_back(std::string("trace(") + name + ") is off its required value");
}

}  // namespace

std::vector<std::string> validate(const FivePuncturedRep& rep) {
  std::vector<std::string> out;
  check_unimodular(out, "m0", rep.m0);
  check_unimodular(out, "m1", rep.m1);
  check_unimodular(out, "mt", rep.mt);
  check_unimodular(out, "mlambda", rep.mlambda);
  check_unimodular(out, "minf", rep.minf);
  Mat2 prod = rep.m0 * rep.m1 * rep.mt * rep.mlambda * rep.minf;
  if (!approx_eq(prod, Mat2::identity()))
    out.push_back("product m0 m1 mt mlambda minf is not the identity");
  check_trace(out, "m0", rep.m0, Scalar(0));
  check_trace(out, "m1", rep.m1, Scalar(0));
  check_trace(out, "mt", rep.mt, rep.theta.trace());
  check_trace(out, "mlambda", rep.mlambda, Scalar(0));
  check_trace(out, "minf", rep.minf, Scalar(0));
  return out;
}

std::vector<std::string> validate(const TorusTwoRep& rep) {
  std::vector<std::string> out;
  check_unimodular(out, "a", rep.a);
  check_unimodular(out, "b", rep.b);
  check_unimodular(out, "d1", rep.d1);
  check_unimodular(out, "d2", rep.d2);
  if (!approx_eq(rep.a * rep.b, rep.d1 * rep.b * rep.a * rep.d2))
    out.push_back("relation AB = D1 BA D2 fails");
  check_trace(out, "d1", rep.d1, rep.theta.trace());
  check_trace(out, "d2", rep.d2, rep.theta.trace());
  return out;
}

std::vector<std::string> validate(const TorusTwoRepC& rep) {
  std::vector<std::string> out;
  check_unimodular(out, "a", rep.a);
  check_unimodular(out, "b", rep.b);
  check_unimodular(out, "c1", rep.c1);
  check_unimodular(out, "c2", rep.c2);
  if (!approx_eq(commutator(rep.a, rep.b), rep.c1 * rep.c2))
    out.push_back("relation [A,B] = C1 C2 fails");
  check_trace(out, "c1", rep.c1, Scalar(0));
  check_trace(out, "c2", rep.c2, Scalar(0));
  return out;
}

std::vector<std::string> validate(const GenusTwoRep& rep) {
  std::vector<std::string> out;
  check_unimodular(out, "a1", rep.a1);
  check_unimodular(out, "b1", rep.b1);
  check_unimodular(out, "a2", rep.a2);
  check_unimodular(out, "b2", rep.b2);
  Mat2 prod = commutator(rep.a1, rep.b1) * commutator(rep.a2, rep.b2);
  if (!approx_eq(prod, Mat2::identity()))
    out.push_back("relation [A1,B1][A2,B2] = I fails");
  return out;
}

Mat2 random_unimodular(Rng& rng, const SamplerOptions& opt) {
  for (int i = 0; i < opt.max_attempts; ++i) {
    Mat2 m{Scalar(rng.box()), Scalar(rng.box()), Scalar(rng.box()),
           Scalar(rng.box())};
    Scalar d = det(m);
    if (d.abs() <= opt.det_margin) continue;
    return (Scalar(1) / sqrt_scalar(d)) * m;
  }
  throw std::runtime_error(
      "random_unimodular: no usable determinant within the attempt budget");
}

Mat2 random_traceless(Rng& rng, const SamplerOptions& opt) {
  for (int i = 0; i < opt.max_attempts; ++i) {
    Scalar x(rng.box());
    Scalar y(rng.box());
    if (y.abs() <= opt.det_margin) continue;
    Scalar z = -(Scalar(1) + x * x) / y;  // pins the determinant to one
    return {x, y, z, -x};
  }
  throw std::runtime_error(
      "random_traceless: no usable draw within the attempt budget");
}

Mat2 random_with_trace(Rng& rng, const Scalar& tau,
                       const SamplerOptions& opt) {
  for (int i = 0; i < opt.max_attempts; ++i) {
    Scalar x(rng.box());
    Scalar y(rng.box());
    if (y.abs() <= opt.det_margin) continue;
    Scalar w = tau - x;
    Scalar z = (x * w - Scalar(1)) / y;  // pins the determinant to one
    return {x, y, z, w};
  }
  throw std::runtime_error(
      "random_with_trace: no usable draw within the attempt budget");
}

Mat2 random_exact_unimodular(Rng& rng, int shear_count) {
  Mat2 m = Mat2::identity();
  for (int i = 0; i < shear_count; ++i) {
    Scalar g(Rational(rng.range(-1, 1)), Rational(rng.range(-1, 1)));
    if (i % 2 == 0)
      m = m * Mat2{Scalar(1), g, Scalar(0), Scalar(1)};
    else
      m = m * Mat2{Scalar(1), Scalar(0), g, Scalar(1)};
  }
  return m;
}

TorusTwoRep sample_torus_rep(const Theta& theta, std::uint64_t seed,
                             const SamplerOptions& opt) {
  Rng rng(seed);
  Scalar tau = theta.trace();
  Mat2 id = Mat2::identity();
  for (int i = 0; i < opt.max_attempts; ++i) {
    Mat2 a = random_unimodular(rng, opt);
    Mat2 b = random_unimodular(rng, opt);
    Scalar t = fricke_trace(trace(a), trace(b), trace(a * b));
    if ((t - Scalar(2)).abs() <= opt.irreducible_margin) continue;

    // D2 := A^-1 B^-1 D1^-1 A B makes the relation AB = D1 BA D2 exact,
    // but trace(D2) = trace(D1^-1 [A,B]) is a constraint on D1, not a
    // consequence. Solve for D1 = [[x,y],[z,w]] under the three
    // conditions x + w = tau, trace(D1^-1 K) = tau, det D1 = 1: draw x,
    // eliminate z with the (linear) second condition, and the
    // determinant leaves a quadratic for y.
    Mat2 k = commutator(a, b);
    if (k.m12.abs() <= opt.det_margin || k.m21.abs() <= opt.det_margin)
      continue;
    Scalar x(rng.box());
    Scalar w = tau - x;
    Scalar rho = tau - w * k.m11 - x * k.m22;  // = -y k21 - z k12
    Scalar sigma = x * w - Scalar(1);          // = y z
    Scalar disc = rho * rho - Scalar(4) * k.m21 * sigma * k.m12;
    Scalar root = sqrt_scalar(disc);
    Scalar y1 = (-rho + root) / (Scalar(2) * k.m21);
    Scalar y2 = (-rho - root) / (Scalar(2) * k.m21);
    Scalar y = y1.abs() >= y2.abs() ? y1 : y2;
    if (y.abs() <= opt.det_margin) continue;
    Scalar z = -(rho + k.m21 * y) / k.m12;
    Mat2 d1{x, y, z, w};
    if (max_entry_dist(d1, id) <= opt.separation_margin ||
        max_entry_dist(d1, -id) <= opt.separation_margin)
      continue;
    Mat2 d2 = inverse(a) * inverse(b) * inverse(d1) * a * b;
    if (max_entry_dist(d2, id) <= opt.separation_margin ||
        max_entry_dist(d2, -id) <= opt.separation_margin)
      continue;
    return {a, b, d1, d2, theta};
  }
  throw std::runtime_error(
      "sample_torus_rep: no usable draw within the attempt budget");
}

FivePuncturedRep sample_five_rep(const Theta& theta, std::uint64_t seed,
                                 const SamplerOptions& opt) {
  Rng rng(seed);
  Scalar tau = theta.trace();
  for (int i = 0; i < opt.max_attempts; ++i) {
    Mat2 m0 = random_traceless(rng, opt);
    Mat2 m1 = random_traceless(rng, opt);
    Mat2 mt = random_with_trace(rng, tau, opt);
    Mat2 p = m0 * m1 * mt;

    // trace(P * [[x,y],[z,-x]]) = (p11 - p22) x + p21 y + p12 z: draw two
    // coordinates, solve along the best-conditioned one
    Scalar cx = p.m11 - p.m22, cy = p.m21, cz = p.m12;
    Scalar u(rng.box());
    Scalar v(rng.box());
    Scalar x, y, z;
    if (cz.abs() >= cy.abs() && cz.abs() >= cx.abs()) {
      if (cz.abs() <= opt.det_margin) continue;
      x = u, y = v, z = -(cx * u + cy * v) / cz;
    } else if (cy.abs() >= cx.abs()) {
      if (cy.abs() <= opt.det_margin) continue;
      x = u, z = v, y = -(cx * u + cz * v) / cy;
    } else {
      if (cx.abs() <= opt.det_margin) continue;
      y = u, z = v, x = -(cy * u + cz * v) / cx;
    }

    Mat2 ml0{x, y, z, -x};
    Scalar d = det(ml0);
    if (d.abs() <= opt.det_margin) continue;  // degenerate: resample
    Mat2 ml = (Scalar(1) / sqrt_scalar(d)) * ml0;
    Mat2 minf = inverse(m0 * m1 * mt * ml);
    return {m0, m1, mt, ml, minf, theta};
  }
  throw std::runtime_error(
      "sample_five_rep: no usable draw within the attempt budget");
}

namespace {

bool tuples_conjugate(const std::vector<Mat2>& xs, const std::vector<Mat2>& ys,
                      bool projective) {
  if (!projective) {
    auto m = conjugator(xs[0], xs[1], ys[0], ys[1]);
    if (!m) return false;
    Mat2 mi = inverse(*m);
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!approx_eq(*m * xs[i] * mi, ys[i])) return false;
    return true;
  }
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      Mat2 y0 = s1 == 1 ? ys[0] : -ys[0];
      Mat2 y1 = s2 == 1 ? ys[1] : -ys[1];
      auto m = conjugator(xs[0], xs[1], y0, y1);
      if (!m) continue;
      Mat2 mi = inverse(*m);
      bool ok = true;
      for (std::size_t i = 0; ok && i < xs.size(); ++i) {
        Mat2 c = *m * xs[i] * mi;
        ok = approx_eq(c, ys[i]) || approx_eq(c, -ys[i]);
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

bool is_conjugate(const FivePuncturedRep& r1, const FivePuncturedRep& r2,
                  bool projective) {
  return tuples_conjugate(r1.matrices(), r2.matrices(), projective);
}

bool is_conjugate(const TorusTwoRep& r1, const TorusTwoRep& r2,
                  bool projective) {
  return tuples_conjugate(r1.matrices(), r2.matrices(), projective);
}

bool is_conjugate(const TorusTwoRepC& r1, const TorusTwoRepC& r2,
                  bool projective) {
  return tuples_conjugate(r1.matrices(), r2.matrices(), projective);
}

bool is_conjugate(const GenusTwoRep& r1, const GenusTwoRep& r2,
                  bool projective) {
  return tuples_conjugate(r1.matrices(), r2.matrices(), projective);
}

TorusTwoRepC reparam_d_to_c(const TorusTwoRep& rep) {
  if (!rep.theta.is_half())
    throw std::domain_error(
        "reparametrization to commutator form needs theta = 1/2");
  Mat2 ba = rep.b * rep.a;
  return {rep.a, rep.b, rep.d1, ba * rep.d2 * inverse(ba)};
}

TorusTwoRep reparam_c_to_d(const TorusTwoRepC& rep) {
  Mat2 ba = rep.b * rep.a;
  return {rep.a, rep.b, rep.c1, inverse(ba) * rep.c2 * ba, Theta::half()};
}

}  // namespace isocover
