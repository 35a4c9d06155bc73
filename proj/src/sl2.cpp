#include "isocover/sl2.hpp"

#include <cmath>
#include <stdexcept>

namespace isocover {

Scalar fricke_trace(const Scalar& a, const Scalar& b, const Scalar& c) {
  return a * a + b * b + c * c - a * b * c - Scalar(2);
}

Mat2 commutator(const Mat2& a, const Mat2& b) {
  return a * b * inverse(a) * inverse(b);
}

bool is_reducible_pair(const Mat2& a, const Mat2& b, double eps) {
  Scalar t = fricke_trace(trace(a), trace(b), trace(a * b));
  return approx_eq(t, Scalar(2), eps);
}

bool is_reducible_pair(const Mat2& a, const Mat2& b) {
  return is_reducible_pair(a, b, epsilon());
}

bool trace_product_identity_check(const Mat2& x, const Mat2& y, double eps) {
  Scalar lhs = trace(x * y) + trace(x * inverse(y));
  return approx_eq(lhs, trace(x) * trace(y), eps);
}

namespace {

// eigenvector of m for eigenvalue g: the nonzero column of the adjugate of
// (m - gI); both candidate kernel vectors are formed and the larger kept.
struct Vec2 {
  Scalar x, y;
};

Vec2 eigenvector(const Mat2& m, const Scalar& g) {
  Vec2 c1{m.m12, g - m.m11};
  Vec2 c2{g - m.m22, m.m21};
  double n1 = std::norm(c1.x.to_complex()) + std::norm(c1.y.to_complex());
  double n2 = std::norm(c2.x.to_complex()) + std::norm(c2.y.to_complex());
  return n1 >= n2 ? c1 : c2;
}

// the root of g^2 - cg + 1 with |g| >= 1; ties broken toward nonnegative
// imaginary part, then nonnegative real part
Scalar select_eigenvalue(const Scalar& r1, const Scalar& r2) {
  if (r1.is_exact() && r2.is_exact()) {
    const auto& a = r1.exact_value();
    const auto& b = r2.exact_value();
    Rational n1 = a.re * a.re + a.im * a.im;
    Rational n2 = b.re * b.re + b.im * b.im;
    if (n1 != n2) return n1 > n2 ? r1 : r2;
    if (a.im != b.im) return a.im > b.im ? r1 : r2;
    return a.re >= b.re ? r1 : r2;
  }
  std::complex<double> a = r1.to_complex(), b = r2.to_complex();
  if (std::norm(a) != std::norm(b)) return std::norm(a) > std::norm(b) ? r1 : r2;
  if (a.imag() != b.imag()) return a.imag() > b.imag() ? r1 : r2;
  return a.real() >= b.real() ? r1 : r2;
}

}  // namespace

NormalFormResult normal_form_pair(const Mat2& a, const Mat2& b) {
  Mat2 ab = a * b;
  Mat2 id = Mat2::identity();
  if (approx_eq(ab, id) || approx_eq(ab, -id))
    throw std::domain_error(
        "AB is the identity up to sign; the pair has no normal form");
  if (is_reducible_pair(a, b))
    throw std::domain_error("reducible pair has no normal form");

  NormalFormResult res;
  res.a = trace(a);
  res.b = trace(b);

  Scalar c = trace(ab);
  bool promoted_disc = false;
  Scalar s = sqrt_scalar(c * c - Scalar(4), &promoted_disc);
  Scalar half(Rational(1, 2));
  res.gamma = select_eigenvalue(half * (c + s), half * (c - s));

  Vec2 v = eigenvector(ab, res.gamma);
  Scalar g2 = res.gamma * res.gamma;
  // columns gamma^2 v and -gamma Bv give the frame carrying A and B to the
  // companion shapes; rescale to determinant one
  Vec2 bv{b.m11 * v.x + b.m12 * v.y, b.m21 * v.x + b.m22 * v.y};
  Mat2 p0{g2 * v.x, -res.gamma * bv.x, g2 * v.y, -res.gamma * bv.y};
  bool promoted_det = false;
  Scalar r = sqrt_scalar(det(p0), &promoted_det);
  res.p = (Scalar(1) / r) * p0;
  res.promoted = promoted_disc || promoted_det;
  return res;
}

Mat2 involution_normal_frame(const Scalar& a, const Scalar& b,
                             const Scalar& gamma) {
  Scalar g2 = gamma * gamma;
  Scalar two_g = Scalar(2) * gamma;
  Scalar diag = (g2 - Scalar(1)) / two_g;
  return {diag, (a - b * gamma) / two_g, (a * gamma - b) / Scalar(2), -diag};
}

InvolutionResult inverting_involution(const Mat2& a, const Mat2& b) {
  NormalFormResult nf = normal_form_pair(a, b);
  Mat2 m0 = involution_normal_frame(nf.a, nf.b, nf.gamma);

  Scalar c = nf.gamma + Scalar(1) / nf.gamma;  // = tr AB
  Scalar tr_comm = fricke_trace(nf.a, nf.b, c);
  bool promoted_root = false;
  Scalar s = sqrt_scalar(Scalar(2) - tr_comm, &promoted_root);
  Mat2 m_frame = (Scalar(2) / s) * m0;

  InvolutionResult res;
  res.m = fix_sign(nf.p * m_frame * inverse(nf.p));
  res.promoted = nf.promoted || promoted_root;
  return res;
}

std::optional<Mat2> conjugator(const Mat2& a, const Mat2& b, const Mat2& a2,
                               const Mat2& b2) {
  if (is_reducible_pair(a, b))
    throw std::domain_error("conjugator requires an irreducible pair");
  if (!approx_eq(trace(a), trace(a2)) || !approx_eq(trace(b), trace(b2)) ||
      !approx_eq(trace(a * b), trace(a2 * b2)))
    return std::nullopt;

  NormalFormResult n1 = normal_form_pair(a, b);
  NormalFormResult n2 = normal_form_pair(a2, b2);
  Mat2 m = n2.p * inverse(n1.p);
  // guard against eigenvalue-selection flips right at |gamma| = 1
  double tol = 1e3 * epsilon();
  if (max_entry_dist(m * a * inverse(m), a2) > tol ||
      max_entry_dist(m * b * inverse(m), b2) > tol)
    return std::nullopt;
  return fix_sign(m);
}

Mat2 fix_sign(const Mat2& m) {
  const Scalar* entries[4] = {&m.m11, &m.m12, &m.m21, &m.m22};
  const Scalar* lead = nullptr;
  for (const Scalar* e : entries) {
    bool nonzero = e->is_exact() ? !e->is_zero() : e->abs() > epsilon();
    if (nonzero) {
      lead = e;
      break;
    }
  }
  if (!lead) {
    double best = -1.0;
    for (const Scalar* e : entries) {
      if (e->abs() > best) {
        best = e->abs();
        lead = e;
      }
    }
  }
  bool flip;
  if (lead->is_exact()) {
    const auto& q = lead->exact_value();
    flip = q.re < 0 || (q.re == 0 && q.im < 0);
  } else {
    std::complex<double> z = lead->to_complex();
    flip = z.real() < 0 || (z.real() == 0 && z.imag() < 0);
  }
  return flip ? -m : m;
}

}  // namespace isocover
