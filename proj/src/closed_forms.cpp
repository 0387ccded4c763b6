#include "pgspec/closed_forms.hpp"

#include <algorithm>
#include <cmath>

#include "pgspec/eigen.hpp"

namespace pgspec {

namespace {

struct Consts {
  double K;  // 2^k p
  double h;  // 2^{k-1} p
  double q;  // 2^{k-2} p
  double a;
  double b;  // 1 - alpha
};

Consts consts(const GroupParams& params, AlphaParam alpha) {
  const auto K = static_cast<double>(params.rotation_order());
  return {K, K / 2.0, K / 4.0, alpha.value(), alpha.complement()};
}

DenseSymMatrix symmetrize(const DenseMatrix& q, const std::array<double, 5>& w) {
  DenseSymMatrix s(5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) s.set(i, j, q(i, j) * std::sqrt(w[i] / w[j]));
  return s;
}

std::array<double, 5> class_weights(const Consts& c) { return {c.h, 1.0, c.K - 2.0, 1.0, c.h}; }

}  // namespace

QuinticCoeffs QuinticCoeffs::printed(const GroupParams& params, AlphaParam alpha) {
  const int k = params.k();
  const double p = params.p();
  const double a = alpha.value();
  const auto t = [](int e) { return std::ldexp(1.0, e); };
  const double p2 = p * p;
  const double p3 = p2 * p;
  const double a2 = a * a;
  const double a3 = a2 * a;
  const double a4 = a3 * a;

  QuinticCoeffs q;
  q.c[0] = 1.0;
  q.c[1] = -((7 * t(k - 1) * p + 3) * a + t(k) * p - 2);
  q.c[2] = -((-3 * t(2 * k) * p2 - 21 * t(k - 1) * p - 2) * a2 + (-7 * t(2 * k - 1) * p2 - t(k) * p + 8) * a +
             5 * t(k - 1) * p);
  q.c[3] = -((9 * t(2 * k) * p2 + 7 * t(k) * p) * a3 +
             (3 * t(3 * k) * p3 + 23 * t(2 * k - 1) * p2 - 3 * t(k + 1) * p - 6) * a2 +
             (t(2 * k - 1) * p2 - 23 * t(k) * p + 6) * a - 3 * t(2 * k - 1) * p2 + t(k + 2) * p + 2);
  q.c[4] = -(-3 * t(2 * k + 1) * p2 * a4 + (-13 * t(3 * k - 1) * p3 - 59 * t(2 * k - 2) * p2 + 5 * t(k + 1) * p) * a3 +
             (-t(3 * k + 3) * p3 + 105 * t(2 * k - 2) * p2 + 45 * t(k - 1) * p - 6) * a2 +
             (5 * t(3 * k - 1) * p3 + 9 * t(2 * k - 2) * p2 - 5 * t(k + 2) * p) * a - 5 * t(2 * k - 2) * p2 +
             3 * t(k - 1) * p + 1);
  q.c[5] = -(3 * t(3 * k) * p3 + 15 * t(2 * k - 1) * p2) * a4 -
           (31 * t(3 * k - 2) * p3 - 95 * t(2 * k - 2) * p2 - t(k + 1) * p) * a3 -
           (-t(3 * k - 2) * p3 - 37 * t(2 * k - 2) * p2 + 9 * t(k + 1) * p - 2) * a2 -
           (-7 * t(3 * k - 2) * p3 + 25 * t(2 * k - 2) * p2 - 3 * t(k - 1) * p - 1) * a - t(3 * k - 2) * p3 +
           t(2 * k - 2) * p2 + t(k) * p;
  return q;
}

double QuinticCoeffs::operator()(double x) const {
  double v = 0.0;
  for (double coef : c) v = v * x + coef;
  return v;
}

double QuinticCoeffs::magnitude(double x) const {
  double m = 0.0;
  double pw = 1.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    m += std::abs(c[i] * pw);
    pw *= x;
  }
  return m;
}

DenseMatrix a_alpha_coefficient_system(const GroupParams& params, AlphaParam alpha) {
  const Consts c = consts(params, alpha);
  const auto q = static_cast<std::size_t>(params.quarter());
  DenseMatrix y(q + 4, q + 4);
  const std::vector<std::vector<double>> a = {
      {c.a, c.b, 0.0, 0.0},
      {c.h * c.b, (2 * c.K - 1) * c.a, (c.K - 2) * c.b, c.b},
      {0.0, c.b, c.K + 2 * c.a - 3, c.b},
      {0.0, c.b, (c.K - 2) * c.b, (3 * c.h - 1) * c.a},
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) y(i, j) = a[i][j];
  for (std::size_t j = 0; j < q; ++j) {
    y(1, 4 + j) = 2 * c.b;
    y(3, 4 + j) = 2 * c.b;
    y(4 + j, 1) = c.b;
    y(4 + j, 3) = c.b;
    y(4 + j, 4 + j) = 2 * c.a + 1;
  }
  return y;
}

DenseSymMatrix a_alpha_class_quotient(const GroupParams& params, AlphaParam alpha) {
  const Consts c = consts(params, alpha);
  const DenseMatrix q = DenseMatrix::from_rows({
      {c.a, c.b, 0.0, 0.0, 0.0},
      {c.h * c.b, (2 * c.K - 1) * c.a, (c.K - 2) * c.b, c.b, c.h * c.b},
      {0.0, c.b, c.K - 3 + 2 * c.a, c.b, 0.0},
      {0.0, c.b, (c.K - 2) * c.b, (3 * c.h - 1) * c.a, c.h * c.b},
      {0.0, c.b, 0.0, c.b, 2 * c.a + 1},
  });
  return symmetrize(q, class_weights(c));
}

Spectrum a_alpha_families(const GroupParams& params, AlphaParam alpha) {
  const Consts c = consts(params, alpha);
  const int K = params.rotation_order();
  Spectrum s;
  s.add(c.a, static_cast<std::size_t>(K / 2 - 1), EigenSource::closed_family, "alpha");
  s.add(c.a * c.K - 1, static_cast<std::size_t>(K - 3), EigenSource::closed_family, "alpha*2^k*p-1");
  s.add(4 * c.a - 1, static_cast<std::size_t>(K / 4), EigenSource::closed_family, "4alpha-1");
  s.add(2 * c.a + 1, static_cast<std::size_t>(K / 4 - 1), EigenSource::closed_family, "2alpha+1");
  return s;
}

bool AAlphaClosedForm::quintic_consistent() const {
  return std::all_of(quintic_checks.begin(), quintic_checks.end(), [](const QuinticCheck& q) { return q.ok; }) &&
         max_route_gap <= 1e-6 && max_imaginary <= 1e-8;
}

Spectrum AAlphaClosedForm::predicted() const {
  Spectrum s = families;
  for (double x : quotient_roots) s.add(x, 1, EigenSource::quotient_root);
  return s;
}

Spectrum AAlphaClosedForm::predicted_from_quintic() const {
  Spectrum s = families;
  for (const auto& z : quintic_roots) s.add(z.real(), 1, EigenSource::quintic_root);
  return s;
}

AAlphaClosedForm a_alpha_closed_form(const GroupParams& params, AlphaParam alpha) {
  AAlphaClosedForm f;
  f.families = a_alpha_families(params, alpha);
  f.quotient_roots = sym_eigenvalues(a_alpha_class_quotient(params, alpha));

  const QuinticCoeffs poly = QuinticCoeffs::printed(params, alpha);
  f.quintic_roots = polynomial_roots(poly.c);
  for (const auto& z : f.quintic_roots) f.max_imaginary = std::max(f.max_imaginary, std::abs(z.imag()));
  for (std::size_t i = 0; i < f.quotient_roots.size() && i < f.quintic_roots.size(); ++i)
    f.max_route_gap = std::max(f.max_route_gap, std::abs(f.quotient_roots[i] - f.quintic_roots[i].real()));

  for (double x : f.quotient_roots) {
    QuinticCheck chk;
    chk.x = x;
    chk.residual = std::abs(poly(x));
    chk.scale = std::max(1.0, poly.magnitude(x));
    chk.ok = chk.residual <= 1e-4 * chk.scale;
    f.quintic_checks.push_back(chk);
  }
  return f;
}

DenseSymMatrix rd_alpha_printed_matrix(const GroupParams& params, AlphaParam alpha) {
  const Consts c = consts(params, alpha);
  const double a = c.a;
  const double b = c.b;
  const double r = std::sqrt(c.h);
  const double s33 = a * c.K + (c.h - 1) * b / 2;
  const double s34 = std::sqrt(c.h * c.h) * b / 2;
  const double y12 = std::sqrt(c.K - 2) * b;
  const double y34 = std::sqrt(c.h * (c.K - 2)) * b / 2;
  return DenseSymMatrix::from_rows({
      {a * (2 * c.K - 1), b, r * b, r * b, y12},
      {b, a * (7 * c.q - 1), r * b / 2, r * b, y12},
      {r * b, r * b / 2, s33, s34, y34},
      {r * b, r * b, s34, s33, y34},
      {y12, y12, y34, y34, a * (3 * c.h - 1) + (c.K - 3) * b},
  });
}

DenseSymMatrix rd_alpha_class_quotient(const GroupParams& params, AlphaParam alpha) {
  const Consts c = consts(params, alpha);
  const double a = c.a;
  const double b = c.b;
  const double K = c.K;
  const double h = c.h;
  const DenseMatrix q = DenseMatrix::from_rows({
      {a * K + b * (h - 1) / 2, b, b * (K - 2) / 2, b / 2, b * h / 2},
      {b * h, a * (2 * K - 1), b * (K - 2), b, b * h},
      {b * h / 2, b, a * (K - 1 + h) + b * (K - 3), b, b * h / 2},
      {b * h / 2, b, b * (K - 2), a * (K - 1 + 1.5 * h), b * h},
      {b * h / 2, b, b * (K - 2) / 2, b, a * (K + 1) + b * h / 2},
  });
  return symmetrize(q, class_weights(c));
}

Spectrum rd_alpha_families(const GroupParams& params, AlphaParam alpha) {
  const Consts c = consts(params, alpha);
  const int K = params.rotation_order();
  const auto q1 = static_cast<std::size_t>(K / 4 - 1);
  Spectrum s;
  s.add(c.a * (1 + c.K), q1, EigenSource::closed_family, "alpha(2^k*p+1)");
  s.add((c.K + 2) * c.a - 1, q1, EigenSource::closed_family, "(2^k*p+2)alpha-1");
  s.add(c.a * c.K - c.b / 2, static_cast<std::size_t>(K / 2 - 1), EigenSource::closed_family, "alpha*2^k*p-(1-alpha)/2");
  s.add((c.K + 1) * c.a - c.b, 1, EigenSource::closed_family, "(2^k*p+1)alpha-(1-alpha)");
  s.add(c.a * (3 * c.h - 1) - c.b, static_cast<std::size_t>(K - 3), EigenSource::closed_family,
        "alpha(3*2^(k-1)*p-1)-(1-alpha)");
  return s;
}

Spectrum RdAlphaClosedForm::predicted() const {
  Spectrum s = families;
  for (double x : printed_roots) s.add(x, 1, EigenSource::printed_matrix);
  return s;
}

Spectrum RdAlphaClosedForm::predicted_derived() const {
  Spectrum s = families;
  for (double x : derived_roots) s.add(x, 1, EigenSource::derived_quotient);
  return s;
}

RdAlphaClosedForm rd_alpha_closed_form(const GroupParams& params, AlphaParam alpha) {
  RdAlphaClosedForm f;
  f.families = rd_alpha_families(params, alpha);
  f.printed_roots = sym_eigenvalues(rd_alpha_printed_matrix(params, alpha));
  f.derived_roots = sym_eigenvalues(rd_alpha_class_quotient(params, alpha));
  for (std::size_t i = 0; i < f.printed_roots.size(); ++i)
    f.max_route_gap = std::max(f.max_route_gap, std::abs(f.printed_roots[i] - f.derived_roots[i]));
  return f;
}

}  // namespace pgspec
