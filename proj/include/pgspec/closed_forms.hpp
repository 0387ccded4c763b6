#pragma once

#include <array>
#include <complex>
#include <vector>

#include "pgspec/graph_matrices.hpp"
#include "pgspec/group.hpp"
#include "pgspec/matrix.hpp"
#include "pgspec/spectrum.hpp"

namespace pgspec {

/// Monic quintic P(x) = c5 x^5 + ... + c0 with coefficients polynomial in
/// (k, p, alpha), transcribed term by term.
struct QuinticCoeffs {
  std::array<double, 6> c{};  // c[0] = c5, ..., c[5] = c0

  static QuinticCoeffs printed(const GroupParams& params, AlphaParam alpha);

  double operator()(double x) const;
  /// Sum of |c_i x^i|; the natural scale for judging |P(x)|.
  double magnitude(double x) const;
};

/// (q + 4) x (q + 4) coefficient system for the H2 / e / T2 / u / H3-pair
/// unknowns of the A_alpha eigenvector equation, with q = 2^{k-2} p.
DenseMatrix a_alpha_coefficient_system(const GroupParams& params, AlphaParam alpha);

/// Symmetrized 5 x 5 quotient over the classes (H2, e, T2, u, H3) with
/// weights (h, 1, 2^k p - 2, 1, h), h = 2^{k-1} p.
DenseSymMatrix a_alpha_class_quotient(const GroupParams& params, AlphaParam alpha);

/// The four closed families (value, multiplicity).
Spectrum a_alpha_families(const GroupParams& params, AlphaParam alpha);

struct QuinticCheck {
  double x = 0.0;
  double residual = 0.0;  // |P(x)|
  double scale = 1.0;     // max(1, magnitude(x))
  bool ok = false;        // residual <= 1e-4 * scale
};

struct AAlphaClosedForm {
  Spectrum families;
  std::vector<double> quotient_roots;                 // descending
  std::vector<std::complex<double>> quintic_roots;    // by real part, descending
  std::vector<QuinticCheck> quintic_checks;           // P at each quotient root
  double max_route_gap = 0.0;                         // quintic vs quotient roots
  double max_imaginary = 0.0;

  bool quintic_consistent() const;
  /// Families plus quotient roots.
  Spectrum predicted() const;
  /// Families plus real parts of the quintic roots.
  Spectrum predicted_from_quintic() const;
};

AAlphaClosedForm a_alpha_closed_form(const GroupParams& params, AlphaParam alpha);

/// 5 x 5 matrix X = [[S, Y], [Y^T, x55]] with S and Y entered as printed.
DenseSymMatrix rd_alpha_printed_matrix(const GroupParams& params, AlphaParam alpha);

/// Symmetrized 5 x 5 RD_alpha quotient over (H2, e, T2, u, H3), derived from
/// the distance structure (every pair at distance 1 or 2).
DenseSymMatrix rd_alpha_class_quotient(const GroupParams& params, AlphaParam alpha);

/// The five closed families (value, multiplicity).
Spectrum rd_alpha_families(const GroupParams& params, AlphaParam alpha);

struct RdAlphaClosedForm {
  Spectrum families;
  std::vector<double> printed_roots;  // eigenvalues of the printed X
  std::vector<double> derived_roots;  // eigenvalues of the derived quotient
  double max_route_gap = 0.0;

  /// Families plus eigenvalues of the printed X.
  Spectrum predicted() const;
  /// Families plus eigenvalues of the derived quotient.
  Spectrum predicted_derived() const;
};

RdAlphaClosedForm rd_alpha_closed_form(const GroupParams& params, AlphaParam alpha);

}  // namespace pgspec
