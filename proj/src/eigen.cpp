#include "pgspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pgspec {

SymEigen sym_eigen(const DenseSymMatrix& m, double tol, int max_sweeps) {
  if (!(tol > 0.0)) throw DomainError("eigensolver tolerance must be positive");
  const std::size_t n = m.size();
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  DenseMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double norm = m.frobenius_norm();
  int sweep = 0;
  for (;; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    off = std::sqrt(off);
    if (off <= tol * norm || off == 0.0) break;
    if (sweep >= max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return at(i, i) > at(j, j); });
  SymEigen out;
  out.sweeps = sweep;
  out.values.reserve(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values.push_back(at(order[col], order[col]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = v(r, order[col]);
  }
  return out;
}

std::vector<double> sym_eigenvalues(const DenseSymMatrix& m, double tol, int max_sweeps) {
  return sym_eigen(m, tol, max_sweeps).values;
}

double reconstruction_residual(const DenseSymMatrix& m, const SymEigen& eig) {
  const std::size_t n = m.size();
  double diff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double r = 0.0;
      for (std::size_t k = 0; k < n; ++k) r += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
      diff += (m(i, j) - r) * (m(i, j) - r);
    }
  }
  const double norm = m.frobenius_norm();
  return norm == 0.0 ? std::sqrt(diff) : std::sqrt(diff) / norm;
}

namespace {

// 1-based square work array, matching the classical EISPACK formulation.
class Work {
 public:
  explicit Work(std::size_t n) : n_(n), a_((n + 1) * (n + 1), 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a_[i * (n_ + 1) + j]; }
  std::size_t n() const { return n_; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

void balance(Work& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const std::size_t n = a.n();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 1; i <= n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      }
      if (c != 0.0 && r != 0.0) {
        double g = r / radix;
        double f = 1.0;
        const double s = c + r;
        while (c < g) {
          f *= radix;
          c *= sqrdx;
        }
        g = r * radix;
        while (c > g) {
          f /= radix;
          c /= sqrdx;
        }
        if ((c + r) / f < 0.95 * s) {
          done = false;
          g = 1.0 / f;
          for (std::size_t j = 1; j <= n; ++j) a(i, j) *= g;
          for (std::size_t j = 1; j <= n; ++j) a(j, i) *= f;
        }
      }
    }
  }
}

// Reduction to upper Hessenberg form by stabilised elementary similarities.
void hessenberg(Work& a) {
  const std::size_t n = a.n();
  for (std::size_t m = 2; m < n; ++m) {
    double x = 0.0;
    std::size_t i = m;
    for (std::size_t j = m; j <= n; ++j) {
      if (std::abs(a(j, m - 1)) > std::abs(x)) {
        x = a(j, m - 1);
        i = j;
      }
    }
    if (i != m) {
      for (std::size_t j = m - 1; j <= n; ++j) std::swap(a(i, j), a(m, j));
      for (std::size_t j = 1; j <= n; ++j) std::swap(a(j, i), a(j, m));
    }
    if (x != 0.0) {
      for (i = m + 1; i <= n; ++i) {
        double y = a(i, m - 1);
        if (y != 0.0) {
          y /= x;
          a(i, m - 1) = y;
          for (std::size_t j = m; j <= n; ++j) a(i, j) -= y * a(m, j);
          for (std::size_t j = 1; j <= n; ++j) a(j, m) += y * a(j, i);
        }
      }
    }
  }
  for (std::size_t i = 3; i <= n; ++i)
    for (std::size_t j = 1; j + 1 < i; ++j) a(i, j) = 0.0;
}

// Francis double-shift QR on an upper Hessenberg matrix.
std::vector<std::complex<double>> hessenberg_qr(Work& a) {
  const int n = static_cast<int>(a.n());
  std::vector<double> wr(static_cast<std::size_t>(n) + 1), wi(static_cast<std::size_t>(n) + 1);
  auto A = [&](int i, int j) -> double& { return a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(A(i, j));

  int nn = n;
  double t = 0.0;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        s = std::abs(A(l - 1, l - 1)) + std::abs(A(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(A(l, l - 1)) + s == s) {
          A(l, l - 1) = 0.0;
          break;
        }
      }
      x = A(nn, nn);
      if (l == nn) {
        wr[static_cast<std::size_t>(nn)] = x + t;
        wi[static_cast<std::size_t>(nn)] = 0.0;
        --nn;
      } else {
        y = A(nn - 1, nn - 1);
        w = A(nn, nn - 1) * A(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          const auto hi = static_cast<std::size_t>(nn);
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[hi - 1] = wr[hi] = x + z;
            if (z != 0.0) wr[hi] = x - w / z;
            wi[hi - 1] = wi[hi] = 0.0;
          } else {
            wr[hi - 1] = wr[hi] = x + p;
            wi[hi - 1] = -z;
            wi[hi] = z;
          }
          nn -= 2;
        } else {
          if (its == 60) throw ConvergenceError("Hessenberg QR did not converge");
          if (its == 10 || its == 20) {  // exceptional shift
            t += x;
            for (int i = 1; i <= nn; ++i) A(i, i) -= x;
            s = std::abs(A(nn, nn - 1)) + std::abs(A(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = A(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / A(m + 1, m) + A(m, m + 1);
            q = A(m + 1, m + 1) - z - r - s;
            r = A(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(A(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(A(m - 1, m - 1)) + std::abs(z) + std::abs(A(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            A(i, i - 2) = 0.0;
            if (i != m + 2) A(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = A(k, k - 1);
              q = A(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = A(k + 2, k - 1);
              if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            if ((s = sign_of(std::sqrt(p * p + q * q + r * r), p)) != 0.0) {
              if (k == m) {
                if (l != m) A(k, k - 1) = -A(k, k - 1);
              } else {
                A(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = A(k, j) + q * A(k + 1, j);
                if (k != nn - 1) {
                  p += r * A(k + 2, j);
                  A(k + 2, j) -= p * z;
                }
                A(k + 1, j) -= p * y;
                A(k, j) -= p * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                p = x * A(i, k) + y * A(i, k + 1);
                if (k != nn - 1) {
                  p += z * A(i, k + 2);
                  A(i, k + 2) -= p * r;
                }
                A(i, k + 1) -= p * q;
                A(i, k) -= p;
              }
            }
          }
        }
      }
    } while (l < nn - 1);
  }

  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.emplace_back(wr[static_cast<std::size_t>(i)], wi[static_cast<std::size_t>(i)]);
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) {
    return u.real() != v.real() ? u.real() > v.real() : u.imag() > v.imag();
  });
  return out;
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(std::span<const double> coeffs) {
  if (coeffs.empty() || coeffs[0] == 0.0) throw DomainError("leading polynomial coefficient must be non-zero");
  const std::size_t d = coeffs.size() - 1;
  if (d == 0) return {};
  Work a(d);
  for (std::size_t j = 1; j <= d; ++j) a(1, j) = -coeffs[j] / coeffs[0];
  for (std::size_t i = 2; i <= d; ++i) a(i, i - 1) = 1.0;
  balance(a);
  return hessenberg_qr(a);
}

std::vector<std::complex<double>> general_eigenvalues(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  Work a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i + 1, j + 1) = m(i, j);
  balance(a);
  hessenberg(a);
  return hessenberg_qr(a);
}

}  // namespace pgspec
