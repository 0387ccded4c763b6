#include "pgspec/block_form.hpp"

#include <cmath>

#include "pgspec/eigen.hpp"

namespace pgspec {

namespace {

bool is_symmetric(const DenseMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

}  // namespace

void BlockForm::validate() const {
  if (copies == 0) throw DomainError("block form needs at least one copy");
  if (!is_symmetric(u)) throw DomainError("U must be square and symmetric");
  if (!is_symmetric(x)) throw DomainError("X must be square and symmetric");
  if (!is_symmetric(w)) throw DomainError("W must be square and symmetric");
  if (w.rows() != x.rows()) throw DomainError("W and X differ in size");
  if (v.rows() != u.rows() || v.cols() != x.rows()) throw DomainError("V must be m1 x m2");
}

DenseSymMatrix BlockForm::assemble() const {
  validate();
  const std::size_t m1 = border();
  const std::size_t m2 = block();
  DenseSymMatrix m(dimension());
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = i; j < m1; ++j) m.set(i, j, u(i, j));
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t off = m1 + c * m2;
    for (std::size_t i = 0; i < m1; ++i)
      for (std::size_t j = 0; j < m2; ++j) m.set(i, off + j, v(i, j));
    for (std::size_t d = c; d < copies; ++d) {
      const std::size_t off2 = m1 + d * m2;
      const DenseMatrix& blk = c == d ? x : w;
      for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < m2; ++j) {
          if (c == d && j < i) continue;
          m.set(off + i, off2 + j, blk(i, j));
        }
    }
  }
  return m;
}

DenseSymMatrix BlockForm::reduced() const {
  validate();
  const std::size_t m1 = border();
  const std::size_t m2 = block();
  const double root = std::sqrt(static_cast<double>(copies));
  const auto extra = static_cast<double>(copies - 1);
  DenseSymMatrix n(m1 + m2);
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = i; j < m1; ++j) n.set(i, j, u(i, j));
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < m2; ++j) n.set(i, m1 + j, root * v(i, j));
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = i; j < m2; ++j) n.set(m1 + i, m1 + j, x(i, j) + extra * w(i, j));
  return n;
}

DenseSymMatrix BlockForm::difference() const {
  validate();
  DenseSymMatrix d(block());
  for (std::size_t i = 0; i < block(); ++i)
    for (std::size_t j = i; j < block(); ++j) d.set(i, j, x(i, j) - w(i, j));
  return d;
}

Spectrum block_reduce(const BlockForm& form) {
  Spectrum s;
  for (double lambda : sym_eigenvalues(form.reduced())) s.add(lambda, 1, EigenSource::block_quotient);
  if (form.copies > 1) {
    for (double lambda : sym_eigenvalues(form.difference())) s.add(lambda, form.copies - 1, EigenSource::block_difference);
  }
  return s;
}

BlockForm random_block_form(std::mt19937_64& rng, const BlockLimits& limits) {
  std::uniform_int_distribution<std::size_t> border(1, limits.max_border);
  std::uniform_int_distribution<std::size_t> block(1, limits.max_block);
  std::uniform_int_distribution<std::size_t> copies(1, limits.max_copies);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  const std::size_t m1 = border(rng);
  const std::size_t m2 = block(rng);
  const auto symmetric = [&](std::size_t m) {
    DenseMatrix s(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) s(i, j) = s(j, i) = entry(rng);
    return s;
  };
  BlockForm f;
  f.u = symmetric(m1);
  f.v = DenseMatrix(m1, m2);
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < m2; ++j) f.v(i, j) = entry(rng);
  f.x = symmetric(m2);
  f.w = symmetric(m2);
  f.copies = copies(rng);
  return f;
}

}  // namespace pgspec
