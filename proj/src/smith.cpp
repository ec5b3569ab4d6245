#include "tav/smith.hpp"

#include <sstream>

namespace tav {

namespace {

// One full pass of row/column gcd elimination at pivot t. Returns once the
// pivot row and column are clear outside the pivot itself.
void clear_cross(IntMatrix& a, IntMatrix& u, IntMatrix& v, Index t) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  bool clean = false;
  while (!clean) {
    clean = true;
    for (Index i = t + 1; i < rows; ++i) {
      if (a(i, t).is_zero()) continue;
      Int q = a(i, t) / a(t, t);
      if (!q.is_zero()) {
        a.row(i) -= a.row(t) * q;
        u.row(i) -= u.row(t) * q;
      }
      if (!a(i, t).is_zero()) {
        // Remainder step of the gcd loop: smaller value becomes the pivot.
        a.row(t).swap(a.row(i));
        u.row(t).swap(u.row(i));
        clean = false;
      }
    }
    for (Index j = t + 1; j < cols; ++j) {
      if (a(t, j).is_zero()) continue;
      Int q = a(t, j) / a(t, t);
      if (!q.is_zero()) {
        a.col(j) -= a.col(t) * q;
        v.col(j) -= v.col(t) * q;
      }
      if (!a(t, j).is_zero()) {
        a.col(t).swap(a.col(j));
        v.col(t).swap(v.col(j));
        clean = false;
      }
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a0) {
  const Index rows = a0.rows();
  const Index cols = a0.cols();
  IntMatrix a = a0;
  IntMatrix u = int_identity(rows);
  IntMatrix v = int_identity(cols);
  const Index steps = std::min(rows, cols);

  for (Index t = 0; t < steps; ++t) {
    // Smallest-magnitude nonzero entry of the trailing block becomes pivot.
    Index pi = -1, pj = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j) {
        if (a(i, j).is_zero()) continue;
        if (pi < 0 || abs(a(i, j)) < abs(a(pi, pj))) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    if (pi != t) { a.row(t).swap(a.row(pi)); u.row(t).swap(u.row(pi)); }
    if (pj != t) { a.col(t).swap(a.col(pj)); v.col(t).swap(v.col(pj)); }

    for (;;) {
      clear_cross(a, u, v, t);
      // The pivot must divide every entry of the trailing block so that the
      // diagonal forms a divisibility chain.
      Index bi = -1;
      for (Index i = t + 1; i < rows && bi < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (!(a(i, j) % a(t, t)).is_zero()) { bi = i; break; }
      if (bi < 0) break;
      a.row(t) += a.row(bi);
      u.row(t) += u.row(bi);
    }

    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
    }
  }

  SmithDecomposition result;
  result.U = std::move(u);
  result.D = std::move(a);
  result.V = std::move(v);
  result.source_rows = rows;
  result.source_cols = cols;
  return result;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> chain) {
  for (auto& d : chain) {
    require(d >= 1, errc::invalid_argument, "invariant factors must be positive");
    if (d == 1) continue;
    if (!factors_.empty())
      require(divides(factors_.back(), d), errc::invalid_argument,
              "invariant factors must form a divisibility chain");
    factors_.push_back(d);
  }
}

Int FiniteAbelianGroup::order() const {
  Int n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Int FiniteAbelianGroup::exponent() const {
  return factors_.empty() ? Int(1) : factors_.back();
}

bool FiniteAbelianGroup::spectrally_paired() const {
  if (factors_.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < factors_.size(); i += 2)
    if (!(factors_[i] == factors_[i + 1])) return false;
  return true;
}

std::vector<Int> FiniteAbelianGroup::paired_targets() const {
  require(spectrally_paired(), errc::invalid_argument,
          "group is not spectrally paired");
  std::vector<Int> targets;
  for (std::size_t i = 1; i < factors_.size(); i += 2) targets.push_back(factors_[i]);
  return targets;
}

FiniteAbelianGroup cokernel_of(const IntMatrix& a) {
  require(a.rows() == a.cols(), errc::invalid_argument,
          "cokernel of non-square matrix");
  require(!determinant(a).is_zero(), errc::singular_matrix,
          "cokernel of singular matrix is infinite");
  return FiniteAbelianGroup(smith_normal_form(a).diagonal());
}

FiniteAbelianGroup group_from_orders(const std::vector<Int>& orders) {
  for (const auto& m : orders)
    require(m >= 1, errc::invalid_argument, "cyclic orders must be positive");
  if (orders.empty()) return FiniteAbelianGroup();
  return cokernel_of(diagonal_matrix(orders));
}

std::string to_string(const FiniteAbelianGroup& g) {
  std::ostringstream os;
  os << "(";
  const auto& f = g.invariant_factors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ", ";
    os << f[i];
  }
  os << ")";
  return os.str();
}

}  // namespace tav
