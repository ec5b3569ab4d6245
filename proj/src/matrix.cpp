#include "tav/matrix.hpp"

#include <sstream>
#include <utility>

namespace tav {

IntMatrix int_identity(Index n) { return IntMatrix::Identity(n, n); }

IntMatrix int_zero(Index rows, Index cols) { return IntMatrix::Zero(rows, cols); }

IntMatrix diagonal_matrix(const std::vector<Int>& entries) {
  const Index n = static_cast<Index>(entries.size());
  IntMatrix d = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = entries[static_cast<std::size_t>(i)];
  return d;
}

std::vector<Int> diagonal_of(const IntMatrix& a) {
  std::vector<Int> out;
  const Index n = std::min(a.rows(), a.cols());
  out.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out.push_back(a(i, i));
  return out;
}

template <typename M>
static bool equal_impl(const M& a, const M& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

bool equal(const IntMatrix& a, const IntMatrix& b) { return equal_impl(a, b); }
bool equal(const RatMatrix& a, const RatMatrix& b) { return equal_impl(a, b); }

bool is_zero(const IntMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

bool is_zero(const RatMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

bool is_identity(const IntMatrix& a) {
  return a.rows() == a.cols() && equal(a, int_identity(a.rows()));
}

bool is_diagonal(const IntMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (i != j && !a(i, j).is_zero()) return false;
  return true;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
  return r;
}

bool is_integral(const RatMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_integer()) return false;
  return true;
}

IntMatrix to_integer(const RatMatrix& a) {
  require(is_integral(a), errc::invalid_argument, "matrix has non-integral entries");
  IntMatrix r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).numerator();
  return r;
}

Int determinant(const IntMatrix& a) {
  require(a.rows() == a.cols(), errc::invalid_argument,
          "determinant of non-square matrix");
  const Index n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Index pivot = -1;
      for (Index i = k + 1; i < n; ++i)
        if (!m(i, k).is_zero()) { pivot = i; break; }
      if (pivot < 0) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  Int det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

Rat determinant(const RatMatrix& a) {
  require(a.rows() == a.cols(), errc::invalid_argument,
          "determinant of non-square matrix");
  const Index n = a.rows();
  RatMatrix m = a;
  Rat det = 1;
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index i = k; i < n; ++i)
      if (!m(i, k).is_zero()) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Rat f = m(i, k) / m(k, k);
      m.row(i) -= m.row(k) * f;
    }
  }
  return det;
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return abs(determinant(a)) == Int(1);
}

RatMatrix inverse(const RatMatrix& a) {
  require(a.rows() == a.cols(), errc::invalid_argument, "inverse of non-square matrix");
  const Index n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index i = k; i < n; ++i)
      if (!m(i, k).is_zero()) { pivot = i; break; }
    require(pivot >= 0, errc::singular_matrix, "matrix is singular");
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    Rat d = m(k, k);
    for (Index j = 0; j < n; ++j) {
      m(k, j) /= d;
      inv(k, j) /= d;
    }
    for (Index i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      Rat f = m(i, k);
      m.row(i) -= m.row(k) * f;
      inv.row(i) -= inv.row(k) * f;
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  require(is_unimodular(a), errc::invalid_argument,
          "inverse requested for a non-unimodular matrix");
  return to_integer(inverse(to_rational(a)));
}

IntMatrix reduce_mod(const IntMatrix& a, const Int& n) {
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  IntMatrix r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = mod_floor(a(i, j), n);
  return r;
}

bool congruent_mod(const IntMatrix& a, const IntMatrix& b, const Int& n) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return equal(reduce_mod(a, n), reduce_mod(b, n));
}

IntMatrix hermite_column_basis(const IntMatrix& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  IntMatrix h = a;
  for (Index row = 0; row < rows; ++row) {
    const Index col = row;
    require(col < cols, errc::invalid_argument, "lattice basis is rank deficient");
    // Gather gcd of the remaining entries in this row into the pivot column.
    for (;;) {
      Index best = -1;
      for (Index j = col; j < cols; ++j) {
        if (h(row, j).is_zero()) continue;
        if (best < 0 || abs(h(row, j)) < abs(h(row, best))) best = j;
      }
      require(best >= 0, errc::invalid_argument, "lattice basis is rank deficient");
      if (best != col) h.col(col).swap(h.col(best));
      bool done = true;
      for (Index j = col + 1; j < cols; ++j) {
        if (h(row, j).is_zero()) continue;
        Int q = h(row, j) / h(row, col);
        if (!q.is_zero()) h.col(j) -= h.col(col) * q;
        if (!h(row, j).is_zero()) done = false;
      }
      if (done) break;
    }
    if (h(row, col) < 0) h.col(col) = -h.col(col);
    for (Index j = 0; j < col; ++j) {
      Int q = floor_div(h(row, j), h(row, col));
      if (!q.is_zero()) h.col(j) -= h.col(col) * q;
    }
  }
  return h.leftCols(rows);
}

namespace detail {

std::vector<std::vector<Index>> index_combinations(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> current(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  if (k > n) return out;
  for (;;) {
    out.push_back(current);
    Index i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j)
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace detail

IntMatrix exterior_power(const IntMatrix& a, Index k) {
  require(a.rows() == a.cols(), errc::invalid_argument,
          "exterior power of non-square matrix");
  const Index r = a.rows();
  require(k >= 0 && k <= r, errc::invalid_argument, "exterior power index out of range");
  const auto sets = detail::index_combinations(r, k);
  const Index dim = static_cast<Index>(sets.size());
  IntMatrix result(dim, dim);
  IntMatrix minor(k, k);
  for (Index bi = 0; bi < dim; ++bi) {
    for (Index bj = 0; bj < dim; ++bj) {
      const auto& rows = sets[static_cast<std::size_t>(bi)];
      const auto& cols = sets[static_cast<std::size_t>(bj)];
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
          minor(i, j) = a(rows[static_cast<std::size_t>(i)],
                          cols[static_cast<std::size_t>(j)]);
      result(bi, bj) = determinant(minor);
    }
  }
  return result;
}

template <typename M>
static std::string to_string_impl(const M& a) {
  std::ostringstream os;
  os << "[";
  for (Index i = 0; i < a.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      os << a(i, j);
    }
    os << "]";
    if (i + 1 < a.rows()) os << ",";
  }
  os << "]";
  return os.str();
}

std::string to_string(const IntMatrix& a) { return to_string_impl(a); }
std::string to_string(const RatMatrix& a) { return to_string_impl(a); }

}  // namespace tav
