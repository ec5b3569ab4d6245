#include "tav/cocycle.hpp"

namespace tav {

namespace {

constexpr long kMaxExplicitGroupOrder = 4096;

void check_entries_in_range(const IntMatrix& m, const Int& n) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      require(m(i, j) >= 0 && m(i, j) < n, errc::invalid_argument,
              "entries must lie in [0, n)");
}

void check_alternating(const IntMatrix& m, const Int& n) {
  require(m.rows() == m.cols(), errc::invalid_argument, "matrix must be square");
  IntMatrix sum = m + m.transpose();
  require(is_zero(reduce_mod(sum, n)), errc::invalid_argument,
          "matrix must be anti-symmetric mod n");
  for (Index i = 0; i < m.rows(); ++i)
    require(mod_floor(m(i, i), n).is_zero(), errc::invalid_argument,
            "diagonal must vanish mod n");
}

}  // namespace

AntisymTwist::AntisymTwist(Int modulus, Index genus, IntMatrix matrix)
    : n_(std::move(modulus)), genus_(genus), a_(std::move(matrix)) {
  require(n_ >= 1, errc::invalid_argument, "modulus must be positive");
  require(genus_ >= 1, errc::invalid_argument, "genus must be at least 1");
  require(a_.rows() == 2 * genus_ && a_.cols() == 2 * genus_, errc::invalid_argument,
          "twist matrix must be 2g x 2g");
  check_entries_in_range(a_, n_);
  check_alternating(a_, n_);
}

AlternatingForm::AlternatingForm(Int modulus, IntMatrix matrix)
    : n_(std::move(modulus)), e_(std::move(matrix)) {
  require(n_ >= 1, errc::invalid_argument, "modulus must be positive");
  check_entries_in_range(e_, n_);
  check_alternating(e_, n_);
}

BilinearCocycle::BilinearCocycle(Int modulus, IntMatrix matrix)
    : n_(std::move(modulus)), beta_(std::move(matrix)) {
  require(n_ >= 1, errc::invalid_argument, "modulus must be positive");
  require(beta_.rows() == beta_.cols(), errc::invalid_argument,
          "cocycle matrix must be square");
  check_entries_in_range(beta_, n_);
}

AntisymTwist antisym_with_image(const std::vector<Int>& targets, const Int& n,
                                Index genus) {
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  require(static_cast<Index>(targets.size()) <= genus, errc::invalid_argument,
          "more targets than genus allows");
  for (const auto& a : targets) {
    require(a >= 1, errc::invalid_argument, "targets must be positive");
    require(divides(a, n), errc::invalid_argument, "every target must divide n");
  }
  IntMatrix m = int_zero(2 * genus, 2 * genus);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Int scale = n / targets[i];
    const Index off = 2 * static_cast<Index>(i);
    m(off, off + 1) = mod_floor(scale, n);
    m(off + 1, off) = mod_floor(-scale, n);
  }
  return AntisymTwist(n, genus, std::move(m));
}

IntMatrix image_lattice_mod_n(const IntMatrix& a, const Int& n) {
  require(a.rows() == a.cols(), errc::invalid_argument, "matrix must be square");
  require(n >= 1, errc::invalid_argument, "modulus must be positive");
  const Index k = a.rows();
  IntMatrix wide(k, 2 * k);
  wide.block(0, 0, k, k) = a;
  wide.block(0, k, k, k) = int_identity(k) * n;
  return hermite_column_basis(wide);
}

FiniteAbelianGroup image_mod_n(const IntMatrix& a, const Int& n) {
  IntMatrix basis = image_lattice_mod_n(a, n);
  // (A Z^k + n Z^k) / n Z^k  ==  coker of the matrix X with basis * X = n I.
  RatMatrix x = inverse(to_rational(basis)) * Rat(n);
  ensure(is_integral(x), "n Z^k must sit inside the image lattice");
  return cokernel_of(to_integer(x));
}

AlternatingForm pairing_of_cocycle(const BilinearCocycle& c) {
  IntMatrix e = c.matrix() - c.matrix().transpose();
  return AlternatingForm(c.modulus(), reduce_mod(e, c.modulus()));
}

BilinearCocycle cocycle_from_pairing(const AlternatingForm& e) {
  const Index k = e.rank();
  IntMatrix beta = int_zero(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < i; ++j) beta(i, j) = e.matrix()(i, j);
  return BilinearCocycle(e.modulus(), std::move(beta));
}

CocycleTable::CocycleTable(Int modulus, Int m, Index k, std::vector<Int> values)
    : n_(std::move(modulus)), m_(std::move(m)), k_(k), values_(std::move(values)) {
  require(n_ >= 1, errc::invalid_argument, "modulus must be positive");
  require(m_ >= 1, errc::invalid_argument, "cyclic order must be positive");
  require(k_ >= 1, errc::invalid_argument, "rank must be at least 1");
  Int order = pow(m_, Int(k_));
  require(order <= Int(kMaxExplicitGroupOrder), errc::invalid_argument,
          "group too large for an exhaustive check");
  order_ = to_long(order);
  require(static_cast<long>(values_.size()) == order_ * order_, errc::invalid_argument,
          "table size mismatch");
}

CocycleTable CocycleTable::bilinear(const Int& modulus, const Int& m, Index k,
                                    const IntMatrix& beta) {
  require(beta.rows() == k && beta.cols() == k, errc::invalid_argument,
          "bilinear matrix must be k x k");
  CocycleTable table(modulus, m, k,
                     std::vector<Int>(static_cast<std::size_t>(to_long(pow(m, Int(k)))) *
                                          static_cast<std::size_t>(to_long(pow(m, Int(k)))),
                                      Int(0)));
  for (long s = 0; s < table.order_; ++s) {
    const auto sd = table.element(s);
    for (long t = 0; t < table.order_; ++t) {
      const auto td = table.element(t);
      Int v = 0;
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
          v += Int(sd[static_cast<std::size_t>(i)]) * beta(i, j) *
               Int(td[static_cast<std::size_t>(j)]);
      table.value(s, t) = mod_floor(v, modulus);
    }
  }
  return table;
}

const Int& CocycleTable::value(long s, long t) const {
  return values_[static_cast<std::size_t>(s * order_ + t)];
}

Int& CocycleTable::value(long s, long t) {
  return values_[static_cast<std::size_t>(s * order_ + t)];
}

std::vector<long> CocycleTable::element(long index) const {
  const long m = to_long(m_);
  std::vector<long> digits(static_cast<std::size_t>(k_));
  for (Index i = k_ - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = index % m;
    index /= m;
  }
  return digits;
}

long CocycleTable::add(long s, long t) const {
  // componentwise addition mod m, digit arithmetic only
  const long m = to_long(m_);
  long result = 0;
  long base = 1;
  for (Index i = 0; i < k_; ++i) {
    result += ((s % m + t % m) % m) * base;
    s /= m;
    t /= m;
    base *= m;
  }
  return result;
}

bool verify_cocycle_table(const CocycleTable& table) {
  const long order = table.group_order();
  const Int& n = table.modulus();

  for (long s = 0; s < order; ++s) {
    if (!mod_floor(table.value(0, s), n).is_zero()) return false;
    if (!mod_floor(table.value(s, 0), n).is_zero()) return false;
  }

  std::vector<long> sums(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (long s = 0; s < order; ++s)
    for (long t = 0; t < order; ++t)
      sums[static_cast<std::size_t>(s * order + t)] = table.add(s, t);

  // The triple scan runs in machine words whenever the modulus allows it.
  if (n <= Int(1L << 30)) {
    const long nn = to_long(n);
    std::vector<long> reduced(sums.size());
    for (long s = 0; s < order; ++s)
      for (long t = 0; t < order; ++t)
        reduced[static_cast<std::size_t>(s * order + t)] =
            to_long(mod_floor(table.value(s, t), n));
    for (long s1 = 0; s1 < order; ++s1)
      for (long s2 = 0; s2 < order; ++s2) {
        const long s12 = sums[static_cast<std::size_t>(s1 * order + s2)];
        const long a12 = reduced[static_cast<std::size_t>(s1 * order + s2)];
        for (long s3 = 0; s3 < order; ++s3) {
          const long s23 = sums[static_cast<std::size_t>(s2 * order + s3)];
          const long lhs = a12 + reduced[static_cast<std::size_t>(s12 * order + s3)];
          const long rhs = reduced[static_cast<std::size_t>(s2 * order + s3)] +
                           reduced[static_cast<std::size_t>(s1 * order + s23)];
          if ((lhs - rhs) % nn != 0) return false;
        }
      }
    return true;
  }

  for (long s1 = 0; s1 < order; ++s1)
    for (long s2 = 0; s2 < order; ++s2) {
      const long s12 = sums[static_cast<std::size_t>(s1 * order + s2)];
      for (long s3 = 0; s3 < order; ++s3) {
        Int lhs = table.value(s1, s2) + table.value(s12, s3);
        Int rhs = table.value(s2, s3) +
                  table.value(s1, sums[static_cast<std::size_t>(s2 * order + s3)]);
        if (!mod_floor(lhs - rhs, n).is_zero()) return false;
      }
    }
  return true;
}

bool isotropy_check(const IntMatrix& a, const Int& n) {
  if (a.rows() != a.cols()) return false;
  IntMatrix sum = a + a.transpose();
  return is_zero(reduce_mod(sum, n));
}

bool isotropy_check(const AntisymTwist& twist) {
  return isotropy_check(twist.matrix(), twist.modulus());
}

}  // namespace tav
