#include "tav/decompose.hpp"

namespace tav {

namespace {

void push_nontrivial(std::vector<IntMatrix>& out, IntMatrix f) {
  if (!is_identity(f)) out.push_back(std::move(f));
}

IntMatrix diag4(const Int& a, const Int& b, const Int& c, const Int& d) {
  return diagonal_matrix({a, b, c, d});
}

// diag(1,1,1,x^2) = (1/x) * F1 * F2 * F3 with every F_i having cokernel
// (Z/x)^2. Stated with the square in the last coordinate; other positions
// are reached by conjugating with the transposition (pos, 3), which keeps
// every factor diagonal.
std::vector<IntMatrix> x_square_split(Index pos, const Int& x) {
  auto swapped = [pos](Index i) -> Index {
    if (i == pos) return 3;
    if (i == 3) return pos;
    return i;
  };
  const Index patterns[3][2] = {{2, 3}, {1, 3}, {0, 3}};
  std::vector<IntMatrix> out;
  for (const auto& pattern : patterns) {
    IntMatrix f = int_identity(4);
    f(swapped(pattern[0]), swapped(pattern[0])) = x;
    f(swapped(pattern[1]), swapped(pattern[1])) = x;
    out.push_back(std::move(f));
  }
  return out;
}

// Genus-2 base case: diag(a) = d1*I * diag(1,1,d2*d3,d2*d3) * diag(1,d2,1,d4),
// then diag(1,d2,1,d4) = diag(1,d,1,d) * diag(1,alpha^2,1,1) * diag(1,1,1,beta^2)
// with d = gcd(d2,d4), and each square factor split three ways, each split
// costing a multiplier of alpha resp. beta.
void decompose_base(const std::vector<Int>& a, Int& multiplier,
                    std::vector<IntMatrix>& out) {
  const Int d1 = a[0];
  const Int d2 = a[1] / a[0];
  const Int d3 = a[2] / a[1];
  const Int d4 = a[3] / a[2];

  push_nontrivial(out, IntMatrix(int_identity(4) * d1));
  push_nontrivial(out, diag4(1, 1, d2 * d3, d2 * d3));

  const Int d = gcd(d2, d4);
  auto alpha = sqrt_exact(d2 / d);
  auto beta = sqrt_exact(d4 / d);
  ensure(alpha && beta, "square chain must leave square cofactors after gcd");

  push_nontrivial(out, diag4(1, d, 1, d));
  if (*alpha > 1) {
    for (auto& f : x_square_split(1, *alpha)) out.push_back(std::move(f));
    multiplier *= *alpha;
  }
  if (*beta > 1) {
    for (auto& f : x_square_split(3, *beta)) out.push_back(std::move(f));
    multiplier *= *beta;
  }
}

IntMatrix embed_top_left(const IntMatrix& f, Index dim) {
  IntMatrix out = int_identity(dim);
  out.block(0, 0, f.rows(), f.cols()) = f;
  return out;
}

// diag(a_1,...,a_{2g}) = (1/d) * blockdiag(diag(b), I_2)
//                             * blockdiag(I_{2g-2}, diag(a_{2g}, a_{2g}))
//                             * diag(1,...,1, d, 1, d)
// with d = a_{2g}/a_{2g-1} and b = (a_1 d, ..., a_{2g-3} d, a_{2g-2}).
// b need not be a divisibility chain, so it is renormalized through its
// Smith form before recursing; the unimodular transforms are absorbed into
// the first and last factors of the sub-decomposition, which leaves every
// cokernel untouched.
void decompose_rec(const std::vector<Int>& a, Int& multiplier,
                   std::vector<IntMatrix>& out) {
  Int product = 1;
  for (const auto& e : a) product *= e;
  ensure(is_perfect_square(product), "sub-chain product must stay a perfect square");

  const Index dim = static_cast<Index>(a.size());
  if (dim == 4) {
    decompose_base(a, multiplier, out);
    return;
  }

  const std::size_t n = a.size();
  const Int d = a[n - 1] / a[n - 2];

  std::vector<Int> b(n - 2);
  for (std::size_t i = 0; i + 1 < n - 2; ++i) b[i] = a[i] * d;
  b[n - 3] = a[n - 3];

  auto snf = smith_normal_form(diagonal_matrix(b));
  std::vector<Int> c = snf.diagonal();

  std::vector<IntMatrix> sub;
  decompose_rec(c, multiplier, sub);
  if (!sub.empty()) {
    // diag(b) = U^{-1} diag(c) V^{-1}
    sub.front() = unimodular_inverse(snf.U) * sub.front();
    sub.back() = sub.back() * unimodular_inverse(snf.V);
  } else {
    ensure(is_identity(diagonal_matrix(b)), "empty sub-decomposition forces a trivial block");
  }

  for (const auto& f : sub) out.push_back(embed_top_left(f, dim));

  IntMatrix pair_factor = int_identity(dim);
  pair_factor(dim - 2, dim - 2) = a[n - 1];
  pair_factor(dim - 1, dim - 1) = a[n - 1];
  push_nontrivial(out, std::move(pair_factor));

  IntMatrix tail_factor = int_identity(dim);
  tail_factor(dim - 3, dim - 3) = d;
  tail_factor(dim - 1, dim - 1) = d;
  push_nontrivial(out, std::move(tail_factor));

  multiplier *= d;
}

}  // namespace

InvariantFactorChain::InvariantFactorChain(std::vector<Int> entries)
    : entries_(std::move(entries)) {
  require(entries_.size() >= 4 && entries_.size() % 2 == 0, errc::genus_too_small,
          "chain must have even length at least 4");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    require(entries_[i] >= 1, errc::invalid_argument, "chain entries must be positive");
    if (i > 0)
      require(divides(entries_[i - 1], entries_[i]), errc::invalid_argument,
              "chain entries must form a divisibility chain");
  }
}

Int InvariantFactorChain::product() const {
  Int p = 1;
  for (const auto& e : entries_) p *= e;
  return p;
}

DecompositionCertificate decompose_principal_chain(const InvariantFactorChain& chain,
                                                   const std::optional<Int>& prime) {
  require(chain.genus() >= 2, errc::genus_too_small,
          "decomposition requires genus at least 2");
  const Int product = chain.product();
  require(is_perfect_square(product), errc::not_principal,
          "chain product is not a perfect square");
  if (prime) {
    require(*prime >= 2, errc::invalid_argument, "prime must be at least 2");
    require(gcd(product, *prime) == 1, errc::not_coprime,
            "chain product is not coprime to the given prime");
  }

  DecompositionCertificate cert{Int(1), {}, chain};
  decompose_rec(chain.entries(), cert.multiplier, cert.factors);

  if (prime) {
    ensure(gcd(cert.multiplier, *prime) == 1, "multiplier must stay coprime to p");
    for (const auto& f : cert.factors)
      ensure(gcd(determinant(f), *prime) == 1, "factor determinants must stay coprime to p");
  }
  return cert;
}

const char* certificate_status_name(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::ok: return "ok";
    case CertificateStatus::shape_mismatch: return "shape_mismatch";
    case CertificateStatus::factor_singular: return "factor_singular";
    case CertificateStatus::factor_not_paired: return "factor_not_paired";
    case CertificateStatus::product_mismatch: return "product_mismatch";
  }
  return "unknown";
}

CertificateCheck verify_decomposition(const DecompositionCertificate& cert) {
  const Index dim = 2 * cert.chain.genus();
  for (const auto& f : cert.factors)
    if (f.rows() != dim || f.cols() != dim)
      return CertificateCheck{CertificateStatus::shape_mismatch};

  for (const auto& f : cert.factors) {
    if (determinant(f).is_zero())
      return CertificateCheck{CertificateStatus::factor_singular};
    if (!cokernel_of(f).spectrally_paired())
      return CertificateCheck{CertificateStatus::factor_not_paired};
  }

  IntMatrix product = int_identity(dim);
  for (const auto& f : cert.factors) product = product * f;
  IntMatrix expected = diagonal_matrix(cert.chain.entries()) * cert.multiplier;
  if (!equal(product, expected))
    return CertificateCheck{CertificateStatus::product_mismatch};

  return CertificateCheck{CertificateStatus::ok};
}

}  // namespace tav
