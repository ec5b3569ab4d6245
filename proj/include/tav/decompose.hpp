#pragma once

// Factoring a principal invariant-factor chain into a scalar multiplier N
// and integer matrices whose cokernels are all spectrally paired, plus an
// independent certificate checker.

#include <optional>
#include <vector>

#include "tav/smith.hpp"

namespace tav {

// Chain a_1 | a_2 | ... | a_{2g} of positive integers, g >= 2. Entries may
// equal 1; the perfect-square product requirement is checked where the
// chain is consumed.
class InvariantFactorChain {
 public:
  explicit InvariantFactorChain(std::vector<Int> entries);

  const std::vector<Int>& entries() const { return entries_; }
  Index genus() const { return static_cast<Index>(entries_.size()) / 2; }
  Int product() const;

  friend bool operator==(const InvariantFactorChain&, const InvariantFactorChain&) = default;

 private:
  std::vector<Int> entries_;
};

struct DecompositionCertificate {
  Int multiplier;                  // N
  std::vector<IntMatrix> factors;  // ordered; product = N * diag(chain)
  InvariantFactorChain chain;
};

// Errors: not_principal when the chain product is not a perfect square;
// genus_too_small for chains shorter than 4; not_coprime when `prime`
// divides the product. When `prime` is given, N and every factor
// determinant are coprime to it.
DecompositionCertificate decompose_principal_chain(
    const InvariantFactorChain& chain, const std::optional<Int>& prime = std::nullopt);

enum class CertificateStatus {
  ok,
  shape_mismatch,
  factor_singular,
  factor_not_paired,
  product_mismatch,
};

const char* certificate_status_name(CertificateStatus s);

struct CertificateCheck {
  CertificateStatus status = CertificateStatus::ok;
  bool ok() const { return status == CertificateStatus::ok; }
  explicit operator bool() const { return ok(); }
};

// Recomputes the ordered product and every factor's cokernel; never throws
// on a bad certificate, it reports a status instead.
CertificateCheck verify_decomposition(const DecompositionCertificate& cert);

}  // namespace tav
