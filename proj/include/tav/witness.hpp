#pragma once

// End-to-end witness pipeline: decompose a principal chain, and for every
// factor certify the twist data (image, isotropy) and the extended
// isogeny's conformal-symplectic identity.

#include <optional>
#include <vector>

#include "tav/cocycle.hpp"
#include "tav/decompose.hpp"
#include "tav/isogeny.hpp"

namespace tav {

enum class TwistOrderPolicy {
  kernel_exponent,  // per factor: n = exponent of the factor's kernel
  global_lcm,       // one n for all factors: lcm of all kernel exponents
};

const char* twist_order_policy_name(TwistOrderPolicy policy);

struct FactorWitness {
  IntMatrix factor;
  Int degree;
  FiniteAbelianGroup kernel;
  Int twist_order;
  AntisymTwist twist;
  bool image_matches_kernel = false;
  bool isotropic = false;
  bool conformal_symplectic = false;

  bool all_true() const {
    return image_matches_kernel && isotropic && conformal_symplectic;
  }
};

struct WitnessReport {
  InvariantFactorChain chain;
  DecompositionCertificate certificate;
  bool certificate_ok = false;
  TwistOrderPolicy policy = TwistOrderPolicy::kernel_exponent;
  std::optional<Int> prime;
  std::vector<FactorWitness> factors;
  bool all_verdicts_true = false;
};

WitnessReport run_witness_pipeline(
    const InvariantFactorChain& chain,
    TwistOrderPolicy policy = TwistOrderPolicy::kernel_exponent,
    const std::optional<Int>& prime = std::nullopt);

}  // namespace tav
