#pragma once

#include <stdexcept>
#include <string>

namespace tav {

// Failure taxonomy. Everything except `internal` reports bad input or an
// unsatisfiable request; `internal` means a library invariant broke.
enum class errc {
  invalid_argument,
  singular_matrix,
  not_annihilated_by_n,
  not_principal,
  genus_too_small,
  not_coprime,
  not_isotropic,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::singular_matrix: return "singular_matrix";
    case errc::not_annihilated_by_n: return "not_annihilated_by_n";
    case errc::not_principal: return "not_principal";
    case errc::genus_too_small: return "genus_too_small";
    case errc::not_coprime: return "not_coprime";
    case errc::not_isotropic: return "not_isotropic";
    case errc::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, errc code, const std::string& message) {
  if (!ok) fail(code, message);
}

// Internal invariants; a violation is a bug, not a caller error.
inline void ensure(bool ok, const std::string& what) {
  if (!ok) fail(errc::internal, "internal invariant violated: " + what);
}

}  // namespace tav
