#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polecover {

enum class ErrorCode {
  InvalidInput,
  NotALattice,
  GroupTooLarge,
  NotGenerating,
  InvalidMarks,
  InvalidSpec,
  InternalInconsistency,
  UncertifiableBase,
  NotAQuotientOrder,
  NotSymplectic,
  InadmissibleSignature,
  BoundNotApplicable,
  NonZeroResidue,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto its exit-status contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throws InternalInconsistency when a proof-of-implementation check fails.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::InternalInconsistency, what);
}

}  // namespace polecover
