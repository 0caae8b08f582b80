#pragma once

#include <stdexcept>
#include <string>

namespace rootforge {

enum class Errc {
  UnsupportedType,
  NotIrreducible,
  NotPiSystem,
  NotOrthogonal,
  NotIrreducibleParent,
  UnrecognizedComponent,
  TooLarge,
  NotSymmetric,
  NotD4,
  NotOrthogonalSeed,
  NoPerfectMoset,
  OracleCapExceeded,
  NotMoset,
  LabelingInfeasible,
  NotInMoset,
  Unsupported,
  NotInEnhancedBasis,
  NotEmbedding,
  MixedAmbient,
  CapExceeded,
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rootforge
