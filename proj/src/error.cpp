#include "rootforge/error.hpp"

namespace rootforge {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotPiSystem: return "NotPiSystem";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::NotIrreducibleParent: return "NotIrreducibleParent";
    case Errc::UnrecognizedComponent: return "UnrecognizedComponent";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotD4: return "NotD4";
    case Errc::NotOrthogonalSeed: return "NotOrthogonalSeed";
    case Errc::NoPerfectMoset: return "NoPerfectMoset";
    case Errc::OracleCapExceeded: return "OracleCapExceeded";
    case Errc::NotMoset: return "NotMoset";
    case Errc::LabelingInfeasible: return "LabelingInfeasible";
    case Errc::NotInMoset: return "NotInMoset";
    case Errc::Unsupported: return "Unsupported";
    case Errc::NotInEnhancedBasis: return "NotInEnhancedBasis";
    case Errc::NotEmbedding: return "NotEmbedding";
    case Errc::MixedAmbient: return "MixedAmbient";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rootforge
