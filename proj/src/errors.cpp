#include "iwasawa/errors.hpp"

namespace iwasawa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::PrecisionLoss: return "PrecisionLoss";
    case ErrorKind::RamifiedRoot: return "RamifiedRoot";
    case ErrorKind::NoResidueRoot: return "NoResidueRoot";
    case ErrorKind::WildExponent: return "WildExponent";
    case ErrorKind::ZeroAtPrecision: return "ZeroAtPrecision";
    case ErrorKind::InsufficientDegree: return "InsufficientDegree";
    case ErrorKind::NotDistinguished: return "NotDistinguished";
    case ErrorKind::NotTopologicallyNilpotent: return "NotTopologicallyNilpotent";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::PrecisionAmbiguous: return "PrecisionAmbiguous";
    case ErrorKind::NotTorsion: return "NotTorsion";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotTorsionAfterSpecialization: return "NotTorsionAfterSpecialization";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::BadResidueCharacteristic: return "BadResidueCharacteristic";
    case ErrorKind::NotProjector: return "NotProjector";
    case ErrorKind::EntryNotDivisible: return "EntryNotDivisible";
    case ErrorKind::NotPerfectPower: return "NotPerfectPower";
    case ErrorKind::IrregularAtPrecision: return "IrregularAtPrecision";
  }
  return "Unknown";
}

}  // namespace iwasawa
