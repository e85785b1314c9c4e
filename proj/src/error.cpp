#include "resnum/error.hpp"

namespace resnum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::InvalidFamilyParam: return "InvalidFamilyParam";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::CatalogMissing: return "CatalogMissing";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::MalformedLine: return "MalformedLine";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace resnum
