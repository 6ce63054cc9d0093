#include "centlab/error.hpp"

namespace centlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::OrderIncompatible: return "OrderIncompatible";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotPairwiseNoncommuting: return "NotPairwiseNoncommuting";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::CeilingExceeded: return "CeilingExceeded";
    case ErrorKind::UnknownTheoremId: return "UnknownTheoremId";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace centlab
