#include "listdist/error.hpp"

namespace listdist {

const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::InvalidGraph6: return "InvalidGraph6";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ListTooShort: return "ListTooShort";
    case ErrorCode::ExceptionalGraph: return "ExceptionalGraph";
    case ErrorCode::ExceptionalTree: return "ExceptionalTree";
    case ErrorCode::OverConstrained: return "OverConstrained";
    case ErrorCode::UncolouredIncidentEdge: return "UncolouredIncidentEdge";
    case ErrorCode::SchemeStuck: return "SchemeStuck";
    case ErrorCode::ExtensionStuck: return "ExtensionStuck";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InternalAudit: return "InternalAudit";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotFoundWithin: return "NotFoundWithin";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

}  // namespace listdist
