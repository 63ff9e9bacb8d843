#include "wiretap/error.hpp"

namespace wiretap {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::UnknownEdgeInWiretapSet: return "UnknownEdgeInWiretapSet";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnreachableUser: return "UnreachableUser";
    case ErrorCode::SourceIsUser: return "SourceIsUser";
    case ErrorCode::EmptyUsers: return "EmptyUsers";
    case ErrorCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::DuplicateWiretapSet: return "DuplicateWiretapSet";
    case ErrorCode::UnknownUser: return "UnknownUser";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotPointToPoint: return "NotPointToPoint";
    case ErrorCode::DegenerateTau: return "DegenerateTau";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InconsistentCodeword: return "InconsistentCodeword";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace wiretap
