#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wiretap {

enum class ErrorCode {
    CyclicGraph,
    UnknownEdgeInWiretapSet,
    UnknownEdge,
    UnknownNode,
    UnreachableUser,
    SourceIsUser,
    EmptyUsers,
    DuplicateEdgeId,
    DuplicateNode,
    DuplicateWiretapSet,
    UnknownUser,
    InstanceTooLarge,
    SingularMatrix,
    DomainError,
    PreconditionViolated,
    NotPointToPoint,
    DegenerateTau,
    FieldTooSmall,
    DimensionMismatch,
    InconsistentCodeword,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/** Every failure raised by the library carries one of the codes above. */
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace wiretap
