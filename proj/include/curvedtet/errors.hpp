#pragma once

#include <stdexcept>
#include <string>

namespace curvedtet {

// Every failure mode carries a stable machine-readable reason tag; the CLI
// prints the tag on stderr and maps it to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string reason, const std::string& what)
        : std::runtime_error(reason + ": " + what), reason_(std::move(reason)) {}
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

#define CURVEDTET_DEFINE_ERROR(NAME)                               \
    class NAME : public Error {                                    \
    public:                                                        \
        explicit NAME(const std::string& what = "")                \
            : Error(#NAME, what) {}                                \
    }

CURVEDTET_DEFINE_ERROR(DegenerateRotor);
CURVEDTET_DEFINE_ERROR(IdentityRotation);
CURVEDTET_DEFINE_ERROR(ClosureViolated);
CURVEDTET_DEFINE_ERROR(DegenerateConfiguration);
CURVEDTET_DEFINE_ERROR(NoValidSigns);
CURVEDTET_DEFINE_ERROR(MultipleValidSigns);
CURVEDTET_DEFINE_ERROR(InconsistentDihedral);
CURVEDTET_DEFINE_ERROR(InvalidGram);
CURVEDTET_DEFINE_ERROR(Degenerate);
CURVEDTET_DEFINE_ERROR(SignMismatch);
CURVEDTET_DEFINE_ERROR(ReconstructionFailure);
CURVEDTET_DEFINE_ERROR(SingularNormalMatrix);
CURVEDTET_DEFINE_ERROR(TimelikeViolation);
CURVEDTET_DEFINE_ERROR(CoincidentVertices);
CURVEDTET_DEFINE_ERROR(VertexFigureDegenerate);
CURVEDTET_DEFINE_ERROR(AreaMismatch);
CURVEDTET_DEFINE_ERROR(DegenerateGeodesic);
CURVEDTET_DEFINE_ERROR(SpacelikePlane);
CURVEDTET_DEFINE_ERROR(NotIncident);
CURVEDTET_DEFINE_ERROR(Misaligned);
CURVEDTET_DEFINE_ERROR(OutOfChart);
CURVEDTET_DEFINE_ERROR(DiagonalDegenerate);
CURVEDTET_DEFINE_ERROR(PhiUndefined);
CURVEDTET_DEFINE_ERROR(RejectionExhausted);
CURVEDTET_DEFINE_ERROR(ParseError);

#undef CURVEDTET_DEFINE_ERROR

}  // namespace curvedtet
