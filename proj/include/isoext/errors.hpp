#pragma once

#include <stdexcept>
#include <string>

namespace isoext {

struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

#define ISOEXT_DEFINE_ERROR(Name)     \
    struct Name : Error               \
    {                                 \
        using Error::Error;           \
    }

ISOEXT_DEFINE_ERROR(ParseError);
ISOEXT_DEFINE_ERROR(UnsupportedCoaction);
ISOEXT_DEFINE_ERROR(EmptyWindow);
ISOEXT_DEFINE_ERROR(InvalidComodule);
ISOEXT_DEFINE_ERROR(NonZeroChowNovikov);
ISOEXT_DEFINE_ERROR(NotACocycle);
ISOEXT_DEFINE_ERROR(PresentationInconsistent);
ISOEXT_DEFINE_ERROR(CorruptCheckpoint);
ISOEXT_DEFINE_ERROR(VersionMismatch);
ISOEXT_DEFINE_ERROR(WindowTooSmall);
ISOEXT_DEFINE_ERROR(NotIsotropicallyFiniteType);
ISOEXT_DEFINE_ERROR(ChowNovikovHypothesisViolated);
ISOEXT_DEFINE_ERROR(UnboundedChowNovikov);

#undef ISOEXT_DEFINE_ERROR

}  // namespace isoext
