#pragma once

#include <stdexcept>
#include <string>

namespace deltaforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct MissingSecondProduct : Error { using Error::Error; };
struct NotAnIdeal : Error { using Error::Error; };
struct DeltaRequired : Error { using Error::Error; };
struct ForbiddenDelta : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };
struct NotGenerating : Error { using Error::Error; };
struct BaseFailsIdentities : Error { using Error::Error; };
struct UnknownEntry : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct InvalidPresentation : Error { using Error::Error; };

}  // namespace deltaforge
