#pragma once

#include <stdexcept>
#include <string>

namespace pipebot {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- geometry / scenario construction ---
struct GeometryError : Error { using Error::Error; };
struct OverlapError : GeometryError { using GeometryError::GeometryError; };
struct RangeError : Error { using Error::Error; };

// --- sensing ---
struct RotationRangeError : Error { using Error::Error; };
struct SamplingError : Error { using Error::Error; };

// --- dsp ---
struct BlockAlignmentError : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };
struct AlignmentError : Error { using Error::Error; };

// --- perception ---
struct InsufficientDataError : Error { using Error::Error; };
struct NoHoleError : Error { using Error::Error; };
struct PoorFitError : Error { using Error::Error; };
struct NoDetectionError : Error { using Error::Error; };

// --- motion / machining ---
struct KinematicError : Error { using Error::Error; };
struct UnreachableError : KinematicError { using KinematicError::KinematicError; };
struct TravelLimitError : KinematicError { using KinematicError::KinematicError; };
struct ForceLimitError : Error { using Error::Error; };
struct SpindleLimitError : Error { using Error::Error; };
struct JamAbortError : Error { using Error::Error; };

// --- mission ---
struct MissionAbort : Error { using Error::Error; };
struct MissionStateError : Error { using Error::Error; };
struct RelocationError : Error { using Error::Error; };

// --- file formats / cli ---
struct FormatError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct NotFoundError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

}  // namespace pipebot
