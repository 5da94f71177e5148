#pragma once

#include <stdexcept>
#include <string>

namespace orthopress {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural problems in an input representation.
struct ValidationError : Error { using Error::Error; };
struct DegreeViolation : ValidationError { using ValidationError::ValidationError; };
struct DisconnectedGraph : ValidationError { using ValidationError::ValidationError; };
struct DirectionConflict : ValidationError { using ValidationError::ValidationError; };
struct RotationSumViolation : ValidationError { using ValidationError::ValidationError; };
struct VertexNotOnFace : Error { using Error::Error; };

// Chain-DAG machinery.
struct LabelingInconsistent : Error { using Error::Error; };
struct AmbiguousSaturation : Error { using Error::Error; };
struct CycleDetected : Error { using Error::Error; };
struct NotTurnRegular : Error { using Error::Error; };
struct NoValidCandidate : Error { using Error::Error; };

// Height DP.
struct InconsistentTuple : Error { using Error::Error; };
struct InfeasibleWithinBound : Error { using Error::Error; };

// Kernelizer.
struct NotACycle : Error { using Error::Error; };
struct PatternMismatch : Error { using Error::Error; };

// Oracle.
struct LimitExceeded : Error { using Error::Error; };
struct Infeasible : Error { using Error::Error; };

// CLI / formats.
struct SyntaxError : Error {
  int line;
  SyntaxError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};
struct GenerationFailed : Error { using Error::Error; };

}  // namespace orthopress
