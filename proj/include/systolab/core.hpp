#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace systolab {

// Error taxonomy shared by all modules.  The CLI maps kinds to exit codes:
// input/validation problems exit 1, resource/convergence problems exit 2.
enum class ErrorKind {
  InvalidInput,
  NotClosed,
  Disconnected,
  NonManifoldVertex,
  InvalidTriangle,
  TriangleInequality,
  EdgeLengthMismatch,
  DegenerateTriangle,
  DegenerateMetric,
  SingularBasis,
  SimplyConnected,
  TrivialHomology,
  MismatchedModel,
  InvalidAlpha,
  InvalidRadii,
  NoAdmissibleBall,
  RadiusTooLarge,
  UnsortedLs,
  WindowTooSmall,
  InvalidParams,
  InvalidStart,
  MaxIterations,
  UnknownGenerator,
  UnsupportedFormat,
  ResourceLimit,
  IoError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorKind::InvalidTriangle: return "InvalidTriangle";
    case ErrorKind::TriangleInequality: return "TriangleInequality";
    case ErrorKind::EdgeLengthMismatch: return "EdgeLengthMismatch";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::SimplyConnected: return "SimplyConnected";
    case ErrorKind::TrivialHomology: return "TrivialHomology";
    case ErrorKind::MismatchedModel: return "MismatchedModel";
    case ErrorKind::InvalidAlpha: return "InvalidAlpha";
    case ErrorKind::InvalidRadii: return "InvalidRadii";
    case ErrorKind::NoAdmissibleBall: return "NoAdmissibleBall";
    case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorKind::UnsortedLs: return "UnsortedLs";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidStart: return "InvalidStart";
    case ErrorKind::MaxIterations: return "MaxIterations";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool ok, ErrorKind kind, const std::string& msg) {
  if (!ok) fail(kind, msg);
}

// Shared tolerances.  Input consistency checks run at 1e-9, conservation
// checks (area under subdivision, scale equivariance) at 1e-12, and all
// "distance <= L" counters use kCountTol so that exact hits at the
// threshold are counted on both sides of a comparison.
namespace tol {
inline constexpr double kInput = 1e-9;
inline constexpr double kConservation = 1e-12;
inline constexpr double kCount = 1e-9;
}  // namespace tol

// Resource caps; generous defaults, overridable per call site.
struct Limits {
  std::int64_t max_faces = 64'000'000;
  std::int64_t max_cover_vertices = 30'000'000;
  std::int64_t max_orbit_count = 200'000'000;
};

inline Limits& global_limits() {
  static Limits lim;
  return lim;
}

// Worker cap for the few parallelizable loops; 0 means "hardware".
inline int& global_thread_cap() {
  static int cap = 0;
  return cap;
}

}  // namespace systolab
