#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace comtrace {

/// Classifies every failure the library can report. CLI exit codes are
/// derived from the kind: parse failures exit 1, semantic failures exit 2,
/// resource-bound failures exit 3.
enum class ErrorKind {
  Parse,
  UnknownEvent,
  ReflexivePair,
  SerNotInSim,
  InvalidStep,
  NotAnOccurrence,
  LabelCollision,
  InvalidStructure,
  NotAnLsosComtrace,
  NotCovering,
  AlphabetMismatch,
  ClassSizeExceeded,
  GroundTooLarge,
  TooManyEvents,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return 1;
    case ErrorKind::ClassSizeExceeded:
    case ErrorKind::GroundTooLarge:
    case ErrorKind::TooManyEvents:
      return 3;
    default:
      return 2;
  }
}

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UnknownEvent: return "unknown-event";
    case ErrorKind::ReflexivePair: return "reflexive-pair";
    case ErrorKind::SerNotInSim: return "ser-not-in-sim";
    case ErrorKind::InvalidStep: return "invalid-step";
    case ErrorKind::NotAnOccurrence: return "not-an-occurrence";
    case ErrorKind::LabelCollision: return "label-collision";
    case ErrorKind::InvalidStructure: return "invalid-structure";
    case ErrorKind::NotAnLsosComtrace: return "not-an-lsos-comtrace";
    case ErrorKind::NotCovering: return "not-covering";
    case ErrorKind::AlphabetMismatch: return "alphabet-mismatch";
    case ErrorKind::ClassSizeExceeded: return "class-size-exceeded";
    case ErrorKind::GroundTooLarge: return "ground-too-large";
    case ErrorKind::TooManyEvents: return "too-many-events";
  }
  return "unknown";
}

}  // namespace comtrace
