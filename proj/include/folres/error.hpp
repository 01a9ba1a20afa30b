#pragma once

#include <stdexcept>
#include <string>

namespace folres {

enum class Errc {
  AmbientMismatch,
  IndexOutOfRange,
  DegreeOverflow,
  RankDeficient,
  DegenerateGenerators,
  NotZeroDimensional,
  NotIsolated,
  NotTransverse,
  DegenerateSlice,
  DegreeTooLow,
  NotInvolutive,
  NonSkew,
  JacobiFailure,
  RetriesExhausted,
  NotManifold,
  NotOrientable,
  SupportViolation,
  MalformedInput,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DegenerateGenerators: return "DegenerateGenerators";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::NotIsolated: return "NotIsolated";
    case Errc::NotTransverse: return "NotTransverse";
    case Errc::DegenerateSlice: return "DegenerateSlice";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::NotInvolutive: return "NotInvolutive";
    case Errc::NonSkew: return "NonSkew";
    case Errc::JacobiFailure: return "JacobiFailure";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::NotManifold: return "NotManifold";
    case Errc::NotOrientable: return "NotOrientable";
    case Errc::SupportViolation: return "SupportViolation";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

/// Library-wide exception carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace folres
