#pragma once

#include <stdexcept>
#include <string>

namespace hf {

// Machine-readable failure codes. Every error carries exactly one; the CLI
// maps them onto exit codes (input/validation -> 1, refusal -> 2, internal
// invariant failure -> 3).
enum class Code {
  Syntax,
  Structure,
  UnknownPoint,
  UnknownRegion,
  MissingBasepoint,
  PointCoverage,
  ArcUsage,
  CycleBroken,
  Alternation,
  CornerCount,
  EulerMismatch,
  ComplementDisconnected,
  InvalidMarking,
  DimensionMismatch,

  NotDestabilizable,
  SegmentsNotCoregional,
  RegionNotDisc,
  NotCollapsible,
  NotNice,
  NotNiceForKnot,
  NotAdmissible,
  NotACycle,
  NoValidTrace,
  NotAComplex,
  NotChainMap,
  NotNullHomotopy,
  HypothesisViolation,

  Internal,
  InternalD2,
};

const char* code_name(Code c);

struct Error : std::runtime_error {
  Code code;
  Error(Code c, const std::string& what);
};

[[noreturn]] void fail(Code c, const std::string& what);

inline void require(bool ok, Code c, const std::string& what) {
  if (!ok) fail(c, what);
}

// Internal invariant assertion: failures are bugs, not bad input.
inline void check_internal(bool ok, const std::string& what) {
  if (!ok) fail(Code::Internal, what);
}

}  // namespace hf
