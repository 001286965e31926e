#include "hf/error.hpp"

namespace hf {

const char* code_name(Code c) {
  switch (c) {
    case Code::Syntax: return "SYNTAX";
    case Code::Structure: return "STRUCTURE";
    case Code::UnknownPoint: return "UNKNOWN_POINT";
    case Code::UnknownRegion: return "UNKNOWN_REGION";
    case Code::MissingBasepoint: return "MISSING_BASEPOINT";
    case Code::PointCoverage: return "POINT_COVERAGE";
    case Code::ArcUsage: return "ARC_USAGE";
    case Code::CycleBroken: return "CYCLE_BROKEN";
    case Code::Alternation: return "ALTERNATION";
    case Code::CornerCount: return "CORNER_COUNT";
    case Code::EulerMismatch: return "EULER_MISMATCH";
    case Code::ComplementDisconnected: return "COMPLEMENT_DISCONNECTED";
    case Code::InvalidMarking: return "INVALID_MARKING";
    case Code::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Code::NotDestabilizable: return "NOT_DESTABILIZABLE";
    case Code::SegmentsNotCoregional: return "SEGMENTS_NOT_COREGIONAL";
    case Code::RegionNotDisc: return "REGION_NOT_DISC";
    case Code::NotCollapsible: return "NOT_COLLAPSIBLE";
    case Code::NotNice: return "NOT_NICE";
    case Code::NotNiceForKnot: return "NOT_NICE_FOR_KNOT";
    case Code::NotAdmissible: return "NOT_ADMISSIBLE";
    case Code::NotACycle: return "NOT_A_CYCLE";
    case Code::NoValidTrace: return "NO_VALID_TRACE";
    case Code::NotAComplex: return "NOT_A_COMPLEX";
    case Code::NotChainMap: return "NOT_CHAIN_MAP";
    case Code::NotNullHomotopy: return "NOT_NULL_HOMOTOPY";
    case Code::HypothesisViolation: return "HYPOTHESIS_VIOLATION";
    case Code::Internal: return "INTERNAL";
    case Code::InternalD2: return "INTERNAL_D2";
  }
  return "UNKNOWN";
}

Error::Error(Code c, const std::string& what)
    : std::runtime_error(std::string(code_name(c)) + ": " + what), code(c) {}

void fail(Code c, const std::string& what) { throw Error(c, what); }

}  // namespace hf
