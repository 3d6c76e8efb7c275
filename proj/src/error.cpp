#include "betalab/error.hpp"

namespace betalab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::NonPositiveSample: return "NonPositiveSample";
    case ErrorKind::SampleMiss: return "SampleMiss";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::DegenerateGrid: return "DegenerateGrid";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::MissingReference: return "MissingReference";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace betalab
