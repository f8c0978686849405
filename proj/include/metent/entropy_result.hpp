#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metent {

enum class ResultKind { Exact, CertifiedLower, CertifiedUpper, Asymptotic };

/// Stable short names used in JSON output.
inline std::string to_string(ResultKind kind) {
  switch (kind) {
    case ResultKind::Exact: return "exact";
    case ResultKind::CertifiedLower: return "lower";
    case ResultKind::CertifiedUpper: return "upper";
    case ResultKind::Asymptotic: return "asymptotic";
  }
  return "unknown";
}

/// An entropy value in bits and the radius it refers to.
struct EntropyResult {
  double bits = 0.0;
  ResultKind kind = ResultKind::Exact;
  double epsilon = 0.0;
};

}  // namespace metent
