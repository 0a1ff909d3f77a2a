#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vguard/pipeline.hpp"
#include "vguard/polygon.hpp"
#include "vguard/verification.hpp"

namespace vguard {

struct AuditCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Full property audit of one pipeline run.
struct AuditReport {
  std::size_t n = 0;
  std::size_t h = 0;
  std::size_t guards = 0;
  std::size_t bound = 0;
  std::vector<AuditCheck> checks;

  bool ok() const;
  /// Names of failed checks, comma separated; empty when ok().
  std::string failures() const;
};

struct AuditOptions {
  std::size_t symmetry_pairs = 100;
  std::uint64_t sample_seed = 0;
};

/// Checks: guard bound, domination, outer coverage, hole gaps (count and
/// containment in base edges), sampled visibility symmetry, triangle count
/// m - 2, area of triangles plus cut-away triangles equal to the region area,
/// and that replaying the certificate reproduces the guards.
AuditReport audit(const PolygonWithHoles& poly, const GuardResult& result, const AuditOptions& options = {});

}  // namespace vguard
