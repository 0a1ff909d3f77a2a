#pragma once

#include <stdexcept>
#include <string>

#include "vguard/cut_polygon.hpp"
#include "vguard/special_triangle.hpp"

namespace vguard {

enum class SplitErrorKind { NotSpecial, ApexOnBaseHole };

class SplitError : public std::invalid_argument {
 public:
  SplitError(SplitErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  SplitErrorKind kind() const noexcept { return kind_; }

 private:
  SplitErrorKind kind_;
};

/// Provenance of the one entry a split adds.
struct GuardMappingDelta {
  EntryId added;
  VertexId origin;
};

struct SplitResult {
  CutPolygon polygon;
  GuardMappingDelta delta;
};

/// Splits the apex of a special triangle into two copies and splices the base
/// hole into the apex's walk: the apex entry becomes the chain
///   apex, c, (hole walk from c round to b), b, new copy
/// so the base edge disappears and the triangle is cut away. Holes drop by one
/// and entries grow by one. The precondition is re-checked.
SplitResult split_apex(const CutPolygon& poly, const SpecialTriangle& t);

}  // namespace vguard
