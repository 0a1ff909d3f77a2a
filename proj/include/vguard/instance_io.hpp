#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vguard/pipeline.hpp"
#include "vguard/polygon.hpp"
#include "vguard/verification.hpp"

namespace vguard {

/// Malformed input text. Syntax errors carry a 1-based line and column;
/// structural errors (wrong shape, bad number) carry a JSON path instead.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Instance files are JSON objects:
///   {"outer": [[x, y], ...], "holes": [[[x, y], ...], ...]}
/// Coordinates are JSON integers or strings holding an exact decimal ("-0.5")
/// or fraction ("-1/2"). "holes" may be omitted.
std::vector<Ring> parse_rings(std::string_view text);

/// parse_rings followed by validate; ValidationError passes through.
PolygonWithHoles parse_instance(std::string_view text);

/// Canonical instance text (normalized orientation, integers as numbers,
/// everything else as exact strings).
std::string emit_instance(const PolygonWithHoles& poly);

/// Result document with stable key order: guards, bound, certificate and,
/// when given, the verification summary.
std::string emit_result(const PolygonWithHoles& poly, const GuardResult& result,
                        const GuardSetVerdict* verdict = nullptr);

/// Guards and (if present) certificate base edges read back from a result
/// document. Only "guards" is required.
struct GuardFile {
  std::vector<VertexId> guards;
  std::optional<std::vector<std::array<VertexId, 2>>> bases;
  std::vector<std::array<Point, 3>> special_triangles;
};

GuardFile parse_guard_file(std::string_view text, const PolygonWithHoles& poly);

}  // namespace vguard
