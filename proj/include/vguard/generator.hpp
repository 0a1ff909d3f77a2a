#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "vguard/polygon.hpp"

namespace vguard {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t outer_vertices = 8;
  std::size_t holes = 0;
  std::size_t hole_vertices = 3;
  long coordinate_range = 100;  // coordinates lie in [0, range]
};

class GenerationFailed : public std::runtime_error {
 public:
  GenerationFailed(const std::string& what, std::uint64_t seed) : std::runtime_error(what), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Random polygon with holes, deterministic in the config. The outer ring is a
/// 2-opt uncrossing of random integer points in general position; holes are
/// strictly convex integer rings dropped in by rejection sampling.
PolygonWithHoles generate(const GeneratorConfig& config);

}  // namespace vguard
