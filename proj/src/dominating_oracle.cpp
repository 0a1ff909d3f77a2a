#include <bit>
#include <cstdint>

#include "vguard/verification.hpp"

namespace vguard {

namespace {

struct Search {
  std::size_t n = 0;
  std::vector<std::uint32_t> closed;  // closed neighbourhood masks
  std::uint32_t all = 0;
  std::vector<std::size_t> picked;

  bool extend(std::size_t start, std::size_t remaining, std::uint32_t dominated) {
    if (dominated == all) return true;
    if (remaining == 0) return false;
    const std::size_t lowest = static_cast<std::size_t>(std::countr_zero(~dominated & all));
    // Some later pick must dominate `lowest`.
    if (std::bit_width(closed[lowest]) <= start) return false;
    for (std::size_t v = start; v < n; ++v) {
      if (n - v < remaining) break;
      picked.push_back(v);
      if (extend(v + 1, remaining - 1, dominated | closed[v])) return true;
      picked.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<VertexId> min_dominating_oracle(const VisibilityGraph& graph, std::size_t size_limit) {
  const std::size_t n = graph.size();
  const std::size_t limit = std::min(size_limit, kOracleMaxVertices);
  if (n > limit)
    throw OracleTooLarge("oracle limited to " + std::to_string(limit) + " vertices, graph has " + std::to_string(n));

  Search s;
  s.n = n;
  s.all = n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  s.closed.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    s.closed[i] = std::uint32_t{1} << i;
    for (std::size_t j = 0; j < n; ++j)
      if (graph.adjacent(i, j)) s.closed[i] |= std::uint32_t{1} << j;
  }
  for (std::size_t size = 0; size <= n; ++size) {
    s.picked.clear();
    if (s.extend(0, size, 0)) {
      std::vector<VertexId> out;
      for (const std::size_t v : s.picked) out.push_back(graph.vertex(v));
      return out;
    }
  }
  return {};
}

}  // namespace vguard
