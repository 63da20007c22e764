#pragma once
#include <cstdint>
#include <vector>

#include "lpsplit/graph.hpp"

namespace lpsplit {

/**
 * Breadth-first traversal from source over vertices j passing accept(j).
 * Every reached vertex is marked in visited and handed to visit(j) once,
 * source included. Neighbors are expanded in ascending order.
 * @param queue scratch buffer, reused across calls
 */
template <class Accept, class Visit>
void bfs_visit_for_each(std::vector<std::uint8_t>& visited, std::vector<VertexId>& queue, const Graph& g,
                        VertexId source, Accept&& accept, Visit&& visit) {
  queue.clear();
  visited[source] = 1;
  visit(source);
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId i = queue[head];
    for (VertexId j : g.neighbors(i)) {
      if (visited[j] || !accept(j)) continue;
      visited[j] = 1;
      visit(j);
      queue.push_back(j);
    }
  }
}

}  // namespace lpsplit
