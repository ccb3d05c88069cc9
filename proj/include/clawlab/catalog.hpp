#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "clawlab/graph.hpp"

namespace clawlab {

struct NamedGraph {
  std::string name;
  Graph graph;
  std::string provenance;
  /// Vertex labels as drawn in the source figure (empty when the figure has none).
  std::vector<std::string> labels;
};

struct CatalogEntry {
  std::string name;
  std::string provenance;
  /// Human-readable parameter signature, e.g. "t>=1"; empty for fixed graphs.
  std::string params;
};

/// Look up a named graph. Throws InvalidArgument for unknown names or bad parameters.
NamedGraph catalog_get(std::string_view name, const std::vector<int>& params = {});
std::vector<CatalogEntry> catalog_list();

/// Resolve "@name" or "@name:p1,p2,..." references.
NamedGraph resolve_catalog_ref(std::string_view ref);

/// Builders used by several modules.
Graph e2_power(int n);
Graph g_t(int t);
Graph thickened_c5(const std::vector<int>& sizes);

}  // namespace clawlab
