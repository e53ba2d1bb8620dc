#pragma once

#include <optional>
#include <set>
#include <string>

#include "lpa/graph.hpp"

namespace lpa {

using VertexSet = std::set<VertexId>;

// Least H containing s that is hereditary (closed under ranges of outgoing
// edges and bundles) and saturated (contains every regular vertex all of
// whose edge ranges lie in H). Infinite emitters are never added by
// saturation.
VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& s);

bool is_hereditary_saturated(const Graph& g, const VertexSet& s);

struct SimplicityReport {
    bool simple;
    // When not simple, which condition failed and a witness.
    std::string reason;
    std::optional<CycleWithoutExits> cycle_witness;
    std::optional<VertexId> vertex_witness;  // closure({v}) proper
};

// Simple iff Condition (L) holds and the only hereditary saturated subsets
// are trivial; the latter reduces to closure({v}) = E^0 for every v.
SimplicityReport is_simple(const Graph& g);

}  // namespace lpa
