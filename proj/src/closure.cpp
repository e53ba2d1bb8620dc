#include "lpa/closure.hpp"

#include <deque>

#include "lpa/errors.hpp"

namespace lpa {

VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& s) {
    for (VertexId v : s) g.vertex_name(v);
    VertexSet h = s;

    auto hereditary_pass = [&](std::deque<VertexId> work) {
        while (!work.empty()) {
            VertexId v = work.front();
            work.pop_front();
            for (EdgeId e : g.out(v)) {
                VertexId w = g.decl(e).dst;
                if (h.insert(w).second) work.push_back(w);
            }
        }
    };

    hereditary_pass({h.begin(), h.end()});
    // Saturation: adding v whose edge ranges already lie in H creates no new
    // hereditary obligations, so alternating reduces to repeated saturation
    // sweeps.
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (h.count(v) || !g.is_regular(v)) continue;
            bool all_in = true;
            for (EdgeId e : g.out(v))
                if (!h.count(g.decl(e).dst)) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                h.insert(v);
                changed = true;
            }
        }
    }
    return h;
}

bool is_hereditary_saturated(const Graph& g, const VertexSet& s) {
    return hereditary_saturated_closure(g, s) == s;
}

SimplicityReport is_simple(const Graph& g) {
    auto cl = condition_L(g);
    if (!cl.holds) {
        return SimplicityReport{false, "Condition (L) fails: cycle without exits", cl.witness,
                                std::nullopt};
    }
    // Any nonempty hereditary saturated set contains the closure of one of
    // its singletons, so checking singletons is exact.
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexSet h = hereditary_saturated_closure(g, {v});
        if (h.size() != g.vertex_count()) {
            return SimplicityReport{
                false, "proper hereditary saturated subset: closure({" + g.vertex_name(v) + "})",
                std::nullopt, v};
        }
    }
    return SimplicityReport{true, "", std::nullopt, std::nullopt};
}

}  // namespace lpa
