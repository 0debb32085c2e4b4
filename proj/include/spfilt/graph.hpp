#pragma once

#include <string>
#include <vector>

#include "spfilt/mutation.hpp"

namespace spfilt {

struct MutationEdge {
    int src;
    int dst;
    UpperSet label;
};

/// All increasing functions of a poset into a value window, with one edge
/// per mutation that stays inside the window. Nodes are deduplicated and
/// sorted lexicographically on value vectors; edges are grouped by source
/// and follow the deterministic upper-set enumeration order.
class MutationGraph {
public:
    const PosetHandle& poset() const { return poset_; }
    int window_lo() const { return window_lo_; }
    int window_hi() const { return window_hi_; }
    const std::vector<PosetHom>& nodes() const { return nodes_; }
    const std::vector<bool>& t_flags() const { return t_flags_; }
    const std::vector<MutationEdge>& edges() const { return edges_; }

    /// Index of a node with the same values, or -1.
    int find_node(const PosetHom& f) const;

private:
    friend MutationGraph build_mutation_graph(PosetHandle, int, int, bool);

    PosetHandle poset_;
    int window_lo_ = 0;
    int window_hi_ = 0;
    std::vector<PosetHom> nodes_;
    std::vector<bool> t_flags_;
    std::vector<MutationEdge> edges_;
};

/// Builds the mutation graph over the window [a, b]. Throws BadWindow when
/// a > b and TooLarge when the window holds more than 100000 increasing
/// functions. With nonempty_only (the default) mutations at the empty set,
/// which are identities, are left out.
MutationGraph build_mutation_graph(PosetHandle poset, int a, int b, bool nonempty_only = true);

/// Nodes satisfying the covering-step condition that are reachable from
/// start, in breadth-first discovery order (start included when it
/// qualifies). Throws UnknownNode when start is not a node of the graph.
std::vector<PosetHom> reachable_t_functions(const MutationGraph& graph, const PosetHom& start);

/// Renders the graph in DOT form. Node ids join label:value pairs sorted by
/// label with semicolons; edge labels list the mutation set.
std::string graph_to_dot(const MutationGraph& graph);

}  // namespace spfilt
