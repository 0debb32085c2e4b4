#include "spfilt/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace spfilt {

namespace {

constexpr size_t kNodeLimit = 100000;

// Node ids in DOT output: label:value pairs sorted by label.
std::string node_id(const PosetHom& f) {
    std::vector<std::string> parts;
    for (const auto& label : f.poset()->labels())
        parts.push_back(label + ":" + std::to_string(f.value(label)));
    std::sort(parts.begin(), parts.end());
    std::string id;
    for (const auto& p : parts) {
        if (!id.empty()) id += ";";
        id += p;
    }
    return id;
}

std::string edge_label(const UpperSet& w) {
    if (w.is_all()) return "@all";
    if (w.is_empty()) return "@empty";
    std::string out;
    for (const auto& l : w.sorted_labels()) {
        if (!out.empty()) out += ",";
        out += l;
    }
    return out;
}

}  // namespace

int MutationGraph::find_node(const PosetHom& f) const {
    if (!same_universe(poset_, f.poset())) return -1;
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), f,
                                     [](const PosetHom& a, const PosetHom& b) {
                                         return a.values() < b.values();
                                     });
    if (it == nodes_.end() || it->values() != f.values()) return -1;
    return static_cast<int>(it - nodes_.begin());
}

MutationGraph build_mutation_graph(PosetHandle poset, int a, int b, bool nonempty_only) {
    if (a > b)
        throw BadWindow("window [" + std::to_string(a) + ", " + std::to_string(b) +
                        "] is empty");
    MutationGraph graph;
    graph.poset_ = poset;
    graph.window_lo_ = a;
    graph.window_hi_ = b;

    const int n = poset->size();
    // Depth-first assignment in element order, candidate values ascending,
    // yields the nodes directly in lexicographic order on value vectors.
    std::vector<int> values(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> node_values;
    std::function<void(int)> assign = [&](int i) {
        if (i == n) {
            if (node_values.size() >= kNodeLimit)
                throw TooLarge("window holds more than " + std::to_string(kNodeLimit) +
                               " increasing functions");
            node_values.push_back(values);
            return;
        }
        for (int v = a; v <= b; ++v) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (poset->leq(j, i) && values[static_cast<size_t>(j)] > v) ok = false;
                if (poset->leq(i, j) && v > values[static_cast<size_t>(j)]) ok = false;
            }
            if (!ok) continue;
            values[static_cast<size_t>(i)] = v;
            assign(i + 1);
        }
    };
    assign(0);

    std::map<std::vector<int>, int> position;
    for (const auto& vs : node_values) {
        position.emplace(vs, static_cast<int>(graph.nodes_.size()));
        graph.nodes_.emplace_back(poset, vs);
        graph.t_flags_.push_back(is_t_function(graph.nodes_.back()));
    }

    const std::vector<UpperSet> uppers = enumerate_upper_sets(poset);
    for (size_t src = 0; src < graph.nodes_.size(); ++src) {
        for (const auto& w : uppers) {
            if (nonempty_only && w.is_empty()) continue;
            std::vector<int> target = graph.nodes_[src].values();
            bool inside = true;
            for (size_t i = 0; i < target.size(); ++i) {
                if (w.contains(static_cast<int>(i))) ++target[i];
                if (target[i] > b) inside = false;
            }
            if (!inside) continue;
            const auto it = position.find(target);
            if (it == position.end()) continue;
            graph.edges_.push_back({static_cast<int>(src), it->second, w});
        }
    }
    return graph;
}

std::vector<PosetHom> reachable_t_functions(const MutationGraph& graph, const PosetHom& start) {
    const int s = graph.find_node(start);
    if (s < 0) throw UnknownNode("start function is not a node of this graph");

    std::vector<std::vector<int>> adjacency(graph.nodes().size());
    for (const auto& e : graph.edges()) adjacency[static_cast<size_t>(e.src)].push_back(e.dst);

    std::vector<bool> seen(graph.nodes().size(), false);
    std::deque<int> queue{s};
    seen[static_cast<size_t>(s)] = true;
    std::vector<PosetHom> out;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        if (graph.t_flags()[static_cast<size_t>(cur)]) out.push_back(graph.nodes()[static_cast<size_t>(cur)]);
        for (int next : adjacency[static_cast<size_t>(cur)]) {
            if (seen[static_cast<size_t>(next)]) continue;
            seen[static_cast<size_t>(next)] = true;
            queue.push_back(next);
        }
    }
    return out;
}

std::string graph_to_dot(const MutationGraph& graph) {
    std::ostringstream out;
    out << "digraph mutation {\n";
    for (size_t i = 0; i < graph.nodes().size(); ++i) {
        out << "  \"" << node_id(graph.nodes()[i]) << "\"";
        if (graph.t_flags()[i]) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const auto& e : graph.edges()) {
        out << "  \"" << node_id(graph.nodes()[static_cast<size_t>(e.src)]) << "\" -> \""
            << node_id(graph.nodes()[static_cast<size_t>(e.dst)]) << "\" [label=\""
            << edge_label(e.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace spfilt
