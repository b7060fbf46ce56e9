#include "ontofm/graph.hpp"

#include "ontofm/error.hpp"

#include <algorithm>
#include <deque>

namespace ontofm {

std::string_view to_string(LayoutMode mode) noexcept {
    switch (mode) {
        case LayoutMode::Radial: return "radial";
        case LayoutMode::TreeUnder: return "tree_under";
        case LayoutMode::TreeAbove: return "tree_above";
    }
    return "radial";
}

std::optional<LayoutMode> parse_layout_mode(std::string_view s) noexcept {
    if (s == "radial") return LayoutMode::Radial;
    if (s == "tree_under") return LayoutMode::TreeUnder;
    if (s == "tree_above") return LayoutMode::TreeAbove;
    return std::nullopt;
}

std::optional<TreeDirection> parse_tree_direction(std::string_view s) noexcept {
    if (s == "under") return TreeDirection::Under;
    if (s == "above") return TreeDirection::Above;
    return std::nullopt;
}

bool GraphState::is_root(const InstanceId& id) const {
    return std::find(roots.begin(), roots.end(), id) != roots.end();
}

namespace {

void require_visible(const GraphState& s, const InstanceId& node) {
    if (!s.visible.contains(node)) {
        throw Error(ErrorCode::NodeNotVisible, "node '" + node.str() + "' is not visible", node.str());
    }
}

void fix_focus(GraphState& s) {
    if (s.focus && !s.visible.contains(*s.focus)) {
        s.focus = s.roots.empty() ? std::nullopt : std::optional<InstanceId>(s.roots.front());
    }
}

void expand_into(const Ontology& o, GraphState& s, const InstanceId& node) {
    for (const auto* other : o.adjacent(node)) {
        if (other->id == node || s.is_root(other->id)) {
            continue;
        }
        s.visible.insert(other->id);
        s.provenance[other->id].insert(node);
    }
    s.expanded.insert(node);
}

}  // namespace

std::set<Relation> induced_edges(const Ontology& o, const std::set<InstanceId>& visible) {
    std::set<Relation> edges;
    for (const auto& id : visible) {
        for (const auto& n : o.neighbors(id, Direction::Out)) {
            if (visible.contains(n.instance->id)) {
                edges.insert(Relation{id, n.predicate, n.instance->id});
            }
        }
    }
    return edges;
}

GraphState initial_graph(const Ontology& o, std::span<const InstanceId> terms) {
    GraphState s;
    for (const auto& t : terms) {
        o.instance(t);
        if (!s.is_root(t)) {
            s.roots.push_back(t);
            s.visible.insert(t);
        }
    }
    for (const auto& t : s.roots) {
        expand_into(o, s, t);
    }
    if (!s.roots.empty()) {
        s.focus = s.roots.front();
    }
    s.edges = induced_edges(o, s.visible);
    return s;
}

GraphState toggle(const Ontology& o, const GraphState& s, const InstanceId& node) {
    require_visible(s, node);
    GraphState next = s;
    if (!s.expanded.contains(node)) {
        expand_into(o, next, node);
        next.edges = induced_edges(o, next.visible);
        return next;
    }

    std::deque<InstanceId> withdrawn{node};
    next.expanded.erase(node);
    while (!withdrawn.empty()) {
        const auto source = withdrawn.front();
        withdrawn.pop_front();
        std::vector<InstanceId> orphaned;
        for (auto& [id, sources] : next.provenance) {
            if (sources.erase(source) > 0 && sources.empty()) {
                orphaned.push_back(id);
            }
        }
        for (const auto& id : orphaned) {
            next.provenance.erase(id);
            next.visible.erase(id);
            if (next.expanded.erase(id) > 0) {
                withdrawn.push_back(id);
            }
        }
    }
    fix_focus(next);
    next.edges = induced_edges(o, next.visible);
    return next;
}

GraphState center(const GraphState& s, const InstanceId& node) {
    require_visible(s, node);
    GraphState next = s;
    next.focus = node;
    next.layout = Layout{};
    return next;
}

GraphState tree(const Ontology& o, const GraphState& s, const InstanceId& node, TreeDirection direction,
                std::size_t depth_limit) {
    require_visible(s, node);
    const auto dir = direction == TreeDirection::Under ? Direction::Out : Direction::In;

    GraphState next;
    next.roots = {node};
    next.visible = {node};
    next.expanded = {node};
    next.focus = node;
    next.layout = Layout{direction == TreeDirection::Under ? LayoutMode::TreeUnder : LayoutMode::TreeAbove, node};

    std::map<InstanceId, std::size_t> depth{{node, 0}};
    std::vector<InstanceId> frontier{node};
    for (std::size_t level = 0; level < depth_limit && !frontier.empty(); ++level) {
        std::vector<InstanceId> upcoming;
        for (const auto& u : frontier) {
            for (const auto& n : o.neighbors(u, dir)) {
                const auto& v = n.instance->id;
                const auto [it, discovered] = depth.try_emplace(v, level + 1);
                if (discovered) {
                    upcoming.push_back(v);
                    next.visible.insert(v);
                }
                if (it->second == level + 1) {
                    next.provenance[v].insert(u);
                    next.expanded.insert(u);
                }
            }
        }
        frontier = std::move(upcoming);
    }
    next.edges = induced_edges(o, next.visible);
    return next;
}

void check_graph_state(const Ontology& o, const GraphState& s) {
    const auto bad = [](const std::string& message, const InstanceId& id) {
        throw Error(ErrorCode::InvalidArgument, "invalid graph state: " + message, id.str());
    };
    for (const auto& id : s.visible) {
        o.instance(id);
    }
    for (const auto& id : s.roots) {
        if (!s.visible.contains(id)) bad("root '" + id.str() + "' is not visible", id);
        if (std::count(s.roots.begin(), s.roots.end(), id) > 1) bad("root '" + id.str() + "' is repeated", id);
    }
    for (const auto& id : s.expanded) {
        if (!s.visible.contains(id)) bad("expanded node '" + id.str() + "' is not visible", id);
    }
    if (s.focus && !s.visible.contains(*s.focus)) {
        bad("focus '" + s.focus->str() + "' is not visible", *s.focus);
    }
    if (s.layout.mode != LayoutMode::Radial && (!s.layout.anchor || !s.visible.contains(*s.layout.anchor))) {
        bad("tree layout needs a visible anchor", s.layout.anchor.value_or(InstanceId{}));
    }
    for (const auto& id : s.visible) {
        if (s.is_root(id)) {
            if (s.provenance.contains(id)) bad("root '" + id.str() + "' has provenance", id);
            continue;
        }
        const auto it = s.provenance.find(id);
        if (it == s.provenance.end() || it->second.empty()) bad("node '" + id.str() + "' has no provenance", id);
    }
    for (const auto& [id, sources] : s.provenance) {
        if (!s.visible.contains(id)) bad("provenance for hidden node '" + id.str() + "'", id);
        for (const auto& src : sources) {
            if (!s.expanded.contains(src)) bad("provenance source '" + src.str() + "' is not expanded", src);
        }
    }
}

}  // namespace ontofm
