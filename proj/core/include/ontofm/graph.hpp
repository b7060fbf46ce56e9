#pragma once

#include "ontofm/ontology.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

namespace ontofm {

inline constexpr std::size_t kDefaultTreeDepth = 3;

enum class LayoutMode { Radial, TreeUnder, TreeAbove };
enum class TreeDirection { Under, Above };

std::string_view to_string(LayoutMode mode) noexcept;
std::optional<LayoutMode> parse_layout_mode(std::string_view s) noexcept;
std::optional<TreeDirection> parse_tree_direction(std::string_view s) noexcept;

struct Layout {
    LayoutMode mode = LayoutMode::Radial;
    std::optional<InstanceId> anchor;  ///< tree root for TreeUnder/TreeAbove

    friend bool operator==(const Layout&, const Layout&) = default;
};

/// Structural state of the visualization pane.
///
/// Invariants: roots, expanded and focus are visible; every visible non-root
/// node has a non-empty provenance whose members are expanded nodes; edges
/// are exactly the ontology relations between visible nodes.
struct GraphState {
    std::set<InstanceId> visible;
    std::set<Relation> edges;
    std::vector<InstanceId> roots;
    std::set<InstanceId> expanded;
    std::map<InstanceId, std::set<InstanceId>> provenance;
    std::optional<InstanceId> focus;
    Layout layout;

    bool is_root(const InstanceId& id) const;

    friend bool operator==(const GraphState&, const GraphState&) = default;
};

/// Relations whose endpoints are both in `visible`.
std::set<Relation> induced_edges(const Ontology& o, const std::set<InstanceId>& visible);

/// Terms plus their direct neighbours, each term expanded, focus on the
/// first term. Throws Error(UnknownInstance).
GraphState initial_graph(const Ontology& o, std::span<const InstanceId> terms);

/// Expands a collapsed node or collapses an expanded one. Collapsing removes
/// the node from every provenance set and cascades: nodes left without
/// provenance disappear together with their own contributions. Roots never
/// disappear. Throws Error(NodeNotVisible).
GraphState toggle(const Ontology& o, const GraphState& s, const InstanceId& node);

/// Focus on a visible node, radial layout. Throws Error(NodeNotVisible).
GraphState center(const GraphState& s, const InstanceId& node);

/// Breadth-first tree from `node` along outgoing (Under) or incoming (Above)
/// edges, at most `depth_limit` levels deep. Provenance holds BFS parents.
/// Throws Error(NodeNotVisible).
GraphState tree(const Ontology& o, const GraphState& s, const InstanceId& node, TreeDirection direction,
                std::size_t depth_limit = kDefaultTreeDepth);

/// Checks a state received from a client against the ontology: ids resolve
/// (Error(UnknownInstance)) and the structural invariants hold
/// (Error(InvalidArgument)). Edges are not checked; use induced_edges.
void check_graph_state(const Ontology& o, const GraphState& s);

}  // namespace ontofm
