#include "ontofm/json_codec.hpp"

#include "json_detail.hpp"
#include "ontofm/error.hpp"

namespace ontofm::json_codec {

namespace {

json ids_to_json(const auto& ids) {
    json out = json::array();
    for (const auto& id : ids) {
        out.push_back(id.str());
    }
    return out;
}

std::vector<InstanceId> ids_from_json(const json& parent, std::string_view key, const std::string& where) {
    const auto it = parent.find(key);
    if (it == parent.end()) {
        detail::structure_error(where, "missing field '" + std::string(key) + "'");
    }
    const auto here = where + "/" + std::string(key);
    detail::expect_array(*it, here);
    std::vector<InstanceId> out;
    for (std::size_t i = 0; i < it->size(); ++i) {
        if (!(*it)[i].is_string()) {
            detail::structure_error(here + "/" + std::to_string(i), "expected a string");
        }
        out.emplace_back((*it)[i].get<std::string>());
    }
    return out;
}

std::optional<std::string> optional_id(const json& parent, std::string_view key, const std::string& where) {
    const auto* v = detail::optional_field(parent, key);
    if (v == nullptr || v->is_null()) {
        return std::nullopt;
    }
    if (!v->is_string()) {
        detail::structure_error(where + "/" + std::string(key), "expected a string or null");
    }
    return v->get<std::string>();
}

TypedValue value_from_json(const json& j, ConstraintOp op, const std::string& where) {
    if (j.is_object()) {
        return detail::typed_value_from_json(j, where);
    }
    if (j.is_number()) {
        return Number{j.get<double>()};
    }
    if (!j.is_string()) {
        detail::structure_error(where, "expected a number, string or typed value");
    }
    const auto raw = j.get<std::string>();
    if (op == ConstraintOp::Eq) {
        return infer_value(raw);
    }
    std::optional<TypedValue> v;
    switch (op) {
        case ConstraintOp::Contains: v = Text{raw}; break;
        case ConstraintOp::Lt:
        case ConstraintOp::Gt: v = parse_typed(ValueType::Number, raw); break;
        default: v = parse_typed(ValueType::Date, raw); break;
    }
    if (!v) {
        throw Error(ErrorCode::InvalidConstraint,
                    "value '" + raw + "' does not fit operator '" + std::string(to_string(op)) + "'", raw);
    }
    return std::move(*v);
}

}  // namespace

json to_json(const Suggestion& s) {
    return {{"instance", s.instance.str()},
            {"label", s.label},
            {"concept", s.concept_id.str()},
            {"match_kind", std::string(to_string(s.match_kind))}};
}

json to_json(const ScoredFile& f) {
    const auto* path = f.file->path();
    return {{"file", f.file->id.str()},
            {"path", path ? json(*path) : json(nullptr)},
            {"score", f.score},
            {"matched_terms", ids_to_json(f.matched_terms)}};
}

json to_json(const FolderNode& f) {
    return {{"path", f.path}, {"name", f.name}, {"has_children", f.has_children}};
}

json to_json(const FileEntry& f) {
    return {{"path", f.path},
            {"name", f.name},
            {"size_bytes", f.size_bytes},
            {"created", format_timestamp(f.created)},
            {"modified", format_timestamp(f.modified)},
            {"created_is_fallback", f.created_is_fallback},
            {"instance", f.instance ? json(f.instance->str()) : json(nullptr)}};
}

json to_json(const LoadReport& r) {
    return {{"status", "ok"},
            {"concepts", r.concepts},
            {"instances", r.instances},
            {"relations", r.relations},
            {"warnings", r.warnings}};
}

json to_json(const SyncReport& r) {
    return {{"registered", r.registered},
            {"unregistered_paths", r.unregistered_paths},
            {"missing_paths", r.missing_paths}};
}

json to_json(const TypedValue& v) {
    return detail::typed_value_to_json(v);
}

json to_json(const Constraint& c) {
    json out = {{"concept", c.concept_id.str()}, {"property", c.property}, {"op", std::string(to_string(c.op))}};
    if (c.values.size() == 1) {
        out["value"] = to_json(c.values.front());
    } else {
        out["values"] = json::array();
        for (const auto& v : c.values) {
            out["values"].push_back(to_json(v));
        }
    }
    return out;
}

json to_json(const std::map<ConceptId, std::vector<InstanceId>>& concepts) {
    json out = json::object();
    for (const auto& [cid, ids] : concepts) {
        out[cid.str()] = ids_to_json(ids);
    }
    return out;
}

json graph_to_json(const Ontology& o, const GraphState& s) {
    json nodes = json::array();
    for (const auto& id : s.visible) {
        const auto& inst = o.instance(id);
        nodes.push_back({{"id", id.str()}, {"label", inst.label}, {"concept", inst.concept_id.str()}});
    }
    json edges = json::array();
    for (const auto& e : s.edges) {
        edges.push_back({{"subject", e.subject.str()}, {"predicate", e.predicate}, {"object", e.object.str()}});
    }
    json provenance = json::object();
    for (const auto& [id, sources] : s.provenance) {
        provenance[id.str()] = ids_to_json(sources);
    }
    return {{"nodes", nodes},
            {"edges", edges},
            {"roots", ids_to_json(s.roots)},
            {"expanded", ids_to_json(s.expanded)},
            {"provenance", provenance},
            {"focus", s.focus ? json(s.focus->str()) : json(nullptr)},
            {"layout",
             {{"mode", std::string(to_string(s.layout.mode))},
              {"anchor", s.layout.anchor ? json(s.layout.anchor->str()) : json(nullptr)}}}};
}

GraphState graph_from_json(const Ontology& o, const json& j) {
    const std::string where = "/state";
    detail::expect_object(j, where, {"nodes", "edges", "roots", "expanded", "provenance", "focus", "layout"});
    GraphState s;

    const auto* nodes = detail::optional_field(j, "nodes");
    if (nodes == nullptr) {
        detail::structure_error(where, "missing field 'nodes'");
    }
    detail::expect_array(*nodes, where + "/nodes");
    for (std::size_t i = 0; i < nodes->size(); ++i) {
        const auto node_where = where + "/nodes/" + std::to_string(i);
        const auto& n = detail::expect_object((*nodes)[i], node_where, {"id", "label", "concept"});
        s.visible.insert(InstanceId{detail::expect_string(n, "id", node_where)});
    }
    if (const auto* edges = detail::optional_field(j, "edges")) {
        detail::expect_array(*edges, where + "/edges");
    }
    s.roots = ids_from_json(j, "roots", where);
    const auto expanded = ids_from_json(j, "expanded", where);
    s.expanded.insert(expanded.begin(), expanded.end());

    if (const auto* prov = detail::optional_field(j, "provenance")) {
        if (!prov->is_object()) {
            detail::structure_error(where + "/provenance", "expected an object");
        }
        for (const auto& [key, value] : prov->items()) {
            const auto sources = ids_from_json(*prov, key, where + "/provenance");
            s.provenance[InstanceId{key}].insert(sources.begin(), sources.end());
        }
    }
    if (auto focus = optional_id(j, "focus", where)) {
        s.focus = InstanceId{*focus};
    }
    if (const auto* layout = detail::optional_field(j, "layout")) {
        const auto lw = where + "/layout";
        detail::expect_object(*layout, lw, {"mode", "anchor"});
        const auto mode_name = detail::expect_string(*layout, "mode", lw);
        const auto mode = parse_layout_mode(mode_name);
        if (!mode) {
            detail::structure_error(lw + "/mode", "unknown layout mode '" + mode_name + "'");
        }
        s.layout.mode = *mode;
        if (auto anchor = optional_id(*layout, "anchor", lw)) {
            s.layout.anchor = InstanceId{*anchor};
        }
    }
    check_graph_state(o, s);
    s.edges = induced_edges(o, s.visible);
    return s;
}

Constraint constraint_from_json(const json& j) {
    const std::string where = "/constraints";
    detail::expect_object(j, where, {"concept", "property", "op", "value", "values"});
    Constraint c;
    c.concept_id = ConceptId{detail::expect_string(j, "concept", where)};
    c.property = detail::expect_string(j, "property", where);
    const auto op_name = detail::expect_string(j, "op", where);
    const auto op = parse_constraint_op(op_name);
    if (!op) {
        throw Error(ErrorCode::InvalidConstraint, "unknown constraint operator '" + op_name + "'", op_name);
    }
    c.op = *op;
    const auto* value = detail::optional_field(j, "value");
    const auto* values = detail::optional_field(j, "values");
    if ((value == nullptr) == (values == nullptr)) {
        detail::structure_error(where, "exactly one of 'value' or 'values' is required");
    }
    if (value != nullptr) {
        c.values.push_back(value_from_json(*value, c.op, where + "/value"));
    } else {
        detail::expect_array(*values, where + "/values");
        for (std::size_t i = 0; i < values->size(); ++i) {
            c.values.push_back(value_from_json((*values)[i], c.op, where + "/values/" + std::to_string(i)));
        }
    }
    check_constraint(c);
    return c;
}

Query query_from_json(const json& j, std::initializer_list<std::string_view> extra_keys) {
    if (!j.is_object()) {
        detail::structure_error("", "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        const bool known = key == "terms" || key == "scope" || key == "constraints" ||
                           std::find(extra_keys.begin(), extra_keys.end(), key) != extra_keys.end();
        if (!known) {
            throw ParseError("unknown field '" + key + "' at /", 0, 0, "/" + key);
        }
    }
    Query q;
    q.terms = ids_from_json(j, "terms", "");

    if (const auto* scope = detail::optional_field(j, "scope")) {
        detail::expect_object(*scope, "/scope", {"all", "folders"});
        const auto* all = detail::optional_field(*scope, "all");
        const auto* folders = detail::optional_field(*scope, "folders");
        if ((all == nullptr) == (folders == nullptr)) {
            detail::structure_error("/scope", "expected {\"all\":true} or {\"folders\":[...]}");
        }
        if (all != nullptr) {
            if (!all->is_boolean() || !all->get<bool>()) {
                detail::structure_error("/scope/all", "expected true");
            }
        } else {
            detail::expect_array(*folders, "/scope/folders");
            std::vector<std::string> paths;
            for (std::size_t i = 0; i < folders->size(); ++i) {
                if (!(*folders)[i].is_string()) {
                    detail::structure_error("/scope/folders/" + std::to_string(i), "expected a string");
                }
                paths.push_back((*folders)[i].get<std::string>());
            }
            q.scope = Scope::folders(paths);
        }
    }

    if (const auto* constraints = detail::optional_field(j, "constraints")) {
        detail::expect_array(*constraints, "/constraints");
        for (const auto& c : *constraints) {
            q.constraints.push_back(constraint_from_json(c));
        }
    }
    return q;
}

}  // namespace ontofm::json_codec
