#include "json_detail.hpp"
#include "ontofm/ontology.hpp"

#include <fstream>
#include <sstream>

namespace ontofm {

namespace detail {

json parse_document(std::string_view document) {
    try {
        return json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        // e.byte is the 1-based offset of the offending character.
        std::size_t line = 1;
        std::size_t column = 1;
        const auto limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, document.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (document[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON", line, column);
    }
}

}  // namespace detail

using detail::json;

Ontology load_ontology(std::string_view document, LoadReport* report) {
    const auto root = detail::parse_document(document);
    detail::expect_object(root, "", {"concepts", "instances", "relations"});

    std::vector<Concept> concepts;
    if (const auto* arr = detail::optional_field(root, "concepts")) {
        detail::expect_array(*arr, "/concepts");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const auto where = "/concepts/" + std::to_string(i);
            const auto& c = detail::expect_object((*arr)[i], where, {"id", "label"});
            auto id = detail::expect_string(c, "id", where);
            auto label = detail::optional_field(c, "label") ? detail::expect_string(c, "label", where) : id;
            concepts.push_back(Concept{ConceptId{std::move(id)}, std::move(label)});
        }
    }

    std::vector<Instance> instances;
    if (const auto* arr = detail::optional_field(root, "instances")) {
        detail::expect_array(*arr, "/instances");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const auto where = "/instances/" + std::to_string(i);
            const auto& j = detail::expect_object((*arr)[i], where, {"id", "label", "concept", "properties"});
            Instance inst;
            inst.id = InstanceId{detail::expect_string(j, "id", where)};
            inst.label = detail::optional_field(j, "label") ? detail::expect_string(j, "label", where) : inst.id.str();
            inst.concept_id = ConceptId{detail::expect_string(j, "concept", where)};
            if (const auto* props = detail::optional_field(j, "properties")) {
                if (!props->is_object()) {
                    detail::structure_error(where + "/properties", "expected an object");
                }
                for (const auto& [name, value] : props->items()) {
                    inst.properties.emplace(name,
                                            detail::typed_value_from_json(value, where + "/properties/" + name));
                }
            }
            instances.push_back(std::move(inst));
        }
    }

    std::vector<Relation> relations;
    if (const auto* arr = detail::optional_field(root, "relations")) {
        detail::expect_array(*arr, "/relations");
        for (std::size_t i = 0; i < arr->size(); ++i) {
            const auto where = "/relations/" + std::to_string(i);
            const auto& j = detail::expect_object((*arr)[i], where, {"subject", "predicate", "object"});
            relations.push_back(Relation{InstanceId{detail::expect_string(j, "subject", where)},
                                         detail::expect_string(j, "predicate", where),
                                         InstanceId{detail::expect_string(j, "object", where)}});
        }
    }

    return Ontology::build(std::move(concepts), std::move(instances), std::move(relations), report);
}

Ontology load_ontology_file(const std::string& path, LoadReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read ontology file '" + path + "'", path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_ontology(buf.str(), report);
}

std::string serialize_ontology(const Ontology& o) {
    json concepts = json::array();
    for (const auto& c : o.concepts()) {
        concepts.push_back({{"id", c.id.str()}, {"label", c.label}});
    }
    json instances = json::array();
    for (const auto& inst : o.instances()) {
        json props = json::object();
        for (const auto& [name, value] : inst.properties) {
            props[name] = detail::typed_value_to_json(value);
        }
        instances.push_back(
            {{"id", inst.id.str()}, {"label", inst.label}, {"concept", inst.concept_id.str()}, {"properties", props}});
    }
    json relations = json::array();
    for (const auto& r : o.relations()) {
        relations.push_back({{"subject", r.subject.str()}, {"predicate", r.predicate}, {"object", r.object.str()}});
    }
    json doc = {{"concepts", concepts}, {"instances", instances}, {"relations", relations}};
    return doc.dump(2) + "\n";
}

}  // namespace ontofm
