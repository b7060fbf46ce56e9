#pragma once

#include "ontofm/ids.hpp"
#include "ontofm/typed_value.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontofm {

/// Reserved concept ids present in every loaded ontology.
inline const ConceptId kFileConcept{"File"};
inline const ConceptId kFolderConcept{"Folder"};
inline const ConceptId kDateConcept{"Date"};

/// Property names required on File and Date instances.
inline constexpr std::string_view kPathProperty = "path";
inline constexpr std::string_view kDateValueProperty = "value";

struct Concept {
    ConceptId id;
    std::string label;

    friend bool operator==(const Concept&, const Concept&) = default;
};

struct Instance {
    InstanceId id;
    std::string label;
    ConceptId concept_id;
    std::map<std::string, TypedValue, std::less<>> properties;

    const TypedValue* property(std::string_view name) const;

    /// The "path" property of a File instance, if present and Path-typed.
    const std::string* path() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct Relation {
    InstanceId subject;
    std::string predicate;
    InstanceId object;

    friend auto operator<=>(const Relation&, const Relation&) = default;
};

enum class Direction { Out, In, Both };

/// One adjacent instance together with the predicate of the connecting edge.
struct Neighbor {
    std::string predicate;
    const Instance* instance = nullptr;

    friend bool operator==(const Neighbor& a, const Neighbor& b) {
        return a.predicate == b.predicate && a.instance->id == b.instance->id;
    }
};

struct LoadReport {
    std::size_t concepts = 0;
    std::size_t instances = 0;
    std::size_t relations = 0;
    std::vector<std::string> warnings;
};

/// Immutable snapshot of a personal ontology with adjacency and label
/// indexes. Instances, concepts and relations are kept sorted by id (resp.
/// triple) so every query is deterministic. Pointers returned by the query
/// functions stay valid for the lifetime of the snapshot.
class Ontology {
public:
    /// Validates and indexes the given sets. Missing reserved concepts are
    /// created and reported as warnings; duplicate triples collapse.
    /// Throws Error(ValidationError) naming the offending id.
    static Ontology build(std::vector<Concept> concepts, std::vector<Instance> instances,
                          std::vector<Relation> relations, LoadReport* report = nullptr);

    Ontology();
    Ontology(const Ontology& other);
    Ontology& operator=(const Ontology& other);
    Ontology(Ontology&&) noexcept = default;
    Ontology& operator=(Ontology&&) noexcept = default;

    const std::vector<Concept>& concepts() const noexcept { return concepts_; }
    const std::vector<Instance>& instances() const noexcept { return instances_; }
    const std::vector<Relation>& relations() const noexcept { return relations_; }

    const Concept* find_concept(const ConceptId& id) const;
    const Instance* find_instance(const InstanceId& id) const;

    /// Throws Error(UnknownInstance).
    const Instance& instance(const InstanceId& id) const;

    bool is_file(const Instance& i) const noexcept { return i.concept_id == kFileConcept; }

    /// Instances of concept `c`, sorted by id. Throws Error(UnknownConcept).
    std::vector<const Instance*> instances_of(const ConceptId& c) const;

    /// Adjacent instances, deduplicated by (predicate, id) and sorted by it.
    /// Throws Error(UnknownInstance).
    std::vector<Neighbor> neighbors(const InstanceId& i, Direction direction) const;

    /// Distinct adjacent instances in either direction, sorted by id.
    std::vector<const Instance*> adjacent(const InstanceId& i) const;

    /// File instances directly related to `i` in either direction, or {i}
    /// itself when `i` is a File. Sorted by id. Throws Error(UnknownInstance).
    std::vector<const Instance*> related_files(const InstanceId& i) const;

    /// File instance whose "path" equals `path` exactly (lowest id on ties).
    const Instance* file_at(std::string_view path) const;

    struct LabelEntry {
        std::string folded;  ///< lower-cased label
        const Instance* instance;
    };
    /// All instances keyed by folded label, sorted by (folded, label, concept, id).
    const std::vector<LabelEntry>& label_index() const noexcept { return label_index_; }

    /// Set equality of concepts, instances and relations.
    friend bool operator==(const Ontology& a, const Ontology& b);

private:
    struct Edge {
        std::size_t predicate;  // index into predicates_
        std::size_t other;      // index into instances_
    };

    std::size_t index_of(const InstanceId& id) const;
    void build_indexes();

    std::vector<Concept> concepts_;
    std::vector<Instance> instances_;
    std::vector<Relation> relations_;

    std::unordered_map<ConceptId, std::size_t> concept_index_;
    std::unordered_map<InstanceId, std::size_t> instance_index_;
    std::unordered_map<ConceptId, std::vector<std::size_t>> by_concept_;
    std::vector<std::string> predicates_;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<Edge>> in_;
    std::vector<LabelEntry> label_index_;
    std::map<std::string, std::size_t, std::less<>> file_by_path_;
};

/// Parses and validates an ontology document (".ontofm.json").
/// Throws ParseError (with line/column for syntax errors, JSON pointer detail
/// for structural ones) or Error(ValidationError).
Ontology load_ontology(std::string_view document, LoadReport* report = nullptr);

/// Reads and loads a file. Throws Error(IoError) when unreadable.
Ontology load_ontology_file(const std::string& path, LoadReport* report = nullptr);

/// Canonical document: sorted, pretty-printed, reloads to an equal snapshot.
std::string serialize_ontology(const Ontology& o);

}  // namespace ontofm
