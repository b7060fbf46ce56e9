#include "ontofm/ontology.hpp"

#include "ontofm/error.hpp"
#include "ontofm/text.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ontofm {

const TypedValue* Instance::property(std::string_view name) const {
    const auto it = properties.find(name);
    return it == properties.end() ? nullptr : &it->second;
}

const std::string* Instance::path() const {
    const auto* v = property(kPathProperty);
    if (v == nullptr) {
        return nullptr;
    }
    const auto* p = std::get_if<Path>(v);
    return p == nullptr ? nullptr : &p->value;
}

namespace {

void require_id(std::string_view id, std::string_view what, std::string_view context) {
    if (id.empty() || text::is_blank(id)) {
        throw Error(ErrorCode::ValidationError,
                    std::string(what) + " id must be non-empty" +
                        (context.empty() ? std::string() : " (" + std::string(context) + ")"),
                    std::string(id));
    }
}

}  // namespace

Ontology::Ontology() {
    concepts_ = {Concept{kDateConcept, "Date"}, Concept{kFileConcept, "File"},
                 Concept{kFolderConcept, "Folder"}};
    build_indexes();
}

Ontology::Ontology(const Ontology& other)
    : concepts_(other.concepts_), instances_(other.instances_), relations_(other.relations_) {
    build_indexes();
}

Ontology& Ontology::operator=(const Ontology& other) {
    if (this != &other) {
        concepts_ = other.concepts_;
        instances_ = other.instances_;
        relations_ = other.relations_;
        build_indexes();
    }
    return *this;
}

Ontology Ontology::build(std::vector<Concept> concepts, std::vector<Instance> instances,
                         std::vector<Relation> relations, LoadReport* report) {
    std::vector<std::string> warnings;

    std::sort(concepts.begin(), concepts.end(), [](const Concept& a, const Concept& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < concepts.size(); ++i) {
        require_id(concepts[i].id.str(), "concept", concepts[i].label);
        if (i > 0 && concepts[i].id == concepts[i - 1].id) {
            throw Error(ErrorCode::ValidationError, "duplicate concept id '" + concepts[i].id.str() + "'",
                        concepts[i].id.str());
        }
    }
    for (const auto& reserved : {kFileConcept, kFolderConcept, kDateConcept}) {
        const auto it = std::lower_bound(concepts.begin(), concepts.end(), reserved,
                                         [](const Concept& c, const ConceptId& id) { return c.id < id; });
        if (it == concepts.end() || it->id != reserved) {
            concepts.insert(it, Concept{reserved, reserved.str()});
            warnings.push_back("reserved concept '" + reserved.str() + "' was missing and has been created empty");
        }
    }
    const auto has_concept = [&](const ConceptId& id) {
        const auto it = std::lower_bound(concepts.begin(), concepts.end(), id,
                                         [](const Concept& c, const ConceptId& key) { return c.id < key; });
        return it != concepts.end() && it->id == id;
    };

    std::sort(instances.begin(), instances.end(), [](const Instance& a, const Instance& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        require_id(inst.id.str(), "instance", inst.label);
        if (i > 0 && inst.id == instances[i - 1].id) {
            throw Error(ErrorCode::ValidationError, "duplicate instance id '" + inst.id.str() + "'", inst.id.str());
        }
        if (!has_concept(inst.concept_id)) {
            throw Error(ErrorCode::ValidationError,
                        "instance '" + inst.id.str() + "' refers to unknown concept '" + inst.concept_id.str() + "'",
                        inst.concept_id.str());
        }
        for (const auto& [name, value] : inst.properties) {
            if (name.empty() || text::is_blank(name)) {
                throw Error(ErrorCode::ValidationError, "instance '" + inst.id.str() + "' has an unnamed property",
                            inst.id.str());
            }
        }
        if (inst.concept_id == kFileConcept) {
            if (inst.path() == nullptr) {
                throw Error(ErrorCode::ValidationError,
                            "File instance '" + inst.id.str() + "' lacks a path-typed \"path\" property",
                            inst.id.str());
            }
        } else if (inst.concept_id == kDateConcept) {
            const auto* v = inst.property(kDateValueProperty);
            if (v == nullptr || !std::holds_alternative<Date>(*v)) {
                throw Error(ErrorCode::ValidationError,
                            "Date instance '" + inst.id.str() + "' lacks a date-typed \"value\" property",
                            inst.id.str());
            }
        }
    }
    const auto has_instance = [&](const InstanceId& id) {
        const auto it = std::lower_bound(instances.begin(), instances.end(), id,
                                         [](const Instance& a, const InstanceId& b) { return a.id < b; });
        return it != instances.end() && it->id == id;
    };

    for (const auto& r : relations) {
        for (const auto* end : {&r.subject, &r.object}) {
            if (!has_instance(*end)) {
                throw Error(ErrorCode::ValidationError,
                            "relation (" + r.subject.str() + ", " + r.predicate + ", " + r.object.str() +
                                ") refers to unknown instance '" + end->str() + "'",
                            end->str());
            }
        }
        if (r.predicate.empty() || text::is_blank(r.predicate)) {
            throw Error(ErrorCode::ValidationError,
                        "relation from '" + r.subject.str() + "' has an empty predicate", r.subject.str());
        }
    }
    std::sort(relations.begin(), relations.end());
    const auto before = relations.size();
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
    if (relations.size() != before) {
        warnings.push_back("collapsed " + std::to_string(before - relations.size()) + " duplicate relation(s)");
    }

    Ontology o;
    o.concepts_ = std::move(concepts);
    o.instances_ = std::move(instances);
    o.relations_ = std::move(relations);
    o.build_indexes();

    if (report != nullptr) {
        report->concepts = o.concepts_.size();
        report->instances = o.instances_.size();
        report->relations = o.relations_.size();
        report->warnings = std::move(warnings);
    }
    return o;
}

void Ontology::build_indexes() {
    concept_index_.clear();
    instance_index_.clear();
    by_concept_.clear();
    predicates_.clear();
    out_.assign(instances_.size(), {});
    in_.assign(instances_.size(), {});
    label_index_.clear();
    file_by_path_.clear();

    for (std::size_t i = 0; i < concepts_.size(); ++i) {
        concept_index_.emplace(concepts_[i].id, i);
        by_concept_[concepts_[i].id];
    }
    for (std::size_t i = 0; i < instances_.size(); ++i) {
        instance_index_.emplace(instances_[i].id, i);
        by_concept_[instances_[i].concept_id].push_back(i);
        if (is_file(instances_[i])) {
            if (const auto* p = instances_[i].path()) {
                file_by_path_.try_emplace(*p, i);
            }
        }
    }

    std::unordered_map<std::string, std::size_t> predicate_ids;
    for (const auto& r : relations_) {
        auto [it, inserted] = predicate_ids.try_emplace(r.predicate, predicates_.size());
        if (inserted) {
            predicates_.push_back(r.predicate);
        }
        const auto s = instance_index_.at(r.subject);
        const auto t = instance_index_.at(r.object);
        out_[s].push_back(Edge{it->second, t});
        in_[t].push_back(Edge{it->second, s});
    }

    label_index_.reserve(instances_.size());
    for (const auto& inst : instances_) {
        label_index_.push_back(LabelEntry{text::lower(inst.label), &inst});
    }
    std::sort(label_index_.begin(), label_index_.end(), [](const LabelEntry& a, const LabelEntry& b) {
        return std::tie(a.folded, a.instance->label, a.instance->concept_id, a.instance->id) <
               std::tie(b.folded, b.instance->label, b.instance->concept_id, b.instance->id);
    });
}

const Concept* Ontology::find_concept(const ConceptId& id) const {
    const auto it = concept_index_.find(id);
    return it == concept_index_.end() ? nullptr : &concepts_[it->second];
}

const Instance* Ontology::find_instance(const InstanceId& id) const {
    const auto it = instance_index_.find(id);
    return it == instance_index_.end() ? nullptr : &instances_[it->second];
}

std::size_t Ontology::index_of(const InstanceId& id) const {
    const auto it = instance_index_.find(id);
    if (it == instance_index_.end()) {
        throw Error(ErrorCode::UnknownInstance, "unknown instance '" + id.str() + "'", id.str());
    }
    return it->second;
}

const Instance* Ontology::file_at(std::string_view path) const {
    const auto it = file_by_path_.find(path);
    return it == file_by_path_.end() ? nullptr : &instances_[it->second];
}

const Instance& Ontology::instance(const InstanceId& id) const {
    return instances_[index_of(id)];
}

std::vector<const Instance*> Ontology::instances_of(const ConceptId& c) const {
    const auto it = by_concept_.find(c);
    if (it == by_concept_.end()) {
        throw Error(ErrorCode::UnknownConcept, "unknown concept '" + c.str() + "'", c.str());
    }
    std::vector<const Instance*> out;
    out.reserve(it->second.size());
    for (const auto idx : it->second) {
        out.push_back(&instances_[idx]);
    }
    return out;
}

std::vector<Neighbor> Ontology::neighbors(const InstanceId& i, Direction direction) const {
    const auto idx = index_of(i);
    std::set<std::pair<std::string_view, std::size_t>> seen;
    if (direction != Direction::In) {
        for (const auto& e : out_[idx]) {
            seen.emplace(predicates_[e.predicate], e.other);
        }
    }
    if (direction != Direction::Out) {
        for (const auto& e : in_[idx]) {
            seen.emplace(predicates_[e.predicate], e.other);
        }
    }
    std::vector<Neighbor> out;
    out.reserve(seen.size());
    for (const auto& [predicate, other] : seen) {
        out.push_back(Neighbor{std::string(predicate), &instances_[other]});
    }
    // Instances are stored in id order, so (predicate, index) order is (predicate, id) order.
    return out;
}

std::vector<const Instance*> Ontology::adjacent(const InstanceId& i) const {
    const auto idx = index_of(i);
    std::vector<std::size_t> others;
    others.reserve(out_[idx].size() + in_[idx].size());
    for (const auto& e : out_[idx]) {
        others.push_back(e.other);
    }
    for (const auto& e : in_[idx]) {
        others.push_back(e.other);
    }
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    std::vector<const Instance*> out;
    out.reserve(others.size());
    for (const auto o : others) {
        out.push_back(&instances_[o]);
    }
    return out;
}

std::vector<const Instance*> Ontology::related_files(const InstanceId& i) const {
    const auto& self = instance(i);
    if (is_file(self)) {
        return {&self};
    }
    auto adj = adjacent(i);
    std::erase_if(adj, [this](const Instance* inst) { return !is_file(*inst); });
    return adj;
}

bool operator==(const Ontology& a, const Ontology& b) {
    return a.concepts_ == b.concepts_ && a.instances_ == b.instances_ && a.relations_ == b.relations_;
}

}  // namespace ontofm
