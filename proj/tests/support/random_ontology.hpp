#pragma once

#include "ontofm/ontology.hpp"
#include "ontofm/search.hpp"

#include <random>
#include <string>
#include <vector>

namespace ontofm::testing {

inline const std::vector<std::string> kRandomFolders = {"/r", "/r/a", "/r/a/b", "/r/c", "/s"};

inline Date random_date(std::mt19937& rng) {
    std::uniform_int_distribution<int> year(2010, 2012);
    std::uniform_int_distribution<unsigned> month(1, 12);
    std::uniform_int_distribution<unsigned> day(1, 28);
    return Date{year(rng), month(rng), day(rng)};
}

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

/// Random ontology with at most `max_instances` instances and `max_relations`
/// relation draws (duplicates and self loops included). Instances 0..2 are
/// always a Date, a Person with an "age" and a File, so generated
/// constraints are valid.
inline Ontology random_ontology(std::mt19937& rng, std::size_t max_instances = 50, std::size_t max_relations = 200) {
    static const std::vector<std::string> labels = {"Alpha", "alpha", "Beta report", "gamma.txt", "Delta",
                                                    "alphabet", "Report", "notes", "Zeta", "beta"};
    static const std::vector<std::string> predicates = {"rel", "partOf", "tag", "authoredBy"};
    static const std::vector<std::string> concepts = {"Person", "Project", "Topic", "Date", "File"};

    std::vector<Concept> cs = {{ConceptId{"Person"}, "Person"}, {ConceptId{"Project"}, "Project"},
                               {ConceptId{"Topic"}, "Topic"},   {ConceptId{"Date"}, "Date"},
                               {ConceptId{"File"}, "File"},     {ConceptId{"Folder"}, "Folder"}};

    const auto n = std::uniform_int_distribution<std::size_t>(3, max_instances)(rng);
    std::vector<Instance> instances;
    for (std::size_t i = 0; i < n; ++i) {
        Instance inst;
        inst.id = InstanceId{"i" + std::to_string(i)};
        const std::string concept_name = i == 0 ? "Date" : i == 1 ? "Person" : i == 2 ? "File" : pick(rng, concepts);
        inst.concept_id = ConceptId{concept_name};
        inst.label = pick(rng, labels);
        if (concept_name == "Date") {
            const auto d = random_date(rng);
            inst.properties.emplace("value", d);
            inst.label = d.to_string();
        } else if (concept_name == "File") {
            inst.label = pick(rng, labels) + std::to_string(i % 7);
            inst.properties.emplace("path", Path{pick(rng, kRandomFolders) + "/" + inst.label});
        } else if (concept_name == "Person" && (i == 1 || rng() % 2 == 0)) {
            inst.properties.emplace("age", Number{static_cast<double>(rng() % 80)});
        }
        instances.push_back(std::move(inst));
    }

    const auto m = std::uniform_int_distribution<std::size_t>(0, max_relations)(rng);
    std::vector<Relation> relations;
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    for (std::size_t k = 0; k < m; ++k) {
        relations.push_back(Relation{InstanceId{"i" + std::to_string(any(rng))}, pick(rng, predicates),
                                     InstanceId{"i" + std::to_string(any(rng))}});
    }
    return Ontology::build(std::move(cs), std::move(instances), std::move(relations));
}

inline Constraint random_constraint(std::mt19937& rng) {
    Constraint c;
    switch (rng() % 7) {
        case 0:
            c = {ConceptId{"Date"}, "value", ConstraintOp::Before, {random_date(rng)}};
            break;
        case 1:
            c = {ConceptId{"Date"}, "value", ConstraintOp::After, {random_date(rng)}};
            break;
        case 2: {
            auto a = random_date(rng);
            auto b = random_date(rng);
            if (b < a) std::swap(a, b);
            c = {ConceptId{"Date"}, "value", ConstraintOp::Between, {a, b}};
            break;
        }
        case 3:
            c = {ConceptId{"Person"}, "label", ConstraintOp::Eq, {Text{rng() % 2 ? "ALPHA" : "Zeta"}}};
            break;
        case 4:
            c = {ConceptId{"Person"}, "label", ConstraintOp::Contains, {Text{rng() % 2 ? "ph" : "rep"}}};
            break;
        case 5:
            c = {ConceptId{"Person"}, "age", ConstraintOp::Gt, {Number{static_cast<double>(rng() % 80)}}};
            break;
        default:
            c = {ConceptId{"Person"}, "age", ConstraintOp::Lt, {Number{static_cast<double>(rng() % 80)}}};
            break;
    }
    return c;
}

/// Up to 4 terms (repeats allowed), random scope and 0..2 constraints.
inline Query random_query(std::mt19937& rng, const Ontology& o, bool with_filters = true) {
    Query q;
    const auto& all = o.instances();
    const auto terms = rng() % 5;
    for (std::size_t t = 0; t < terms; ++t) {
        q.terms.push_back(all[rng() % all.size()].id);
    }
    if (with_filters && rng() % 2 == 0) {
        std::vector<std::string> folders;
        for (const auto& f : kRandomFolders) {
            if (rng() % 3 == 0) folders.push_back(f);
        }
        if (folders.empty()) folders.push_back(pick(rng, kRandomFolders));
        q.scope = Scope::folders(folders);
    }
    if (with_filters) {
        const auto k = rng() % 3;
        for (std::size_t i = 0; i < k; ++i) {
            q.constraints.push_back(random_constraint(rng));
        }
    }
    return q;
}

}  // namespace ontofm::testing
