#include "ontofm/search.hpp"

#include "ontofm/error.hpp"
#include "ontofm/paths.hpp"
#include "ontofm/text.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace ontofm {

std::string_view to_string(MatchKind kind) noexcept {
    return kind == MatchKind::Prefix ? "prefix" : "substring";
}

std::vector<Suggestion> suggest(const Ontology& o, std::string_view typed, std::size_t limit) {
    if (limit == 0) {
        throw Error(ErrorCode::InvalidArgument, "suggestion limit must be at least 1");
    }
    std::vector<Suggestion> out;
    if (typed.empty()) {
        return out;
    }
    const auto needle = text::lower(typed);
    const auto& index = o.label_index();

    const auto first = std::lower_bound(index.begin(), index.end(), needle,
                                        [](const Ontology::LabelEntry& e, const std::string& key) {
                                            return e.folded < key;
                                        });
    for (auto it = first; it != index.end() && it->folded.starts_with(needle) && out.size() < limit; ++it) {
        out.push_back(Suggestion{it->instance->id, it->instance->label, it->instance->concept_id, MatchKind::Prefix});
    }
    for (auto it = index.begin(); it != index.end() && out.size() < limit; ++it) {
        const auto pos = it->folded.find(needle);
        if (pos != std::string::npos && pos != 0) {
            out.push_back(
                Suggestion{it->instance->id, it->instance->label, it->instance->concept_id, MatchKind::Substring});
        }
    }
    return out;
}

Scope Scope::folders(std::span<const std::string> folders) {
    if (folders.empty()) {
        throw Error(ErrorCode::InvalidArgument, "folder scope needs at least one folder");
    }
    std::set<std::string> normalized;
    for (const auto& f : folders) {
        auto n = paths::normalize(f);
        if (!n) {
            throw Error(ErrorCode::InvalidArgument, "scope folder '" + f + "' is not an absolute path", f);
        }
        normalized.insert(std::move(*n));
    }
    Scope s;
    s.folders_.assign(normalized.begin(), normalized.end());
    return s;
}

bool in_scope(const Instance& file, const Scope& scope) {
    if (scope.is_all()) {
        return true;
    }
    const auto* path = file.path();
    if (path == nullptr) {
        return false;
    }
    return std::any_of(scope.selected().begin(), scope.selected().end(),
                       [&](const std::string& folder) { return paths::is_under(*path, folder); });
}

void validate_constraint(const Ontology& o, const Constraint& c) {
    check_constraint(c);
    if (o.find_concept(c.concept_id) == nullptr) {
        throw Error(ErrorCode::InvalidConstraint, "unknown concept '" + c.concept_id.str() + "' in constraint",
                    c.concept_id.str());
    }
    if (c.property == "label") {
        return;
    }
    bool present = false;
    bool comparable = false;
    const auto want = type_of(c.values.front());
    for (const auto* inst : o.instances_of(c.concept_id)) {
        if (const auto* v = inst->property(c.property)) {
            present = true;
            comparable = comparable || want == ValueType::Text || type_of(*v) == want;
        }
    }
    if (!present) {
        throw Error(ErrorCode::InvalidConstraint,
                    "no instance of '" + c.concept_id.str() + "' has a property '" + c.property + "'", c.property);
    }
    if (!comparable) {
        throw Error(ErrorCode::InvalidConstraint,
                    "property '" + c.concept_id.str() + "." + c.property + "' holds no " +
                        std::string(to_string(want)) + " values",
                    c.property);
    }
}

bool matches_constraint(const Ontology& o, const Instance& file, const Constraint& c) {
    for (const auto* other : o.adjacent(file.id)) {
        if (other->concept_id == c.concept_id && satisfies(*other, c)) {
            return true;
        }
    }
    return false;
}

std::vector<const Instance*> apply_constraint(const Ontology& o, std::span<const Instance* const> files,
                                              const Constraint& c) {
    validate_constraint(o, c);
    std::vector<const Instance*> out;
    for (const auto* f : files) {
        if (matches_constraint(o, *f, c)) {
            out.push_back(f);
        }
    }
    return out;
}

std::vector<ScoredFile> search(const Ontology& o, const Query& q) {
    for (const auto& c : q.constraints) {
        validate_constraint(o, c);
    }

    std::vector<InstanceId> terms;
    for (const auto& t : q.terms) {
        if (std::find(terms.begin(), terms.end(), t) == terms.end()) {
            terms.push_back(t);
        }
    }

    std::unordered_map<const Instance*, std::vector<InstanceId>> matched;
    for (const auto& t : terms) {
        for (const auto* f : o.related_files(t)) {
            matched[f].push_back(t);
        }
    }

    std::vector<ScoredFile> results;
    results.reserve(matched.size());
    for (auto& [file, hits] : matched) {
        if (!in_scope(*file, q.scope)) {
            continue;
        }
        const bool keep = std::all_of(q.constraints.begin(), q.constraints.end(),
                                      [&](const Constraint& c) { return matches_constraint(o, *file, c); });
        if (keep) {
            results.push_back(ScoredFile{file, hits.size(), std::move(hits)});
        }
    }

    std::sort(results.begin(), results.end(), [](const ScoredFile& a, const ScoredFile& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        if (const int c = text::icompare(a.file->label, b.file->label); c != 0) {
            return c < 0;
        }
        static const std::string none;
        const auto& pa = a.file->path() ? *a.file->path() : none;
        const auto& pb = b.file->path() ? *b.file->path() : none;
        return std::tie(pa, a.file->label, a.file->id) < std::tie(pb, b.file->label, b.file->id);
    });
    return results;
}

std::map<ConceptId, std::vector<InstanceId>> concepts_for_folders(const Ontology& o,
                                                                  std::span<const std::string> folders) {
    const auto scope = Scope::folders(folders);
    std::map<ConceptId, std::set<InstanceId>> grouped;
    for (const auto* file : o.instances_of(kFileConcept)) {
        if (!in_scope(*file, scope)) {
            continue;
        }
        for (const auto* other : o.adjacent(file->id)) {
            if (!o.is_file(*other)) {
                grouped[other->concept_id].insert(other->id);
            }
        }
    }
    std::map<ConceptId, std::vector<InstanceId>> out;
    for (auto& [cid, ids] : grouped) {
        out.emplace(cid, std::vector<InstanceId>(ids.begin(), ids.end()));
    }
    return out;
}

}  // namespace ontofm
