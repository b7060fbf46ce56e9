#pragma once

#include "ontofm/constraint.hpp"
#include "ontofm/ontology.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ontofm {

inline constexpr std::size_t kDefaultSuggestLimit = 10;

enum class MatchKind { Prefix, Substring };
std::string_view to_string(MatchKind kind) noexcept;

struct Suggestion {
    InstanceId instance;
    std::string label;
    ConceptId concept_id;
    MatchKind match_kind = MatchKind::Prefix;

    friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

/// Type-ahead over every instance label, File instances included.
/// Prefix matches come before substring matches; each group is ordered by
/// label (case-insensitive), then concept, then id. Empty input yields
/// nothing. Throws Error(InvalidArgument) when limit is 0.
std::vector<Suggestion> suggest(const Ontology& o, std::string_view typed, std::size_t limit = kDefaultSuggestLimit);

/// Where a search may look: everywhere, or under a set of folders
/// (recursive containment).
class Scope {
public:
    static Scope all() { return Scope{}; }
    /// Normalizes the folders. Throws Error(InvalidArgument) on an empty
    /// set or a relative path.
    static Scope folders(std::span<const std::string> folders);

    bool is_all() const noexcept { return folders_.empty(); }
    const std::vector<std::string>& selected() const noexcept { return folders_; }

    friend bool operator==(const Scope&, const Scope&) = default;

private:
    std::vector<std::string> folders_;  // sorted, normalized; empty means all
};

struct Query {
    std::vector<InstanceId> terms;
    Scope scope;
    std::vector<Constraint> constraints;
};

struct ScoredFile {
    const Instance* file = nullptr;
    std::size_t score = 0;                  ///< == matched_terms.size()
    std::vector<InstanceId> matched_terms;  ///< in query order
};

/// Relation-count ranking. A file is a candidate when it is directly
/// related to at least one term; its score is the number of distinct terms
/// it is related to. Scope and constraints then filter without touching
/// scores. Ordered by score desc, label asc (case-insensitive), path asc.
/// Duplicate terms are ignored. Throws Error(UnknownInstance) or
/// Error(InvalidConstraint).
std::vector<ScoredFile> search(const Ontology& o, const Query& q);

/// Raises Error(InvalidConstraint) when the concept is unknown, no instance
/// of it carries the property, or none carries a type the op can compare.
void validate_constraint(const Ontology& o, const Constraint& c);

/// Whether some instance of c.concept_id adjacent to `file` satisfies `c`.
bool matches_constraint(const Ontology& o, const Instance& file, const Constraint& c);

/// Keeps the files related to an instance of c.concept_id that satisfies c.
/// Input order is preserved.
std::vector<const Instance*> apply_constraint(const Ontology& o, std::span<const Instance* const> files,
                                              const Constraint& c);

/// All scope admits everything; a folder scope admits files strictly under
/// one of its folders. Files without a path are never in a folder scope.
bool in_scope(const Instance& file, const Scope& scope);

/// For the File instances under any of `folders`, groups every directly
/// related non-File instance by concept. Ids are sorted.
std::map<ConceptId, std::vector<InstanceId>> concepts_for_folders(const Ontology& o,
                                                                  std::span<const std::string> folders);

}  // namespace ontofm
