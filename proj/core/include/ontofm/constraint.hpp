#pragma once

#include "ontofm/ids.hpp"
#include "ontofm/typed_value.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ontofm {

struct Instance;

enum class ConstraintOp { Eq, Contains, Lt, Gt, Between, Before, After, On };

/// Canonical wire name: eq, contains, lt, gt, between, before, after, on.
std::string_view to_string(ConstraintOp op) noexcept;
std::optional<ConstraintOp> parse_constraint_op(std::string_view name) noexcept;

/// A predicate on one property of the instances of a concept.
/// Between carries two values (inclusive bounds), every other op one.
struct Constraint {
    ConceptId concept_id;
    std::string property;
    ConstraintOp op = ConstraintOp::Eq;
    std::vector<TypedValue> values;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Arity and op/value type compatibility: Contains needs Text, Lt/Gt need
/// Number, Before/After/On/Between need Date, Between needs lo <= hi.
/// Throws Error(InvalidConstraint).
void check_constraint(const Constraint& c);

/// Parses "Concept.property OP value" where OP is one of
/// =, contains, <, >, before, after, on, between(a,b).
/// For "=" the value type is inferred: "quoted" text, YYYY-MM-DD date,
/// number, absolute path, otherwise text. Throws Error(InvalidConstraint).
Constraint parse_constraint(std::string_view expression);

/// Value typing used for "=": "quoted" text, YYYY-MM-DD date, number,
/// absolute path, otherwise text.
TypedValue infer_value(std::string_view raw);

/// Inverse of parse_constraint for well-formed constraints.
std::string format_constraint(const Constraint& c);

/// Value of `name` on `i`; "label" falls back to the instance label.
std::optional<TypedValue> lookup_property(const Instance& i, std::string_view name);

/// Whether the instance's property satisfies the constraint. A missing
/// property or a value of a non-comparable type yields false.
/// Text comparisons are case-insensitive. Throws Error(InvalidConstraint)
/// for malformed constraints.
bool satisfies(const Instance& i, const Constraint& c);

}  // namespace ontofm
