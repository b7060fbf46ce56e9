#include "ontofm/constraint.hpp"

#include "ontofm/error.hpp"
#include "ontofm/ontology.hpp"
#include "ontofm/paths.hpp"
#include "ontofm/text.hpp"

#include <cctype>

namespace ontofm {

std::string_view to_string(ConstraintOp op) noexcept {
    switch (op) {
        case ConstraintOp::Eq: return "eq";
        case ConstraintOp::Contains: return "contains";
        case ConstraintOp::Lt: return "lt";
        case ConstraintOp::Gt: return "gt";
        case ConstraintOp::Between: return "between";
        case ConstraintOp::Before: return "before";
        case ConstraintOp::After: return "after";
        case ConstraintOp::On: return "on";
    }
    return "eq";
}

std::optional<ConstraintOp> parse_constraint_op(std::string_view name) noexcept {
    for (auto op : {ConstraintOp::Eq, ConstraintOp::Contains, ConstraintOp::Lt, ConstraintOp::Gt,
                    ConstraintOp::Between, ConstraintOp::Before, ConstraintOp::After, ConstraintOp::On}) {
        if (to_string(op) == name) {
            return op;
        }
    }
    return std::nullopt;
}

namespace {

[[noreturn]] void invalid(const std::string& message, const std::string& detail = {}) {
    throw Error(ErrorCode::InvalidConstraint, message, detail);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string unquote(std::string_view s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\''))) {
        return std::string(s.substr(1, s.size() - 2));
    }
    return std::string(s);
}

TypedValue require_value(ValueType type, std::string_view raw, std::string_view expr) {
    if (type == ValueType::Text) {
        return Text{unquote(raw)};
    }
    auto v = parse_typed(type, raw);
    if (!v) {
        invalid("expected a " + std::string(to_string(type)) + " value in '" + std::string(expr) + "', got '" +
                    std::string(raw) + "'",
                std::string(raw));
    }
    return std::move(*v);
}

ValueType required_type(ConstraintOp op) {
    switch (op) {
        case ConstraintOp::Contains: return ValueType::Text;
        case ConstraintOp::Lt:
        case ConstraintOp::Gt: return ValueType::Number;
        default: return ValueType::Date;
    }
}

}  // namespace

void check_constraint(const Constraint& c) {
    if (c.concept_id.empty() || c.property.empty()) {
        invalid("constraint needs a concept and a property");
    }
    const std::size_t arity = c.op == ConstraintOp::Between ? 2 : 1;
    if (c.values.size() != arity) {
        invalid("operator '" + std::string(to_string(c.op)) + "' takes " + std::to_string(arity) + " value(s)");
    }
    if (c.op == ConstraintOp::Eq) {
        return;
    }
    const auto want = required_type(c.op);
    for (const auto& v : c.values) {
        if (type_of(v) != want) {
            invalid("operator '" + std::string(to_string(c.op)) + "' requires a " + std::string(to_string(want)) +
                        " value, got " + std::string(to_string(type_of(v))),
                    render(v));
        }
    }
    if (c.op == ConstraintOp::Between && std::get<Date>(c.values[1]) < std::get<Date>(c.values[0])) {
        invalid("between bounds are reversed", render(c.values[0]) + "," + render(c.values[1]));
    }
}

Constraint parse_constraint(std::string_view expression) {
    const auto expr = trim(expression);
    std::size_t pos = 0;
    while (pos < expr.size() && !std::isspace(static_cast<unsigned char>(expr[pos])) && expr[pos] != '=' &&
           expr[pos] != '<' && expr[pos] != '>') {
        ++pos;
    }
    const auto target = expr.substr(0, pos);
    const auto dot = target.find('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == target.size()) {
        invalid("expected 'Concept.property' in '" + std::string(expr) + "'", std::string(expr));
    }
    Constraint c;
    c.concept_id = ConceptId{std::string(target.substr(0, dot))};
    c.property = std::string(target.substr(dot + 1));

    auto rest = trim(expr.substr(pos));
    if (rest.empty()) {
        invalid("missing operator in '" + std::string(expr) + "'", std::string(expr));
    }
    std::string_view op_word;
    if (rest.front() == '=' || rest.front() == '<' || rest.front() == '>') {
        op_word = rest.substr(0, 1);
        rest = trim(rest.substr(1));
    } else {
        std::size_t n = 0;
        while (n < rest.size() && std::isalpha(static_cast<unsigned char>(rest[n]))) {
            ++n;
        }
        op_word = rest.substr(0, n);
        rest = trim(rest.substr(n));
    }
    const auto op = text::lower(op_word);

    if (op == "between") {
        if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
            invalid("expected between(a,b) in '" + std::string(expr) + "'", std::string(expr));
        }
        const auto inner = rest.substr(1, rest.size() - 2);
        const auto comma = inner.find(',');
        if (comma == std::string_view::npos) {
            invalid("expected between(a,b) in '" + std::string(expr) + "'", std::string(expr));
        }
        c.op = ConstraintOp::Between;
        c.values = {require_value(ValueType::Date, trim(inner.substr(0, comma)), expr),
                    require_value(ValueType::Date, trim(inner.substr(comma + 1)), expr)};
        check_constraint(c);
        return c;
    }

    if (rest.empty()) {
        invalid("missing value in '" + std::string(expr) + "'", std::string(expr));
    }
    if (op == "=") {
        c.op = ConstraintOp::Eq;
        c.values = {infer_value(rest)};
    } else if (op == "<" || op == ">") {
        c.op = op == "<" ? ConstraintOp::Lt : ConstraintOp::Gt;
        c.values = {require_value(ValueType::Number, rest, expr)};
    } else if (op == "contains") {
        c.op = ConstraintOp::Contains;
        c.values = {Text{unquote(rest)}};
    } else if (op == "before" || op == "after" || op == "on") {
        c.op = op == "before" ? ConstraintOp::Before : (op == "after" ? ConstraintOp::After : ConstraintOp::On);
        c.values = {require_value(ValueType::Date, rest, expr)};
    } else {
        invalid("unknown operator in '" + std::string(expr) + "'", std::string(op_word));
    }
    check_constraint(c);
    return c;
}

std::string format_constraint(const Constraint& c) {
    const auto target = c.concept_id.str() + "." + c.property;
    const auto value = [&](std::size_t i) {
        if (std::holds_alternative<Text>(c.values.at(i))) {
            return "\"" + render(c.values[i]) + "\"";
        }
        return render(c.values[i]);
    };
    switch (c.op) {
        case ConstraintOp::Eq: return target + " = " + value(0);
        case ConstraintOp::Contains: return target + " contains " + value(0);
        case ConstraintOp::Lt: return target + " < " + value(0);
        case ConstraintOp::Gt: return target + " > " + value(0);
        case ConstraintOp::Before: return target + " before " + value(0);
        case ConstraintOp::After: return target + " after " + value(0);
        case ConstraintOp::On: return target + " on " + value(0);
        case ConstraintOp::Between: return target + " between(" + value(0) + "," + value(1) + ")";
    }
    return target;
}

TypedValue infer_value(std::string_view raw) {
    if (raw.size() >= 2 && (raw.front() == '"' || raw.front() == '\'') && raw.back() == raw.front()) {
        return Text{unquote(raw)};
    }
    if (auto d = Date::parse(raw)) {
        return *d;
    }
    if (auto n = parse_typed(ValueType::Number, raw)) {
        return *n;
    }
    if (!raw.empty() && raw.front() == '/') {
        if (auto p = parse_typed(ValueType::Path, raw)) {
            return *p;
        }
    }
    return Text{std::string(raw)};
}

std::optional<TypedValue> lookup_property(const Instance& i, std::string_view name) {
    if (const auto* v = i.property(name)) {
        return *v;
    }
    if (name == "label") {
        return Text{i.label};
    }
    return std::nullopt;
}

bool satisfies(const Instance& i, const Constraint& c) {
    check_constraint(c);
    const auto actual = lookup_property(i, c.property);
    if (!actual) {
        return false;
    }
    const auto& expected = c.values.front();
    switch (c.op) {
        case ConstraintOp::Eq:
            if (const auto* t = std::get_if<Text>(&expected)) {
                return text::iequals(render(*actual), t->value);
            }
            return type_of(*actual) == type_of(expected) && *actual == expected;
        case ConstraintOp::Contains:
            return text::icontains(render(*actual), std::get<Text>(expected).value);
        case ConstraintOp::Lt:
        case ConstraintOp::Gt: {
            const auto* n = std::get_if<Number>(&*actual);
            if (n == nullptr) {
                return false;
            }
            const double bound = std::get<Number>(expected).value;
            return c.op == ConstraintOp::Lt ? n->value < bound : n->value > bound;
        }
        case ConstraintOp::Before:
        case ConstraintOp::After:
        case ConstraintOp::On:
        case ConstraintOp::Between: {
            const auto* d = std::get_if<Date>(&*actual);
            if (d == nullptr) {
                return false;
            }
            const auto& lo = std::get<Date>(expected);
            switch (c.op) {
                case ConstraintOp::Before: return *d < lo;
                case ConstraintOp::After: return *d > lo;
                case ConstraintOp::On: return *d == lo;
                default: return lo <= *d && *d <= std::get<Date>(c.values[1]);
            }
        }
    }
    return false;
}

}  // namespace ontofm
