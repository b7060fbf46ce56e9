#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace ontofm {

/// Calendar day, ISO 8601 YYYY-MM-DD. No time of day, no zone.
struct Date {
    int year = 1970;
    unsigned month = 1;
    unsigned day = 1;

    /// Strict YYYY-MM-DD; rejects impossible days such as 2011-02-30.
    static std::optional<Date> parse(std::string_view text);
    std::string to_string() const;

    friend auto operator<=>(const Date&, const Date&) = default;
};

struct Text {
    std::string value;
    friend auto operator<=>(const Text&, const Text&) = default;
};

struct Number {
    double value = 0.0;
    friend auto operator<=>(const Number&, const Number&) = default;
};

/// Absolute, lexically normalized filesystem path.
struct Path {
    std::string value;
    friend auto operator<=>(const Path&, const Path&) = default;
};

using TypedValue = std::variant<Text, Number, Date, Path>;

enum class ValueType { Text, Number, Date, Path };

ValueType type_of(const TypedValue& v) noexcept;
std::string_view to_string(ValueType t) noexcept;
std::optional<ValueType> parse_value_type(std::string_view name) noexcept;

/// Canonical text form: the string itself, shortest round-trip decimal,
/// ISO date, or the path.
std::string render(const TypedValue& v);

/// Builds a value of the given type from its text form; nullopt if invalid
/// (bad date, relative path, non-numeric number).
std::optional<TypedValue> parse_typed(ValueType type, std::string_view text);

}  // namespace ontofm
