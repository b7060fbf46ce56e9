#include "ontofm/typed_value.hpp"

#include "ontofm/paths.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace ontofm {

namespace {

bool all_digits(std::string_view s) {
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return !s.empty();
}

template <typename T>
bool parse_int(std::string_view s, T& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::optional<Date> Date::parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        return std::nullopt;
    }
    const auto y = text.substr(0, 4);
    const auto m = text.substr(5, 2);
    const auto d = text.substr(8, 2);
    if (!all_digits(y) || !all_digits(m) || !all_digits(d)) {
        return std::nullopt;
    }
    Date out;
    if (!parse_int(y, out.year) || !parse_int(m, out.month) || !parse_int(d, out.day)) {
        return std::nullopt;
    }
    const std::chrono::year_month_day ymd{std::chrono::year{out.year}, std::chrono::month{out.month},
                                          std::chrono::day{out.day}};
    if (!ymd.ok()) {
        return std::nullopt;
    }
    return out;
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
    return buf;
}

ValueType type_of(const TypedValue& v) noexcept {
    return static_cast<ValueType>(v.index());
}

std::string_view to_string(ValueType t) noexcept {
    switch (t) {
        case ValueType::Text: return "text";
        case ValueType::Number: return "number";
        case ValueType::Date: return "date";
        case ValueType::Path: return "path";
    }
    return "text";
}

std::optional<ValueType> parse_value_type(std::string_view name) noexcept {
    if (name == "text") return ValueType::Text;
    if (name == "number") return ValueType::Number;
    if (name == "date") return ValueType::Date;
    if (name == "path") return ValueType::Path;
    return std::nullopt;
}

std::string render(const TypedValue& v) {
    struct Visitor {
        std::string operator()(const Text& t) const { return t.value; }
        std::string operator()(const Number& n) const {
            char buf[64];
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, n.value);
            return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
        }
        std::string operator()(const Date& d) const { return d.to_string(); }
        std::string operator()(const Path& p) const { return p.value; }
    };
    return std::visit(Visitor{}, v);
}

std::optional<TypedValue> parse_typed(ValueType type, std::string_view text) {
    switch (type) {
        case ValueType::Text:
            return Text{std::string(text)};
        case ValueType::Number: {
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
                return std::nullopt;
            }
            return Number{value};
        }
        case ValueType::Date:
            if (auto d = Date::parse(text)) {
                return *d;
            }
            return std::nullopt;
        case ValueType::Path:
            if (auto p = paths::normalize(text)) {
                return Path{std::move(*p)};
            }
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace ontofm
