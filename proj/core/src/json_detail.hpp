#pragma once

// Strict JSON reading helpers shared by the ontology loader and the API codecs.

#include "ontofm/error.hpp"
#include "ontofm/typed_value.hpp"

#include <nlohmann/json.hpp>

#include <initializer_list>
#include <string>
#include <string_view>

namespace ontofm::detail {

using nlohmann::json;

[[noreturn]] inline void structure_error(const std::string& where, const std::string& what) {
    throw ParseError(what + " at " + (where.empty() ? std::string("/") : where), 0, 0, where.empty() ? "/" : where);
}

/// Rejects any key not in `allowed`; `where` is a JSON pointer for messages.
inline const json& expect_object(const json& j, const std::string& where,
                                 std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
        structure_error(where, "expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const auto a : allowed) {
            ok = ok || a == key;
        }
        if (!ok) {
            throw ParseError("unknown field '" + key + "' at " + (where.empty() ? std::string("/") : where), 0, 0,
                             where + "/" + key);
        }
    }
    return j;
}

inline const json& expect_array(const json& j, const std::string& where) {
    if (!j.is_array()) {
        structure_error(where, "expected an array");
    }
    return j;
}

inline std::string expect_string(const json& parent, std::string_view key, const std::string& where) {
    const auto it = parent.find(key);
    if (it == parent.end()) {
        structure_error(where, "missing field '" + std::string(key) + "'");
    }
    if (!it->is_string()) {
        structure_error(where + "/" + std::string(key), "expected a string");
    }
    return it->get<std::string>();
}

inline const json* optional_field(const json& parent, std::string_view key) {
    const auto it = parent.find(key);
    return it == parent.end() ? nullptr : &*it;
}

/// {"type": "text|number|date|path", "value": ...}
inline TypedValue typed_value_from_json(const json& j, const std::string& where) {
    expect_object(j, where, {"type", "value"});
    const auto type_name = expect_string(j, "type", where);
    const auto type = parse_value_type(type_name);
    if (!type) {
        structure_error(where + "/type", "unknown value type '" + type_name + "'");
    }
    const auto it = j.find("value");
    if (it == j.end()) {
        structure_error(where, "missing field 'value'");
    }
    if (*type == ValueType::Number) {
        if (!it->is_number()) {
            structure_error(where + "/value", "expected a number");
        }
        return Number{it->get<double>()};
    }
    if (!it->is_string()) {
        structure_error(where + "/value", "expected a string");
    }
    auto parsed = parse_typed(*type, it->get<std::string>());
    if (!parsed) {
        structure_error(where + "/value", "invalid " + type_name + " value '" + it->get<std::string>() + "'");
    }
    return std::move(*parsed);
}

inline json typed_value_to_json(const TypedValue& v) {
    json out;
    out["type"] = std::string(to_string(type_of(v)));
    if (const auto* n = std::get_if<Number>(&v)) {
        out["value"] = n->value;
    } else {
        out["value"] = render(v);
    }
    return out;
}

/// Parses text, converting syntax errors to ParseError with line/column.
json parse_document(std::string_view document);

}  // namespace ontofm::detail
