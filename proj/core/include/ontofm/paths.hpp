#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ontofm::paths {

/// Lexical normalization of an absolute POSIX path: collapses repeated
/// separators, drops "." segments, resolves ".." and strips any trailing
/// separator. Returns nullopt for relative paths or ".." above "/".
std::optional<std::string> normalize(std::string_view path);

/// Final segment; "/" for the root itself.
std::string_view name(std::string_view normalized);

/// Parent directory of a normalized path; "/" has no parent (returns "/").
std::string_view parent(std::string_view normalized);

/// True when `folder` is a strict directory ancestor of `path`. Both normalized.
bool is_under(std::string_view path, std::string_view folder) noexcept;

/// True when `path` equals `folder` or lies under it.
bool is_within(std::string_view path, std::string_view folder) noexcept;

}  // namespace ontofm::paths
