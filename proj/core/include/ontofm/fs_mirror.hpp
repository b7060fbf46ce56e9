#pragma once

#include "ontofm/ids.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ontofm {

class Ontology;

enum class SortKey { Name, Created, Modified, Size };
enum class SortOrder { Asc, Desc };

std::optional<SortKey> parse_sort_key(std::string_view s) noexcept;
std::optional<SortOrder> parse_sort_order(std::string_view s) noexcept;

/// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

/// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_timestamp(Timestamp t);

struct FolderNode {
    std::string path;
    std::string name;
    bool has_children = false;

    friend bool operator==(const FolderNode&, const FolderNode&) = default;
};

struct FileEntry {
    std::string path;
    std::string name;
    std::uint64_t size_bytes = 0;
    Timestamp created = 0;
    Timestamp modified = 0;
    bool created_is_fallback = false;  ///< no birth time available; created == modified
    std::optional<InstanceId> instance;

    friend bool operator==(const FileEntry&, const FileEntry&) = default;
};

struct Listing {
    std::vector<FolderNode> folders;
    std::vector<FileEntry> files;
};

struct SyncReport {
    std::size_t registered = 0;
    std::vector<std::string> unregistered_paths;
    std::vector<std::string> missing_paths;
};

/// Sorts by key (in `order`), then name ascending, then path. Total and stable.
void sort_files(std::vector<FileEntry>& files, SortKey key, SortOrder order);

/// Read-only view of the filesystem under a root directory.
///
/// Paths are exchanged in a logical namespace: `logical_root` (defaults to
/// the physical root) stands for `physical_root`, so an ontology written with
/// /home/u paths can be mirrored from any directory. Symbolic links are
/// neither listed nor followed.
class FsMirror {
public:
    explicit FsMirror(std::filesystem::path physical_root, std::string logical_root = {},
                      bool use_birth_time = true);

    const std::string& root() const noexcept { return logical_root_; }
    const std::filesystem::path& physical_root() const noexcept { return physical_root_; }

    /// Normalizes an absolute logical path or a root-relative one.
    /// Throws Error(OutsideRoot) when it escapes the root.
    std::string resolve(std::string_view path) const;

    /// First-level subfolders and files of a folder, each sorted by name
    /// (case-insensitive). `o`, when given, links files to File instances.
    Listing list_children(std::string_view folder, const Ontology* o = nullptr) const;

    /// Direct-child files of every selected folder, deduplicated by path.
    std::vector<FileEntry> list_files(std::span<const std::string> folders, SortKey key, SortOrder order,
                                      const Ontology* o = nullptr) const;

    /// Compares the tree under the root with the ontology's File instances.
    /// Only File instances whose path lies under the root are considered.
    SyncReport sync(const Ontology& o) const;

private:
    std::filesystem::path to_physical(const std::string& logical) const;
    std::string to_logical(const std::filesystem::path& physical) const;
    std::filesystem::path require_directory(const std::string& logical) const;
    FileEntry stat_file(const std::filesystem::path& physical, std::string logical, const Ontology* o) const;

    std::filesystem::path physical_root_;
    std::string logical_root_;
    bool use_birth_time_;
};

}  // namespace ontofm
