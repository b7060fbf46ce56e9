#include "ontofm/fs_mirror.hpp"

#include "ontofm/error.hpp"
#include "ontofm/ontology.hpp"
#include "ontofm/paths.hpp"
#include "ontofm/text.hpp"

#include <fcntl.h>
#include <sys/stat.h>

#include <algorithm>
#include <ctime>
#include <set>
#include <tuple>

namespace fs = std::filesystem;

namespace ontofm {

std::optional<SortKey> parse_sort_key(std::string_view s) noexcept {
    if (s == "name") return SortKey::Name;
    if (s == "created") return SortKey::Created;
    if (s == "modified") return SortKey::Modified;
    if (s == "size") return SortKey::Size;
    return std::nullopt;
}

std::optional<SortOrder> parse_sort_order(std::string_view s) noexcept {
    if (s == "asc") return SortOrder::Asc;
    if (s == "desc") return SortOrder::Desc;
    return std::nullopt;
}

std::string format_timestamp(Timestamp t) {
    const std::time_t tt = static_cast<std::time_t>(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void sort_files(std::vector<FileEntry>& files, SortKey key, SortOrder order) {
    const auto by_key = [key](const FileEntry& a, const FileEntry& b) -> int {
        switch (key) {
            case SortKey::Name: return text::icompare(a.name, b.name);
            case SortKey::Created: return a.created < b.created ? -1 : (a.created > b.created ? 1 : 0);
            case SortKey::Modified: return a.modified < b.modified ? -1 : (a.modified > b.modified ? 1 : 0);
            case SortKey::Size: return a.size_bytes < b.size_bytes ? -1 : (a.size_bytes > b.size_bytes ? 1 : 0);
        }
        return 0;
    };
    std::stable_sort(files.begin(), files.end(), [&](const FileEntry& a, const FileEntry& b) {
        if (const int c = by_key(a, b); c != 0) {
            return order == SortOrder::Asc ? c < 0 : c > 0;
        }
        if (const int c = text::icompare(a.name, b.name); c != 0) {
            return c < 0;
        }
        return std::tie(a.name, a.path) < std::tie(b.name, b.path);
    });
}

namespace {

std::string join_logical(const std::string& root, std::string_view rel) {
    if (rel.empty()) {
        return root;
    }
    if (root == "/") {
        return std::string(rel);
    }
    return root + std::string(rel);
}

bool is_real_directory(const fs::path& p) {
    std::error_code ec;
    return fs::symlink_status(p, ec).type() == fs::file_type::directory;
}

}  // namespace

FsMirror::FsMirror(fs::path physical_root, std::string logical_root, bool use_birth_time)
    : use_birth_time_(use_birth_time) {
    auto physical = paths::normalize(fs::absolute(physical_root).string());
    if (!physical || !fs::is_directory(*physical)) {
        throw Error(ErrorCode::NotFound, "root directory '" + physical_root.string() + "' does not exist",
                    physical_root.string());
    }
    physical_root_ = *physical;
    if (logical_root.empty()) {
        logical_root_ = *physical;
    } else {
        auto logical = paths::normalize(logical_root);
        if (!logical) {
            throw Error(ErrorCode::InvalidArgument, "root alias must be an absolute path", logical_root);
        }
        logical_root_ = std::move(*logical);
    }
}

std::string FsMirror::resolve(std::string_view path) const {
    std::string candidate;
    if (!path.empty() && path.front() == '/') {
        candidate = std::string(path);
    } else {
        candidate = logical_root_ + "/" + std::string(path);
    }
    const auto normalized = paths::normalize(candidate);
    if (!normalized || !paths::is_within(*normalized, logical_root_)) {
        throw Error(ErrorCode::OutsideRoot, "path '" + std::string(path) + "' is outside the root '" + logical_root_ + "'",
                    std::string(path));
    }
    return *normalized;
}

fs::path FsMirror::to_physical(const std::string& logical) const {
    const auto rel = std::string_view(logical).substr(logical_root_ == "/" ? 0 : logical_root_.size());
    if (rel.empty() || rel == "/") {
        return physical_root_;
    }
    return fs::path(join_logical(physical_root_.string(), rel));
}

std::string FsMirror::to_logical(const fs::path& physical) const {
    const auto s = physical.string();
    const auto& root = physical_root_.string();
    const auto rel = std::string_view(s).substr(root == "/" ? 0 : root.size());
    return join_logical(logical_root_, rel);
}

fs::path FsMirror::require_directory(const std::string& logical) const {
    auto physical = to_physical(logical);
    if (!is_real_directory(physical)) {
        throw Error(ErrorCode::NotFound, "folder '" + logical + "' does not exist", logical);
    }
    return physical;
}

FileEntry FsMirror::stat_file(const fs::path& physical, std::string logical, const Ontology* o) const {
    FileEntry entry;
    entry.name = std::string(paths::name(logical));
    entry.path = std::move(logical);

    struct stat st {};
    if (::lstat(physical.c_str(), &st) != 0) {
        throw Error(ErrorCode::IoError, "cannot stat '" + entry.path + "'", entry.path);
    }
    entry.size_bytes = static_cast<std::uint64_t>(st.st_size);
    entry.modified = static_cast<Timestamp>(st.st_mtim.tv_sec);
    entry.created = entry.modified;
    entry.created_is_fallback = true;
#ifdef STATX_BTIME
    if (use_birth_time_) {
        struct statx stx {};
        if (::statx(AT_FDCWD, physical.c_str(), AT_SYMLINK_NOFOLLOW, STATX_BTIME, &stx) == 0 &&
            (stx.stx_mask & STATX_BTIME) != 0) {
            entry.created = static_cast<Timestamp>(stx.stx_btime.tv_sec);
            entry.created_is_fallback = false;
        }
    }
#endif
    if (o != nullptr) {
        if (const auto* inst = o->file_at(entry.path)) {
            entry.instance = inst->id;
        }
    }
    return entry;
}

Listing FsMirror::list_children(std::string_view folder, const Ontology* o) const {
    const auto logical = resolve(folder);
    const auto physical = require_directory(logical);

    Listing out;
    std::error_code ec;
    for (fs::directory_iterator it(physical, ec), end; !ec && it != end; it.increment(ec)) {
        std::error_code status_ec;
        const auto type = it->symlink_status(status_ec).type();
        const auto child_logical = to_logical(it->path());
        if (type == fs::file_type::directory) {
            bool has_children = false;
            std::error_code sub_ec;
            for (fs::directory_iterator sub(it->path(), sub_ec), sub_end; !sub_ec && sub != sub_end;
                 sub.increment(sub_ec)) {
                if (sub->symlink_status(sub_ec).type() == fs::file_type::directory) {
                    has_children = true;
                    break;
                }
            }
            out.folders.push_back(
                FolderNode{child_logical, std::string(paths::name(child_logical)), has_children});
        } else if (type == fs::file_type::regular) {
            out.files.push_back(stat_file(it->path(), child_logical, o));
        }
    }
    if (ec) {
        throw Error(ErrorCode::IoError, "cannot list '" + logical + "': " + ec.message(), logical);
    }
    std::sort(out.folders.begin(), out.folders.end(), [](const FolderNode& a, const FolderNode& b) {
        const int c = text::icompare(a.name, b.name);
        return c != 0 ? c < 0 : a.name < b.name;
    });
    sort_files(out.files, SortKey::Name, SortOrder::Asc);
    return out;
}

std::vector<FileEntry> FsMirror::list_files(std::span<const std::string> folders, SortKey key, SortOrder order,
                                            const Ontology* o) const {
    std::set<std::string> selected;
    for (const auto& f : folders) {
        const auto logical = resolve(f);
        require_directory(logical);
        selected.insert(logical);
    }
    std::vector<FileEntry> files;
    for (const auto& folder : selected) {
        auto listing = list_children(folder, o);
        std::move(listing.files.begin(), listing.files.end(), std::back_inserter(files));
    }
    // Distinct folders have distinct direct children, so no path repeats here.
    sort_files(files, key, order);
    return files;
}

SyncReport FsMirror::sync(const Ontology& o) const {
    SyncReport report;
    std::set<std::string> on_disk;

    std::error_code ec;
    fs::recursive_directory_iterator it(physical_root_, fs::directory_options::none, ec);
    for (fs::recursive_directory_iterator end; !ec && it != end; it.increment(ec)) {
        std::error_code status_ec;
        if (it->symlink_status(status_ec).type() == fs::file_type::regular) {
            on_disk.insert(to_logical(it->path()));
        }
    }
    if (ec) {
        throw Error(ErrorCode::IoError, "cannot walk '" + logical_root_ + "': " + ec.message(), logical_root_);
    }

    for (const auto& path : on_disk) {
        if (o.file_at(path) != nullptr) {
            ++report.registered;
        } else {
            report.unregistered_paths.push_back(path);
        }
    }
    std::set<std::string> missing;
    for (const auto* inst : o.instances_of(kFileConcept)) {
        const auto* path = inst->path();
        if (path != nullptr && paths::is_within(*path, logical_root_) && !on_disk.contains(*path)) {
            missing.insert(*path);
        }
    }
    report.missing_paths.assign(missing.begin(), missing.end());
    return report;
}

}  // namespace ontofm
