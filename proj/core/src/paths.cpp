#include "ontofm/paths.hpp"

#include <vector>

namespace ontofm::paths {

std::optional<std::string> normalize(std::string_view path) {
    if (path.empty() || path.front() != '/') {
        return std::nullopt;
    }
    std::vector<std::string_view> segments;
    std::size_t pos = 0;
    while (pos < path.size()) {
        const auto next = path.find('/', pos);
        const auto end = next == std::string_view::npos ? path.size() : next;
        const auto seg = path.substr(pos, end - pos);
        if (seg.empty() || seg == ".") {
            // skip
        } else if (seg == "..") {
            if (segments.empty()) {
                return std::nullopt;
            }
            segments.pop_back();
        } else {
            segments.push_back(seg);
        }
        pos = end + 1;
    }
    if (segments.empty()) {
        return std::string("/");
    }
    std::string out;
    for (const auto seg : segments) {
        out += '/';
        out += seg;
    }
    return out;
}

std::string_view name(std::string_view normalized) {
    if (normalized == "/") {
        return normalized;
    }
    return normalized.substr(normalized.rfind('/') + 1);
}

std::string_view parent(std::string_view normalized) {
    const auto slash = normalized.rfind('/');
    if (slash == 0 || slash == std::string_view::npos) {
        return "/";
    }
    return normalized.substr(0, slash);
}

bool is_under(std::string_view path, std::string_view folder) noexcept {
    if (folder == "/") {
        return path.size() > 1 && path.front() == '/';
    }
    return path.size() > folder.size() && path.substr(0, folder.size()) == folder && path[folder.size()] == '/';
}

bool is_within(std::string_view path, std::string_view folder) noexcept {
    return path == folder || is_under(path, folder);
}

}  // namespace ontofm::paths
