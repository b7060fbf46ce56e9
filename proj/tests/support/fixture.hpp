#pragma once

#include "ontofm/ontology.hpp"

#include <fcntl.h>
#include <sys/stat.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#ifndef ONTOFM_TEST_DATA_DIR
#error "ONTOFM_TEST_DATA_DIR must point at tests/data"
#endif

namespace ontofm::testing {

inline std::string data_path(const std::string& name) {
    return std::string(ONTOFM_TEST_DATA_DIR) + "/" + name;
}

inline const Ontology& tiny() {
    static const Ontology o = load_ontology_file(data_path("tiny.ontofm.json"));
    return o;
}

inline std::vector<std::string> ids(const std::vector<const Instance*>& v) {
    std::vector<std::string> out;
    for (const auto* i : v) {
        out.push_back(i->id.str());
    }
    return out;
}

/// Sets atime and mtime (seconds since epoch).
inline void set_mtime(const std::filesystem::path& p, std::int64_t seconds) {
    struct timespec times[2];
    times[0].tv_sec = seconds;
    times[0].tv_nsec = 0;
    times[1] = times[0];
    ::utimensat(AT_FDCWD, p.c_str(), times, 0);
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
    std::filesystem::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
}

/// Unique scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("ontofm-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// The fixture's file tree, physically under a temp dir and logically at /home/u:
///   docs/admin/budget.xls, docs/papers/notes.txt, docs/papers/paper-draft.pdf
/// Sizes and mtimes are fixed so listings are reproducible.
class FixtureTree {
public:
    static constexpr const char* kLogicalRoot = "/home/u";

    // 2011-03-15T09:00:00Z, 2011-04-02T12:30:00Z, 2011-06-20T16:45:00Z
    static constexpr std::int64_t kDraftMtime = 1300179600;
    static constexpr std::int64_t kNotesMtime = 1301747400;
    static constexpr std::int64_t kBudgetMtime = 1308588300;

    explicit FixtureTree(bool with_budget = true) {
        const auto docs = root() / "docs";
        write_file(docs / "papers" / "paper-draft.pdf", std::string(2048, 'p'));
        write_file(docs / "papers" / "notes.txt", "some notes\n");
        set_mtime(docs / "papers" / "paper-draft.pdf", kDraftMtime);
        set_mtime(docs / "papers" / "notes.txt", kNotesMtime);
        std::filesystem::create_directories(docs / "admin");
        if (with_budget) {
            write_file(docs / "admin" / "budget.xls", std::string(512, 'b'));
            set_mtime(docs / "admin" / "budget.xls", kBudgetMtime);
        }
    }

    std::filesystem::path root() const { return dir_.path() / "home" / "u"; }

private:
    TempDir dir_;
};

}  // namespace ontofm::testing
