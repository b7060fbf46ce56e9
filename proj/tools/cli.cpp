#include "cli.hpp"

#include "ontofm/fs_mirror.hpp"
#include "ontofm/graph.hpp"
#include "ontofm/json_codec.hpp"
#include "ontofm/search.hpp"
#include "ontofm/service.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <string>
#include <vector>

namespace ontofm::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string ontology;
    std::string root;
    std::string root_alias;
    bool no_birth_time = false;
    bool json_output = false;
    std::size_t limit = kDefaultSuggestLimit;
    std::vector<std::string> scopes;
    std::vector<std::string> constraints;

    std::string validate_file;
    std::string typed;
    std::vector<std::string> terms;
    std::vector<std::string> ls_paths;
    std::string sort = "name";
    std::string order = "asc";
    std::vector<std::string> toggles;
    std::string center_node;
    std::string tree_under;
    std::string tree_above;
    std::size_t depth = kDefaultTreeDepth;
    std::string host = "127.0.0.1";
    int port = kDefaultPort;
    std::string static_dir;
    std::size_t suggest_limit = kDefaultSuggestLimit;
};

/// Thrown for argument combinations CLI11 cannot express; exits with 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Ontology load(const Options& opt, std::ostream& err, const std::string& path_override = {}) {
    const auto& path = path_override.empty() ? opt.ontology : path_override;
    if (path.empty()) {
        throw UsageError("an ontology file is required (--ontology)");
    }
    LoadReport report;
    auto o = load_ontology_file(path, &report);
    if (!opt.json_output) {
        for (const auto& w : report.warnings) {
            err << "warning: " << w << "\n";
        }
    }
    return o;
}

std::vector<InstanceId> to_ids(const std::vector<std::string>& raw) {
    std::vector<InstanceId> out;
    for (const auto& s : raw) {
        out.emplace_back(s);
    }
    return out;
}

std::string quote_list(const std::vector<InstanceId>& ids) {
    std::string out;
    for (const auto& id : ids) {
        out += (out.empty() ? "" : ",") + id.str();
    }
    return out;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto& path = opt.validate_file.empty() ? opt.ontology : opt.validate_file;
    if (path.empty()) {
        throw UsageError("validate needs an ontology file");
    }
    LoadReport report;
    const auto o = load_ontology_file(path, &report);
    std::optional<SyncReport> sync;
    if (!opt.root.empty()) {
        sync = FsMirror(opt.root, opt.root_alias, !opt.no_birth_time).sync(o);
    }
    if (opt.json_output) {
        auto j = json_codec::to_json(report);
        if (sync) {
            j["sync"] = json_codec::to_json(*sync);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& w : report.warnings) {
        err << "warning: " << w << "\n";
    }
    out << "ok: " << report.concepts << " concepts, " << report.instances << " instances, " << report.relations
        << " relations\n";
    if (sync) {
        out << "sync: " << sync->registered << " registered, " << sync->unregistered_paths.size()
            << " unregistered, " << sync->missing_paths.size() << " missing\n";
        for (const auto& p : sync->unregistered_paths) {
            out << "  unregistered  " << p << "\n";
        }
        for (const auto& p : sync->missing_paths) {
            out << "  missing       " << p << "\n";
        }
    }
    return 0;
}

int cmd_suggest(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto o = load(opt, err);
    const auto list = suggest(o, opt.typed, opt.limit);
    if (opt.json_output) {
        json arr = json::array();
        for (const auto& s : list) {
            arr.push_back(json_codec::to_json(s));
        }
        out << json{{"suggestions", arr}}.dump(2) << "\n";
        return 0;
    }
    for (const auto& s : list) {
        out << std::left << std::setw(28) << s.label << std::setw(12) << s.concept_id.str() << std::setw(10)
            << to_string(s.match_kind) << s.instance.str() << "\n";
    }
    return 0;
}

Query build_query(const Options& opt) {
    Query q;
    q.terms = to_ids(opt.terms);
    if (!opt.scopes.empty()) {
        q.scope = Scope::folders(opt.scopes);
    }
    for (const auto& c : opt.constraints) {
        q.constraints.push_back(parse_constraint(c));
    }
    return q;
}

int cmd_search(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto o = load(opt, err);
    const auto results = search(o, build_query(opt));
    if (opt.json_output) {
        json arr = json::array();
        for (const auto& f : results) {
            arr.push_back(json_codec::to_json(f));
        }
        out << json{{"results", arr}}.dump(2) << "\n";
        return 0;
    }
    if (results.empty()) {
        out << "no matching files\n";
        return 0;
    }
    out << std::left << std::setw(7) << "SCORE" << std::setw(24) << "FILE" << std::setw(16) << "MATCHED"
        << "PATH\n";
    for (const auto& f : results) {
        out << std::left << std::setw(7) << f.score << std::setw(24) << f.file->label << std::setw(16)
            << quote_list(f.matched_terms) << (f.file->path() ? *f.file->path() : std::string("-")) << "\n";
    }
    return 0;
}

void print_files(const std::vector<FileEntry>& files, std::ostream& out) {
    for (const auto& f : files) {
        out << std::left << std::setw(28) << f.name << std::right << std::setw(10) << f.size_bytes << "  "
            << format_timestamp(f.modified) << "  " << (f.instance ? f.instance->str() : std::string("-")) << "\n";
    }
}

int cmd_ls(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.root.empty()) {
        throw UsageError("ls needs --root");
    }
    const FsMirror mirror(opt.root, opt.root_alias, !opt.no_birth_time);
    std::optional<Ontology> o;
    if (!opt.ontology.empty()) {
        o = load(opt, err);
    }
    const auto* op = o ? &*o : nullptr;
    const auto key = parse_sort_key(opt.sort);
    const auto order = parse_sort_order(opt.order);
    if (!key || !order) {
        throw UsageError("--sort must be name|created|modified|size and --order asc|desc");
    }
    const std::vector<std::string> selected = opt.ls_paths.empty() ? std::vector{mirror.root()} : opt.ls_paths;

    std::vector<FolderNode> folders;
    if (selected.size() == 1) {
        folders = mirror.list_children(selected.front(), op).folders;
    }
    const auto files = mirror.list_files(selected, *key, *order, op);
    if (opt.json_output) {
        json j;
        if (selected.size() == 1) {
            j["folders"] = json::array();
            for (const auto& f : folders) {
                j["folders"].push_back(json_codec::to_json(f));
            }
        }
        j["files"] = json::array();
        for (const auto& f : files) {
            j["files"].push_back(json_codec::to_json(f));
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& f : folders) {
        out << f.name << "/" << (f.has_children ? "  +" : "") << "\n";
    }
    print_files(files, out);
    return 0;
}

int cmd_graph(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto o = load(opt, err);
    if (opt.terms.empty() && !opt.scopes.empty()) {
        const auto concepts = concepts_for_folders(o, opt.scopes);
        if (opt.json_output) {
            out << json{{"concepts", json_codec::to_json(concepts)}}.dump(2) << "\n";
            return 0;
        }
        for (const auto& [cid, ids] : concepts) {
            out << cid.str() << ": " << quote_list(ids) << "\n";
        }
        return 0;
    }
    if (!opt.tree_under.empty() && !opt.tree_above.empty()) {
        throw UsageError("--tree-under and --tree-above are exclusive");
    }
    const auto terms = to_ids(opt.terms);
    auto state = initial_graph(o, terms);
    for (const auto& t : opt.toggles) {
        state = toggle(o, state, InstanceId{t});
    }
    if (!opt.tree_under.empty()) {
        state = tree(o, state, InstanceId{opt.tree_under}, TreeDirection::Under, opt.depth);
    } else if (!opt.tree_above.empty()) {
        state = tree(o, state, InstanceId{opt.tree_above}, TreeDirection::Above, opt.depth);
    }
    if (!opt.center_node.empty()) {
        state = center(state, InstanceId{opt.center_node});
    }
    if (opt.json_output) {
        out << json{{"state", json_codec::graph_to_json(o, state)}}.dump(2) << "\n";
        return 0;
    }
    out << "layout: " << to_string(state.layout.mode) << ", focus: " << (state.focus ? state.focus->str() : "-")
        << "\n";
    for (const auto& id : state.visible) {
        const auto& inst = o.instance(id);
        out << (state.is_root(id) ? "* " : "  ") << (state.expanded.contains(id) ? "- " : "+ ") << std::left
            << std::setw(12) << id.str() << std::setw(24) << inst.label << inst.concept_id.str() << "\n";
    }
    for (const auto& e : state.edges) {
        out << "  " << e.subject.str() << " --" << e.predicate << "--> " << e.object.str() << "\n";
    }
    return 0;
}

int cmd_serve(const Options& opt, std::ostream& out, std::ostream& err) {
    Config config;
    config.ontology_path = opt.ontology;
    config.root_dir = opt.root;
    config.root_alias = opt.root_alias;
    config.host = opt.host;
    config.port = opt.port;
    config.suggest_limit = opt.limit;
    config.tree_depth_limit = opt.depth;
    config.birth_time = !opt.no_birth_time;
    config.static_dir = opt.static_dir;
    if (config.ontology_path.empty() || config.root_dir.empty()) {
        throw UsageError("serve needs --ontology and --root");
    }
    return serve(config, out, err);
}

void report(const Error& e, bool json_output, std::ostream& out, std::ostream& err) {
    const auto api = to_api_error(e);
    if (json_output) {
        out << api.to_json().dump(2) << "\n";
    } else {
        err << api.code << ": " << api.message;
        if (!api.detail.empty()) {
            err << " [" << api.detail << "]";
        }
        err << "\n";
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"ontofm - locate files through a personal ontology", "ontofm"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    app.add_option("--ontology", opt.ontology, "Ontology file (.ontofm.json)");
    app.add_option("--root", opt.root, "Root directory of the mirrored file tree");
    app.add_option("--root-alias", opt.root_alias, "Absolute path under which --root is known to the ontology");
    app.add_flag("--no-birth-time", opt.no_birth_time, "Report created = modified instead of the birth time");
    app.add_flag("--json", opt.json_output, "Machine-readable JSON output");
    app.add_option("--limit", opt.limit, "Maximum number of suggestions")->check(CLI::PositiveNumber);
    app.add_option("--scope", opt.scopes, "Limit to files under this folder (repeatable)");
    app.add_option("--constraint", opt.constraints, "Constraint such as \"Date.value before 2011-05-01\" (repeatable)");
    app.add_option("--depth", opt.depth, "Tree depth limit");

    auto* validate = app.add_subcommand("validate", "Load and validate an ontology; with --root also compare to disk");
    validate->add_option("file", opt.validate_file, "Ontology file (defaults to --ontology)");

    auto* suggest_cmd = app.add_subcommand("suggest", "Type-ahead over ontology instance labels");
    suggest_cmd->add_option("text", opt.typed, "Typed text")->required();

    auto* search_cmd = app.add_subcommand("search", "Rank files by how many terms they relate to");
    search_cmd->add_option("terms", opt.terms, "Instance ids")->required();

    auto* ls = app.add_subcommand("ls", "List a folder, or the files of several folders");
    ls->add_option("paths", opt.ls_paths, "Folders (default: the root)");
    ls->add_option("--sort", opt.sort, "name|created|modified|size");
    ls->add_option("--order", opt.order, "asc|desc");

    auto* graph = app.add_subcommand("graph", "Ontology graph around terms (or concepts of --scope folders)");
    graph->add_option("terms", opt.terms, "Instance ids");
    graph->add_option("--toggle", opt.toggles, "Expand/collapse a node (repeatable, applied in order)");
    graph->add_option("--center", opt.center_node, "Focus on a node");
    graph->add_option("--tree-under", opt.tree_under, "Tree along outgoing relations");
    graph->add_option("--tree-above", opt.tree_above, "Tree along incoming relations");

    auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API");
    serve_cmd->add_option("--port", opt.port, "TCP port")->check(CLI::Range(0, 65535));
    serve_cmd->add_option("--host", opt.host, "Bind address");
    serve_cmd->add_option("--static", opt.static_dir, "Directory of web UI assets served at /");

    for (auto* sub : {validate, suggest_cmd, search_cmd, ls, graph, serve_cmd}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 2;
    }

    try {
        if (*validate) return cmd_validate(opt, out, err);
        if (*suggest_cmd) return cmd_suggest(opt, out, err);
        if (*search_cmd) return cmd_search(opt, out, err);
        if (*ls) return cmd_ls(opt, out, err);
        if (*graph) return cmd_graph(opt, out, err);
        if (*serve_cmd) return cmd_serve(opt, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const Error& e) {
        report(e, opt.json_output, out, err);
        return 1;
    }
    return 2;
}

}  // namespace ontofm::cli
