#include "ontofm/service.hpp"

#include "json_detail.hpp"
#include "ontofm/json_codec.hpp"
#include "ontofm/search.hpp"
#include "ontofm/text.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

namespace ontofm {

using nlohmann::json;

void validate_config(const Config& config) {
    if (config.ontology_path.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no ontology file configured (--ontology)");
    }
    if (config.root_dir.empty() || !std::filesystem::is_directory(config.root_dir)) {
        throw Error(ErrorCode::NotFound, "root directory '" + config.root_dir + "' does not exist", config.root_dir);
    }
    if (config.port < 0 || config.port > 65535) {
        throw Error(ErrorCode::InvalidArgument, "port out of range", std::to_string(config.port));
    }
    if (config.suggest_limit == 0) {
        throw Error(ErrorCode::InvalidArgument, "suggest limit must be at least 1");
    }
}

json ApiError::to_json() const {
    return {{"error", {{"code", code}, {"message", message}, {"detail", detail}}}};
}

ApiError to_api_error(const Error& e) {
    ApiError out;
    out.message = e.what();
    out.detail = e.detail();
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidArgument:
            out.code = "parse_error";
            out.status = 400;
            break;
        case ErrorCode::ValidationError:
            out.code = "validation_error";
            out.status = 422;
            break;
        case ErrorCode::UnknownInstance:
            out.code = "unknown_instance";
            out.status = 404;
            break;
        case ErrorCode::UnknownConcept:
            out.code = "unknown_concept";
            out.status = 404;
            break;
        case ErrorCode::InvalidConstraint:
            out.code = "invalid_constraint";
            out.status = 400;
            break;
        case ErrorCode::NotFound:
        case ErrorCode::IoError:
            out.code = "not_found";
            out.status = 404;
            break;
        case ErrorCode::NodeNotVisible:
            out.code = "not_found";
            out.status = 409;
            break;
        case ErrorCode::OutsideRoot:
            out.code = "outside_root";
            out.status = 403;
            break;
    }
    return out;
}

namespace {

Response ok(const json& body) {
    return Response{200, body.dump()};
}

Response fail(const Error& e) {
    const auto api = to_api_error(e);
    return Response{api.status, api.to_json().dump()};
}

[[noreturn]] void bad_request(const std::string& message, const std::string& detail = {}) {
    throw Error(ErrorCode::InvalidArgument, message, detail);
}

void allow_params(const Request& r, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : r.params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            bad_request("unknown query parameter '" + key + "'", key);
        }
    }
}

std::optional<std::string> param(const Request& r, const std::string& key) {
    const auto it = r.params.find(key);
    if (it == r.params.end()) {
        return std::nullopt;
    }
    return it->second;
}

/// Values of a repeatable, comma-separated parameter.
std::vector<std::string> list_param(const Request& r, const std::string& key) {
    std::vector<std::string> out;
    const auto [first, last] = r.params.equal_range(key);
    for (auto it = first; it != last; ++it) {
        std::size_t pos = 0;
        const auto& v = it->second;
        while (pos <= v.size()) {
            const auto comma = v.find(',', pos);
            const auto end = comma == std::string::npos ? v.size() : comma;
            if (end > pos) {
                out.push_back(v.substr(pos, end - pos));
            }
            pos = end + 1;
        }
    }
    return out;
}

std::size_t size_param(const Request& r, const std::string& key, std::size_t fallback) {
    const auto v = param(r, key);
    if (!v) {
        return fallback;
    }
    try {
        std::size_t used = 0;
        const auto n = std::stoul(*v, &used);
        if (used != v->size() || n == 0) {
            throw std::invalid_argument(key);
        }
        return n;
    } catch (const std::logic_error&) {
        bad_request("parameter '" + key + "' must be a positive integer", *v);
    }
}

json parse_body(const Request& r) {
    return detail::parse_document(r.body);
}

void sort_results(std::vector<ScoredFile>& results, const json& sort) {
    detail::expect_object(sort, "/sort", {"key", "order"});
    const auto key = detail::expect_string(sort, "key", "/sort");
    auto order = std::string("asc");
    if (detail::optional_field(sort, "order") != nullptr) {
        order = detail::expect_string(sort, "order", "/sort");
    }
    if (order != "asc" && order != "desc") {
        bad_request("sort order must be asc or desc", order);
    }
    const bool desc = order == "desc";
    const auto path_of = [](const ScoredFile& f) { return f.file->path() ? *f.file->path() : std::string(); };
    if (key == "score") {
        std::stable_sort(results.begin(), results.end(), [&](const ScoredFile& a, const ScoredFile& b) {
            return desc ? a.score > b.score : a.score < b.score;
        });
    } else if (key == "label") {
        std::stable_sort(results.begin(), results.end(), [&](const ScoredFile& a, const ScoredFile& b) {
            const int c = text::icompare(a.file->label, b.file->label);
            return desc ? c > 0 : c < 0;
        });
    } else if (key == "path") {
        std::stable_sort(results.begin(), results.end(), [&](const ScoredFile& a, const ScoredFile& b) {
            return desc ? path_of(a) > path_of(b) : path_of(a) < path_of(b);
        });
    } else {
        bad_request("sort key must be score, label or path", key);
    }
}

}  // namespace

Service::Service(Config config)
    : config_(std::move(config)),
      mirror_(config_.root_dir, config_.root_alias, config_.birth_time) {
    validate_config(config_);
    auto snap = std::make_shared<Snapshot>();
    snap->ontology = load_ontology_file(config_.ontology_path, &snap->report);
    snapshot_ = std::move(snap);
}

std::shared_ptr<const Snapshot> Service::snapshot() const {
    std::lock_guard lock(snapshot_mutex_);
    return snapshot_;
}

Response Service::reload() {
    std::lock_guard reload_lock(reload_mutex_);
    try {
        auto snap = std::make_shared<Snapshot>();
        snap->ontology = load_ontology_file(config_.ontology_path, &snap->report);
        const auto body = json_codec::to_json(snap->report);
        {
            std::lock_guard lock(snapshot_mutex_);
            snapshot_ = std::move(snap);
        }
        return ok(body);
    } catch (const Error& e) {
        const auto api = to_api_error(e);
        auto body = api.to_json();
        body["status"] = "error";
        return Response{api.status, body.dump()};
    }
}

Response Service::handle(const Request& request) {
    if (request.path == "/api/reload") {
        if (request.method != "POST") {
            return fail(Error(ErrorCode::NotFound, request.method + " is not supported on " + request.path,
                              request.path));
        }
        return reload();
    }
    const auto snap = snapshot();
    try {
        return dispatch(request, *snap);
    } catch (const Error& e) {
        return fail(e);
    } catch (const nlohmann::json::exception& e) {
        return fail(ParseError(e.what(), 0, 0));
    }
}

Response Service::dispatch(const Request& r, const Snapshot& snap) const {
    const auto& o = snap.ontology;
    const auto expect_method = [&](std::string_view method) {
        if (r.method != method) {
            throw Error(ErrorCode::NotFound, r.method + " is not supported on " + r.path, r.path);
        }
    };

    if (r.path == "/api/ontology/stats") {
        expect_method("GET");
        allow_params(r, {});
        return ok({{"concepts", o.concepts().size()},
                   {"instances", o.instances().size()},
                   {"relations", o.relations().size()}});
    }

    if (r.path == "/api/suggest") {
        expect_method("GET");
        allow_params(r, {"q", "limit"});
        const auto limit = size_param(r, "limit", config_.suggest_limit);
        json list = json::array();
        for (const auto& s : suggest(o, param(r, "q").value_or(""), limit)) {
            list.push_back(json_codec::to_json(s));
        }
        return ok({{"suggestions", list}});
    }

    if (r.path == "/api/search") {
        expect_method("POST");
        allow_params(r, {});
        const auto body = parse_body(r);
        const auto query = json_codec::query_from_json(body, {"sort"});
        auto results = search(o, query);
        if (const auto* sort = detail::optional_field(body, "sort")) {
            sort_results(results, *sort);
        }
        json list = json::array();
        for (const auto& f : results) {
            list.push_back(json_codec::to_json(f));
        }
        const auto graph = initial_graph(o, query.terms);
        return ok({{"results", list}, {"graph", json_codec::graph_to_json(o, graph)}});
    }

    if (r.path == "/api/graph/toggle" || r.path == "/api/graph/center" || r.path == "/api/graph/tree") {
        expect_method("POST");
        allow_params(r, {});
        const auto body = parse_body(r);
        const bool is_tree = r.path == "/api/graph/tree";
        if (is_tree) {
            detail::expect_object(body, "", {"state", "node", "direction", "depth"});
        } else {
            detail::expect_object(body, "", {"state", "node"});
        }
        const auto* state_json = detail::optional_field(body, "state");
        if (state_json == nullptr) {
            detail::structure_error("", "missing field 'state'");
        }
        const auto state = json_codec::graph_from_json(o, *state_json);
        const InstanceId node{detail::expect_string(body, "node", "")};
        o.instance(node);

        GraphState next;
        if (r.path == "/api/graph/toggle") {
            next = toggle(o, state, node);
        } else if (r.path == "/api/graph/center") {
            next = center(state, node);
        } else {
            const auto direction_name = detail::optional_field(body, "direction")
                                            ? detail::expect_string(body, "direction", "")
                                            : std::string("under");
            const auto direction = parse_tree_direction(direction_name);
            if (!direction) {
                bad_request("direction must be under or above", direction_name);
            }
            std::size_t depth = config_.tree_depth_limit;
            if (const auto* d = detail::optional_field(body, "depth")) {
                if (!d->is_number_unsigned()) {
                    detail::structure_error("/depth", "expected a non-negative integer");
                }
                depth = d->get<std::size_t>();
            }
            next = tree(o, state, node, *direction, depth);
        }
        return ok({{"state", json_codec::graph_to_json(o, next)}});
    }

    if (r.path == "/api/graph/folders") {
        expect_method("GET");
        allow_params(r, {"folders"});
        std::vector<std::string> folders;
        for (const auto& f : list_param(r, "folders")) {
            folders.push_back(mirror_.resolve(f));
        }
        if (folders.empty()) {
            bad_request("at least one folder is required", "folders");
        }
        return ok({{"concepts", json_codec::to_json(concepts_for_folders(o, folders))}});
    }

    if (r.path == "/api/folders") {
        expect_method("GET");
        allow_params(r, {"path"});
        const auto listing = mirror_.list_children(param(r, "path").value_or(mirror_.root()), &o);
        json folders = json::array();
        for (const auto& f : listing.folders) {
            folders.push_back(json_codec::to_json(f));
        }
        json files = json::array();
        for (const auto& f : listing.files) {
            files.push_back(json_codec::to_json(f));
        }
        return ok({{"folders", folders}, {"files", files}});
    }

    if (r.path == "/api/files") {
        expect_method("GET");
        allow_params(r, {"folders", "sort", "order"});
        const auto folders = list_param(r, "folders");
        if (folders.empty()) {
            bad_request("at least one folder is required", "folders");
        }
        const auto sort_name = param(r, "sort").value_or("name");
        const auto order_name = param(r, "order").value_or("asc");
        const auto key = parse_sort_key(sort_name);
        const auto order = parse_sort_order(order_name);
        if (!key) {
            bad_request("sort must be name, created, modified or size", sort_name);
        }
        if (!order) {
            bad_request("order must be asc or desc", order_name);
        }
        json files = json::array();
        for (const auto& f : mirror_.list_files(folders, *key, *order, &o)) {
            files.push_back(json_codec::to_json(f));
        }
        return ok({{"files", files}});
    }

    throw Error(ErrorCode::NotFound, "no such endpoint '" + r.path + "'", r.path);
}

}  // namespace ontofm
