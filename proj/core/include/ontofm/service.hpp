#pragma once

#include "ontofm/error.hpp"
#include "ontofm/fs_mirror.hpp"
#include "ontofm/ontology.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>

namespace ontofm {

inline constexpr int kDefaultPort = 7311;

struct Config {
    std::string ontology_path;
    std::string root_dir;
    std::string root_alias;  ///< logical name of root_dir; empty = root_dir itself
    std::string host = "127.0.0.1";
    int port = kDefaultPort;
    std::size_t suggest_limit = 10;
    std::size_t tree_depth_limit = 3;
    bool birth_time = true;  ///< use statx birth time for "created" when available
    std::string static_dir;  ///< served at "/" when set
};

/// Throws Error(InvalidArgument) / Error(IoError) naming the bad setting.
void validate_config(const Config& config);

struct ApiError {
    std::string code;  ///< parse_error, validation_error, unknown_instance, unknown_concept,
                       ///< invalid_constraint, not_found, outside_root
    std::string message;
    std::string detail;
    int status = 400;

    nlohmann::json to_json() const;
};

ApiError to_api_error(const Error& e);

struct Request {
    std::string method;
    std::string path;
    std::multimap<std::string, std::string> params;
    std::string body;
};

struct Response {
    int status = 200;
    std::string body;
};

/// One loaded ontology and its load report; never mutated once published.
struct Snapshot {
    Ontology ontology;
    LoadReport report;
};

/// The HTTP API without the transport. Requests are answered from a single
/// snapshot each; reload() publishes a new snapshot only when loading
/// succeeds. Safe to call from any number of threads.
class Service {
public:
    /// Loads the ontology; throws the load error when it fails.
    explicit Service(Config config);

    Response handle(const Request& request);

    /// Reloads config().ontology_path. On failure the previous snapshot stays.
    Response reload();

    std::shared_ptr<const Snapshot> snapshot() const;
    const Config& config() const noexcept { return config_; }
    const FsMirror& mirror() const noexcept { return mirror_; }

private:
    Response dispatch(const Request& request, const Snapshot& snap) const;

    Config config_;
    FsMirror mirror_;
    mutable std::mutex snapshot_mutex_;
    std::shared_ptr<const Snapshot> snapshot_;
    std::mutex reload_mutex_;
};

/// cpp-httplib transport for a Service.
class HttpServer {
public:
    explicit HttpServer(Service& service);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds host:port (port 0 picks a free one) and returns the bound port,
    /// or -1 on failure.
    int bind(const std::string& host, int port);

    /// Blocks serving requests until stop().
    bool listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Loads, binds and serves until interrupted. Returns a process exit code;
/// startup errors are written to `err`.
int serve(const Config& config, std::ostream& out, std::ostream& err);

}  // namespace ontofm
