#include "ontofm/service.hpp"

#include <httplib.h>

#include <atomic>
#include <csignal>

namespace ontofm {

struct HttpServer::Impl {
    explicit Impl(Service& s) : service(s) {}

    Service& service;
    httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
        Request r;
        r.method = req.method;
        r.path = req.path;
        r.body = req.body;
        for (const auto& [key, value] : req.params) {
            r.params.emplace(key, value);
        }
        const auto out = impl_->service.handle(r);
        res.status = out.status;
        res.set_content(out.body, "application/json");
    };
    impl_->server.Get(R"(/api/.*)", handler);
    impl_->server.Post(R"(/api/.*)", handler);

    const auto& static_dir = service.config().static_dir;
    if (!static_dir.empty()) {
        impl_->server.set_mount_point("/", static_dir);
    }
}

HttpServer::~HttpServer() {
    stop();
}

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) {
        return impl_->server.bind_to_any_port(host);
    }
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() {
    return impl_->server.listen_after_bind();
}

void HttpServer::stop() {
    if (impl_) {
        impl_->server.stop();
    }
}

namespace {

std::atomic<HttpServer*> g_running{nullptr};

extern "C" void on_signal(int) {
    if (auto* s = g_running.load()) {
        s->stop();
    }
}

}  // namespace

int serve(const Config& config, std::ostream& out, std::ostream& err) {
    std::unique_ptr<Service> service;
    try {
        service = std::make_unique<Service>(config);
    } catch (const Error& e) {
        err << to_api_error(e).to_json().dump() << "\n";
        return 1;
    }
    HttpServer server(*service);
    const int port = server.bind(config.host, config.port);
    if (port < 0) {
        err << ApiError{"not_found", "cannot bind " + config.host + ":" + std::to_string(config.port), config.host, 500}
                   .to_json()
                   .dump()
            << "\n";
        return 1;
    }
    const auto& report = service->snapshot()->report;
    for (const auto& w : report.warnings) {
        err << "warning: " << w << "\n";
    }
    out << "ontofm serving " << report.instances << " instances on http://" << config.host << ":" << port << "/"
        << std::endl;

    g_running = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    const bool clean = server.listen();
    g_running = nullptr;
    return clean ? 0 : 1;
}

}  // namespace ontofm
