// JSON protocol service: NDJSON over TCP or stdio, and WebSocket for the
// browser console.

#include <csignal>
#include <iostream>
#include <pthread.h>
#include <thread>

#include "CLI11.hpp"
#include "apc/service/server.hpp"

namespace {

bool split_address(const std::string& text, std::string& host, std::uint16_t& port) {
    auto colon = text.rfind(':');
    if (colon == std::string::npos) return false;
    host = text.substr(0, colon);
    try {
        unsigned long p = std::stoul(text.substr(colon + 1));
        if (p > 65535) return false;
        port = std::uint16_t(p);
    } catch (const std::exception&) {
        return false;
    }
    if (host.empty()) host = "127.0.0.1";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Session service for the calculator protocol"};
    std::string listen, web, static_dir;
    bool stdio = false;
    app.add_option("--listen", listen, "host:port for newline-delimited JSON over TCP");
    app.add_option("--http", web, "host:port for the WebSocket endpoint (/ws) and static files");
    app.add_option("--static", static_dir, "Directory served over --http")->check(CLI::ExistingDirectory);
    app.add_flag("--stdio", stdio, "Serve one session on stdin/stdout");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (stdio) {
        if (!listen.empty() || !web.empty()) {
            std::cerr << "--stdio cannot be combined with --listen or --http\n";
            return 2;
        }
        apc::service::serve_stream(std::cin, std::cout);
        return 0;
    }
    if (listen.empty() && web.empty()) {
        std::cerr << "one of --listen, --http or --stdio is required\n";
        return 2;
    }

    sigset_t stop_signals;
    sigemptyset(&stop_signals);
    sigaddset(&stop_signals, SIGINT);
    sigaddset(&stop_signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

    std::unique_ptr<apc::service::StreamServer> stream;
    std::unique_ptr<apc::service::WebServer> http;
    try {
        std::string host;
        std::uint16_t port = 0;
        if (!listen.empty()) {
            if (!split_address(listen, host, port)) throw std::invalid_argument("bad --listen address " + listen);
            stream = std::make_unique<apc::service::StreamServer>(host, port);
            std::cerr << "listening on " << host << ":" << stream->port() << std::endl;
        }
        if (!web.empty()) {
            if (!split_address(web, host, port)) throw std::invalid_argument("bad --http address " + web);
            http = std::make_unique<apc::service::WebServer>(host, port, static_dir);
            std::cerr << "http on " << host << ":" << http->port() << std::endl;
        }
    } catch (const std::exception& e) {
        std::cerr << "cannot start: " << e.what() << '\n';
        return 1;
    }

    std::vector<std::thread> runners;
    if (stream) runners.emplace_back([&] { stream->run(); });
    if (http) runners.emplace_back([&] { http->run(); });
    int sig = 0;
    sigwait(&stop_signals, &sig);
    if (stream) stream->stop();
    if (http) http->stop();
    for (auto& t : runners) t.join();
    return 0;
}
