#pragma once
// Transports for the JSON protocol. Every connection gets its own session;
// requests on one connection are handled in arrival order.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>

namespace apc::service {

// Newline-delimited requests from in, one response line each to out.
// Returns when in is exhausted.
void serve_stream(std::istream& in, std::ostream& out);

// Newline-delimited JSON over TCP.
class StreamServer {
public:
    // Binds immediately; port 0 picks a free port. Throws on bind failure.
    StreamServer(const std::string& host, std::uint16_t port);
    ~StreamServer();

    std::uint16_t port() const;
    // Accepts connections until stop() is called.
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// HTTP server for the browser console: GET serves static files from
// doc_root (when set) and a WebSocket upgrade on /ws carries one JSON
// request per text message.
class WebServer {
public:
    WebServer(const std::string& host, std::uint16_t port, std::filesystem::path doc_root = {});
    ~WebServer();

    std::uint16_t port() const;
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace apc::service
