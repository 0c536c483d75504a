#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include <sys/socket.h>

#include <atomic>
#include <list>
#include <mutex>
#include <thread>

#include "apc/service/protocol.hpp"
#include "apc/service/server.hpp"

namespace apc::service {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

const char* mime_type(const std::filesystem::path& p) {
    const std::string ext = p.extension().string();
    if (ext == ".html" || ext == ".htm") return "text/html; charset=utf-8";
    if (ext == ".js" || ext == ".mjs") return "text/javascript";
    if (ext == ".css") return "text/css";
    if (ext == ".svg") return "image/svg+xml";
    if (ext == ".json") return "application/json";
    if (ext == ".png") return "image/png";
    return "application/octet-stream";
}

http::response<http::string_body> plain(const http::request<http::string_body>& req, http::status status,
                                        std::string body) {
    http::response<http::string_body> res{status, req.version()};
    res.set(http::field::content_type, "text/plain; charset=utf-8");
    res.keep_alive(req.keep_alive());
    res.body() = std::move(body);
    res.prepare_payload();
    return res;
}

template <class Body>
void send(tcp::socket& sock, http::response<Body>& res) {
    http::write(sock, res);
}

// Maps a request target to a file under root, refusing anything that
// escapes it.
std::optional<std::filesystem::path> resolve(const std::filesystem::path& root, std::string_view target) {
    std::string path(target.substr(0, target.find('?')));
    if (path.empty() || path[0] != '/' || path.find("..") != std::string::npos) return std::nullopt;
    if (path.back() == '/') path += "index.html";
    return root / path.substr(1);
}

void serve_websocket(tcp::socket sock, http::request<http::string_body> req) {
    websocket::stream<tcp::socket> ws(std::move(sock));
    ws.accept(req);
    ProtocolHandler handler;
    beast::flat_buffer buf;
    for (;;) {
        beast::error_code ec;
        ws.read(buf, ec);
        if (ec) return;
        std::string reply = handler.handle_text(beast::buffers_to_string(buf.data()));
        buf.consume(buf.size());
        ws.text(true);
        ws.write(asio::buffer(reply), ec);
        if (ec) return;
    }
}

void serve_http(tcp::socket sock, const std::filesystem::path& root) {
    beast::flat_buffer buf;
    for (;;) {
        http::request<http::string_body> req;
        beast::error_code ec;
        http::read(sock, buf, req, ec);
        if (ec) return;
        if (websocket::is_upgrade(req)) {
            if (req.target() != "/ws") {
                auto res = plain(req, http::status::not_found, "no such endpoint\n");
                send(sock, res);
                return;
            }
            serve_websocket(std::move(sock), std::move(req));
            return;
        }
        if (req.method() != http::verb::get && req.method() != http::verb::head) {
            auto res = plain(req, http::status::method_not_allowed, "only GET is supported\n");
            send(sock, res);
        } else if (auto file = root.empty() ? std::nullopt : resolve(root, std::string_view(req.target().data(), req.target().size()))) {
            http::file_body::value_type body;
            body.open(file->c_str(), beast::file_mode::scan, ec);
            if (ec) {
                auto res = plain(req, http::status::not_found, "not found\n");
                send(sock, res);
            } else {
                http::response<http::file_body> res{std::piecewise_construct, std::make_tuple(std::move(body)),
                                                    std::make_tuple(http::status::ok, req.version())};
                res.set(http::field::content_type, mime_type(*file));
                res.keep_alive(req.keep_alive());
                res.prepare_payload();
                send(sock, res);
            }
        } else {
            auto res = plain(req, http::status::not_found, "not found\n");
            send(sock, res);
        }
        if (!req.keep_alive()) return;
    }
}

}  // namespace

struct WebServer::Impl {
    struct Connection {
        int fd;
        std::shared_ptr<std::atomic<bool>> done;
        std::thread thread;
    };

    asio::io_context io;
    tcp::acceptor acceptor{io};
    std::filesystem::path root;
    std::mutex mu;
    std::list<Connection> connections;

    void reap() {
        for (auto it = connections.begin(); it != connections.end();) {
            if (it->done->load()) {
                it->thread.join();
                it = connections.erase(it);
            } else {
                ++it;
            }
        }
    }

    void accept() {
        acceptor.async_accept([this](beast::error_code ec, tcp::socket s) {
            if (ec) return;
            beast::error_code ignored;
            s.set_option(tcp::no_delay(true), ignored);
            auto sock = std::make_shared<tcp::socket>(std::move(s));
            const int fd = sock->native_handle();
            auto done = std::make_shared<std::atomic<bool>>(false);
            std::lock_guard lock(mu);
            reap();
            connections.push_back({fd, done, std::thread([sock, done, r = root] {
                                       try {
                                           serve_http(std::move(*sock), r);
                                       } catch (const std::exception&) {
                                       }
                                       done->store(true);
                                   })});
            accept();
        });
    }
};

WebServer::WebServer(const std::string& host, std::uint16_t port, std::filesystem::path doc_root)
    : impl_(std::make_unique<Impl>()) {
    impl_->root = std::move(doc_root);
    tcp::endpoint ep(asio::ip::make_address(host), port);
    impl_->acceptor.open(ep.protocol());
    impl_->acceptor.set_option(tcp::acceptor::reuse_address(true));
    impl_->acceptor.bind(ep);
    impl_->acceptor.listen();
    impl_->accept();
}

WebServer::~WebServer() {
    stop();
    std::lock_guard lock(impl_->mu);
    for (auto& c : impl_->connections) {
        if (!c.done->load()) ::shutdown(c.fd, SHUT_RDWR);
        c.thread.join();
    }
}

std::uint16_t WebServer::port() const { return impl_->acceptor.local_endpoint().port(); }

void WebServer::run() { impl_->io.run(); }

void WebServer::stop() {
    asio::post(impl_->io, [this] {
        beast::error_code ignored;
        impl_->acceptor.close(ignored);
    });
    impl_->io.stop();
}

}  // namespace apc::service
