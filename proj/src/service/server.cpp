#include "apc/service/server.hpp"

#include <boost/asio.hpp>

#include <atomic>
#include <istream>
#include <list>
#include <mutex>
#include <ostream>
#include <thread>

#include "apc/service/protocol.hpp"

namespace apc::service {

namespace asio = boost::asio;
using asio::ip::tcp;

void serve_stream(std::istream& in, std::ostream& out) {
    ProtocolHandler handler;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::string reply = handler.handle_text(line);
        reply += '\n';
        out.write(reply.data(), std::streamsize(reply.size()));
        out.flush();
    }
}

struct StreamServer::Impl {
    struct Connection {
        std::shared_ptr<tcp::iostream> stream;
        std::shared_ptr<std::atomic<bool>> done;
        std::thread thread;
    };

    asio::io_context io;
    tcp::acceptor acceptor{io};
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
        acceptor.async_accept([this](boost::system::error_code ec, tcp::socket sock) {
            if (ec) return;
            boost::system::error_code ignored;
            sock.set_option(tcp::no_delay(true), ignored);
            auto stream = std::make_shared<tcp::iostream>(std::move(sock));
            auto done = std::make_shared<std::atomic<bool>>(false);
            {
                std::lock_guard lock(mu);
                reap();
                connections.push_back({stream, done, std::thread([stream, done] {
                                           serve_stream(*stream, *stream);
                                           done->store(true);
                                       })});
            }
            accept();
        });
    }
};

StreamServer::StreamServer(const std::string& host, std::uint16_t port) : impl_(std::make_unique<Impl>()) {
    tcp::endpoint ep(asio::ip::make_address(host), port);
    impl_->acceptor.open(ep.protocol());
    impl_->acceptor.set_option(tcp::acceptor::reuse_address(true));
    impl_->acceptor.bind(ep);
    impl_->acceptor.listen();
    impl_->accept();
}

StreamServer::~StreamServer() {
    stop();
    std::lock_guard lock(impl_->mu);
    for (auto& c : impl_->connections) {
        boost::system::error_code ignored;
        c.stream->socket().shutdown(tcp::socket::shutdown_both, ignored);
        c.thread.join();
    }
}

std::uint16_t StreamServer::port() const { return impl_->acceptor.local_endpoint().port(); }

void StreamServer::run() { impl_->io.run(); }

void StreamServer::stop() {
    asio::post(impl_->io, [this] {
        boost::system::error_code ignored;
        impl_->acceptor.close(ignored);
    });
    impl_->io.stop();
}

}  // namespace apc::service
