#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "apc/service/protocol.hpp"
#include "apc/service/server.hpp"
#include "doctest.h"

using namespace apc;
using nlohmann::json;
namespace asio = boost::asio;
using asio::ip::tcp;

namespace {

json eval(service::ProtocolHandler& h, const std::string& id, const std::string& source) {
    return h.handle({{"id", id}, {"kind", "eval"}, {"source", source}});
}

// One NDJSON client connection.
class Client {
public:
    explicit Client(std::uint16_t port) : stream_("127.0.0.1", std::to_string(port)) {
        REQUIRE(stream_);
        stream_.socket().set_option(tcp::no_delay(true));
    }

    json call(const json& req) {
        stream_ << req.dump() << "\n" << std::flush;
        std::string line;
        std::getline(stream_, line);
        return json::parse(line);
    }

private:
    tcp::iostream stream_;
};

struct RunningServer {
    service::StreamServer server{"127.0.0.1", 0};
    std::thread runner{[this] { server.run(); }};
    ~RunningServer() {
        server.stop();
        runner.join();
    }
};

}  // namespace

TEST_CASE("protocol requests") {
    service::ProtocolHandler h;
    json r = eval(h, "a", "2^( 3 + 1 ) / 4");
    CHECK(r == json{{"id", "a"}, {"ok", true}, {"items", json::array({{{"tag", "text"}, {"text", "4"}}})}});
    r = eval(h, "b", "$myvar = 12\n$nope\nplot([1, 2], [3, 4])");
    CHECK(r["ok"] == true);
    REQUIRE(r["items"].size() == 2);
    CHECK(r["items"][0]["tag"] == "error");
    CHECK(r["items"][1] == json{{"tag", "chart_ref"}, {"text", "chart_1"}});
    CHECK(h.handle({{"id", "c"}, {"kind", "complete"}, {"fragment", "$my"}})["names"] == json::array({"$myvar"}));
    r = h.handle({{"id", "d"}, {"kind", "objects"}});
    CHECK(r["names"] == json::array({"variables:$myvar", "charts:chart_1"}));
    CHECK(r["items"][0]["text"] == "$myvar : integer = 12");
    r = h.handle({{"id", "e"}, {"kind", "objects"}, {"name", "charts"}});
    CHECK(r["names"] == json::array({"charts:chart_1"}));
    r = h.handle({{"id", "f"}, {"kind", "get_chart"}, {"name", "chart_1"}});
    CHECK(r["items"][0]["text"].get<std::string>().find("<svg") != std::string::npos);
    CHECK(h.handle({{"id", "g"}, {"kind", "get_chart"}, {"name", "chart_9"}}) ==
          json{{"id", "g"}, {"ok", false}, {"error", "unknown chart"}});
    eval(h, "h", "ztest([1, 2, 3], 1, 1, report=true)");
    r = h.handle({{"id", "i"}, {"kind", "get_report"}, {"name", "report_1"}});
    CHECK(r["names"] == json::array({"html"}));
    CHECK(r["items"][0]["text"].get<std::string>().rfind("<!DOCTYPE html>", 0) == 0);
    r = h.handle({{"id", "j"}, {"kind", "help"}, {"name", "invert"}});
    CHECK(r["items"][0]["text"].get<std::string>().find("invert(matrix)") != std::string::npos);
    CHECK(h.handle({{"id", "k"}, {"kind", "reset"}})["ok"] == true);
    CHECK(eval(h, "l", "$myvar")["items"][0]["tag"] == "error");
}

TEST_CASE("malformed requests get protocol errors") {
    service::ProtocolHandler h;
    CHECK(json::parse(h.handle_text("{oops"))["error"] == "malformed message: invalid JSON");
    CHECK(h.handle(json::array())["ok"] == false);
    CHECK(h.handle({{"kind", "eval"}, {"source", "1"}})["error"] == "missing field 'id'");
    CHECK(h.handle({{"id", "x"}, {"kind", "eval"}})["error"] == "missing field 'source'");
    CHECK(h.handle({{"id", "x"}, {"kind", "eval"}, {"source", 5}})["error"] == "field 'source' must be a string");
    json r = h.handle({{"id", "x"}, {"kind", "launch"}});
    CHECK(r["id"] == "x");
    CHECK(r["error"] == "unknown kind 'launch'");
    CHECK(h.handle({{"id", 7}, {"kind", "reset"}})["id"] == 7);
}

TEST_CASE("stdio framing answers every line in order") {
    std::istringstream in(R"({"id":"2","kind":"eval","source":"$x = 5"}

{"id":"1","kind":"eval","source":"$x * 2"}
garbage
)");
    std::ostringstream out;
    service::serve_stream(in, out);
    std::istringstream lines(out.str());
    std::vector<json> replies;
    for (std::string l; std::getline(lines, l);) replies.push_back(json::parse(l));
    REQUIRE(replies.size() == 3);
    CHECK(replies[0]["id"] == "2");
    CHECK(replies[1]["id"] == "1");
    CHECK(replies[1]["items"][0]["text"] == "10");
    CHECK(replies[2]["ok"] == false);
}

TEST_CASE("tcp connections have separate sessions") {
    RunningServer srv;
    Client a(srv.server.port()), b(srv.server.port());
    CHECK(a.call({{"id", "1"}, {"kind", "eval"}, {"source", "$v = 1"}})["ok"] == true);
    CHECK(b.call({{"id", "1"}, {"kind", "eval"}, {"source", "$v = 2"}})["ok"] == true);
    std::vector<std::thread> workers;
    std::vector<std::string> seen(2);
    for (int k = 0; k < 2; ++k) {
        workers.emplace_back([&, k] {
            Client& c = k == 0 ? a : b;
            for (int i = 0; i < 50; ++i) {
                json r = c.call({{"id", std::to_string(i)}, {"kind", "eval"}, {"source", "$v = $v + 1\n$v"}});
                if (r["id"] != std::to_string(i)) seen[k] = "bad id";
                else seen[k] = r["items"][0]["text"];
            }
        });
    }
    for (auto& w : workers) w.join();
    CHECK(seen[0] == "51");
    CHECK(seen[1] == "52");
    {
        Client c(srv.server.port());
        c.call({{"id", "1"}, {"kind", "eval"}, {"source", "$w = 1"}});
    }
    Client d(srv.server.port());
    CHECK(d.call({{"id", "1"}, {"kind", "eval"}, {"source", "$w"}})["items"][0]["tag"] == "error");
}

TEST_CASE("websocket endpoint and static files") {
    namespace beast = boost::beast;
    namespace http = beast::http;
    auto root = std::filesystem::temp_directory_path() / "apcalc_static_test";
    std::filesystem::create_directories(root);
    std::ofstream(root / "index.html") << "<p>console</p>";
    service::WebServer server("127.0.0.1", 0, root);
    std::thread runner([&] { server.run(); });

    asio::io_context io;
    {
        tcp::socket sock(io);
        sock.connect({asio::ip::make_address("127.0.0.1"), server.port()});
        http::request<http::empty_body> req{http::verb::get, "/", 11};
        req.set(http::field::host, "localhost");
        req.keep_alive(false);
        http::write(sock, req);
        beast::flat_buffer buf;
        http::response<http::string_body> res;
        http::read(sock, buf, res);
        CHECK(res.result() == http::status::ok);
        CHECK(res.body() == "<p>console</p>");
    }
    {
        tcp::socket sock(io);
        sock.connect({asio::ip::make_address("127.0.0.1"), server.port()});
        http::request<http::empty_body> req{http::verb::get, "/../etc/passwd", 11};
        req.set(http::field::host, "localhost");
        req.keep_alive(false);
        http::write(sock, req);
        beast::flat_buffer buf;
        http::response<http::string_body> res;
        http::read(sock, buf, res);
        CHECK(res.result() == http::status::not_found);
    }
    {
        beast::websocket::stream<tcp::socket> ws(io);
        ws.next_layer().connect({asio::ip::make_address("127.0.0.1"), server.port()});
        ws.handshake("localhost", "/ws");
        ws.write(asio::buffer(json{{"id", "1"}, {"kind", "eval"}, {"source", "$myvar = 4\n$MyVar * 3"}}.dump()));
        beast::flat_buffer buf;
        ws.read(buf);
        json r = json::parse(beast::buffers_to_string(buf.data()));
        CHECK(r["items"][0]["text"] == "12");
        ws.close(beast::websocket::close_code::normal);
    }
    server.stop();
    runner.join();
}
