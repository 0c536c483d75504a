#include "apc/service/protocol.hpp"

#include "apc/viz/chart.hpp"

namespace apc::service {

using nlohmann::json;

namespace {

struct ProtocolError {
    std::string reason;
};

json item(std::string_view tag, const std::string& text) { return {{"tag", tag}, {"text", text}}; }

std::string string_field(const json& req, const char* key, bool required) {
    auto it = req.find(key);
    if (it == req.end()) {
        if (required) throw ProtocolError{std::string("missing field '") + key + "'"};
        return {};
    }
    if (!it->is_string()) throw ProtocolError{std::string("field '") + key + "' must be a string"};
    return it->get<std::string>();
}

std::string object_group(const std::string& name) {
    if (name.empty()) return {};
    if (name == "vars" || name == "variables") return "variables";
    if (name == "charts" || name == "reports" || name == "datasets") return name;
    throw ProtocolError{"unknown object group '" + name + "'"};
}

}  // namespace

ProtocolHandler::ProtocolHandler() : session_(std::make_unique<Session>()) {}

json ProtocolHandler::dispatch(const std::string& kind, const json& req) {
    json resp = {{"ok", true}};
    if (kind == "eval") {
        json items = json::array();
        session_->execute(string_field(req, "source", true),
                          [&](const OutputItem& i) { items.push_back(item(tag_name(i.tag), i.text)); });
        resp["items"] = std::move(items);
    } else if (kind == "complete") {
        resp["names"] = session_->complete(string_field(req, "fragment", true));
    } else if (kind == "objects") {
        json names = json::array(), items = json::array();
        for (const ObjectEntry& e : session_->objects(object_group(string_field(req, "name", false)))) {
            names.push_back(e.group + ":" + e.name);
            items.push_back(item("text", e.line));
        }
        resp["names"] = std::move(names);
        resp["items"] = std::move(items);
    } else if (kind == "get_chart") {
        ChartPtr c = session_->chart(string_field(req, "name", true));
        if (!c) throw ProtocolError{"unknown chart"};
        resp["items"] = json::array({item("text", viz::render_svg(*c))});
    } else if (kind == "get_report") {
        ReportPtr r = session_->report(string_field(req, "name", true));
        if (!r) throw ProtocolError{"unknown report"};
        resp["items"] = json::array({item("text", r->body)});
        resp["names"] = json::array({report::report_kind_name(r->kind)});
    } else if (kind == "help") {
        resp["items"] = json::array({item("text", session_->help(string_field(req, "name", false)))});
    } else if (kind == "reset") {
        session_ = std::make_unique<Session>();
    } else {
        throw ProtocolError{"unknown kind '" + kind + "'"};
    }
    return resp;
}

json ProtocolHandler::handle(const json& req) {
    json id = nullptr;
    try {
        if (!req.is_object()) throw ProtocolError{"request must be a JSON object"};
        auto it = req.find("id");
        if (it == req.end()) throw ProtocolError{"missing field 'id'"};
        if (!it->is_string() && !it->is_number()) throw ProtocolError{"field 'id' must be a string or number"};
        id = *it;
        json resp = dispatch(string_field(req, "kind", true), req);
        resp["id"] = id;
        return resp;
    } catch (const ProtocolError& e) {
        return {{"id", id}, {"ok", false}, {"error", e.reason}};
    }
}

std::string ProtocolHandler::handle_text(std::string_view text) {
    json req = json::parse(text, nullptr, false);
    json resp = req.is_discarded() ? json{{"id", nullptr}, {"ok", false}, {"error", "malformed message: invalid JSON"}}
                                   : handle(req);
    return resp.dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace apc::service
