#pragma once
// JSON request/response handling for one client session.
//
// request  {id, kind, source? | fragment? | name?}
// response {id, ok, items?: [{tag, text}], names?, error?}

#include <memory>
#include <string>
#include <string_view>

#include "apc/runtime/session.hpp"
#include "json.hpp"

namespace apc::service {

class ProtocolHandler {
public:
    ProtocolHandler();

    nlohmann::json handle(const nlohmann::json& request);
    // One serialized request in, one serialized response out (no newline).
    std::string handle_text(std::string_view text);

    Session& session() { return *session_; }

private:
    nlohmann::json dispatch(const std::string& kind, const nlohmann::json& request);

    std::unique_ptr<Session> session_;
};

}  // namespace apc::service
