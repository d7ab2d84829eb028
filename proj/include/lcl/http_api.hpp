#pragma once

// JSON API over httplib. Sessions are chosen with ?session=<id> (default
// "default"); requests on one session are serialised by its mutex.

#include "lcl/session.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace httplib {
class Server;
}

namespace lcl {

class SessionStore {
public:
    struct Entry {
        std::mutex mu;
        std::optional<Session> session;
    };
    std::shared_ptr<Entry> get(const std::string& id, bool create);

private:
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

// {"session", "version", "depth", "hash", "state"}
nlohmann::json envelope(const std::string& id, const Session& s);
void register_routes(httplib::Server& srv, SessionStore& store);
// Blocks until the server stops.
void serve(const std::string& host, int port);

} // namespace lcl
