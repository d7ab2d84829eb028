#include "lcl/http_api.hpp"

#include "lcl/error.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include <functional>

namespace lcl {

std::shared_ptr<SessionStore::Entry> SessionStore::get(const std::string& id, bool create) {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(id);
    if (it != sessions_.end()) return it->second;
    if (!create) return nullptr;
    return sessions_[id] = std::make_shared<Entry>();
}

nlohmann::json envelope(const std::string& id, const Session& s) {
    return {{"session", id},
            {"version", s.version()},
            {"depth", s.depth()},
            {"hash", s.state_hash()},
            {"state", s.state()}};
}

namespace {

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& detail) {
    res.status = status;
    res.set_content(nlohmann::json{{"error", code}, {"detail", detail}}.dump(), "application/json");
}

std::string session_id(const httplib::Request& req) {
    return req.has_param("session") ? req.get_param_value("session") : "default";
}

using Handler = std::function<void(const httplib::Request&, httplib::Response&, const std::string&,
                                   SessionStore::Entry&)>;

// Locks the session and maps failures to {"error","detail"}.
httplib::Server::Handler wrap(SessionStore& store, bool create, bool need_session, Handler h) {
    return [&store, create, need_session, h](const httplib::Request& req, httplib::Response& res) {
        const std::string id = session_id(req);
        auto entry = store.get(id, create);
        if (!entry) return send_error(res, 404, "NoSession", "session \"" + id + "\" has not been built");
        std::lock_guard lock(entry->mu);
        if (need_session && !entry->session)
            return send_error(res, 404, "NoSession", "session \"" + id + "\" has not been built");
        try {
            h(req, res, id, *entry);
        } catch (const Error& e) {
            send_error(res, 400, e.code(), e.detail());
        } catch (const nlohmann::json::exception& e) {
            send_error(res, 400, "BadRequest", e.what());
        }
    };
}

nlohmann::json body_of(const httplib::Request& req) {
    if (req.body.empty()) return nlohmann::json::object();
    auto j = nlohmann::json::parse(req.body, nullptr, false);
    if (j.is_discarded()) fail("BadRequest", "body is not JSON");
    return j;
}

void send_state(httplib::Response& res, const std::string& id, const Session& s) {
    res.set_content(envelope(id, s).dump(), "application/json");
}

} // namespace

void register_routes(httplib::Server& srv, SessionStore& store) {
    srv.Get("/api/fixtures", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(nlohmann::json(fixture_names()).dump(), "application/json");
    });
    srv.Get("/api/state", wrap(store, false, true, [](auto&, auto& res, auto& id, auto& e) {
                send_state(res, id, *e.session);
            }));
    srv.Post("/api/build", wrap(store, true, false, [](auto& req, auto& res, auto& id, auto& e) {
                 auto body = body_of(req);
                 if (!body.contains("fixture")) fail("BadRequest", "missing \"fixture\"");
                 if (e.session) e.session->build(body["fixture"]);
                 else e.session.emplace(body["fixture"]);
                 send_state(res, id, *e.session);
             }));
    srv.Post("/api/mutate", wrap(store, false, true, [](auto& req, auto& res, auto& id, auto& e) {
                 auto body = body_of(req);
                 if (!body.contains("vertex") || !body["vertex"].is_number_integer())
                     fail("BadRequest", "mutate needs an integer \"vertex\"");
                 e.session->mutate(body["vertex"].template get<int>());
                 send_state(res, id, *e.session);
             }));
    srv.Post("/api/undo", wrap(store, false, true, [](auto&, auto& res, auto& id, auto& e) {
                 e.session->undo();
                 send_state(res, id, *e.session);
             }));
    srv.Post("/api/reset", wrap(store, false, true, [](auto&, auto& res, auto& id, auto& e) {
                 e.session->reset();
                 send_state(res, id, *e.session);
             }));
    srv.Get("/api/invariants", wrap(store, false, true, [](auto& req, auto& res, auto&, auto& e) {
                if (!req.has_param("u") || !req.has_param("v")) fail("BadRequest", "need u and v");
                auto out = e.session->invariants(req.get_param_value("u"), req.get_param_value("v"));
                res.set_content(out.dump(), "application/json");
            }));
    srv.Get("/api/quiver.dot", wrap(store, false, true, [](auto&, auto& res, auto&, auto& e) {
                res.set_content(e.session->export_doc("dot"), "text/vnd.graphviz");
            }));
    srv.Get("/api/export", wrap(store, false, true, [](auto& req, auto& res, auto&, auto& e) {
                const std::string fmt = req.has_param("format") ? req.get_param_value("format") : "json";
                res.set_content(e.session->export_doc(fmt), fmt == "dot" ? "text/vnd.graphviz" : "application/json");
            }));
    srv.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404 && res.body.empty()) send_error(res, 404, "NotFound", req.path);
    });
}

void serve(const std::string& host, int port) {
    httplib::Server srv;
    SessionStore store;
    register_routes(srv, store);
    spdlog::info("listening on {}:{}", host, port);
    if (!srv.listen(host, port)) fail("ListenFailed", host + ":" + std::to_string(port));
}

} // namespace lcl
