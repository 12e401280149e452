#include "ppco/service.hpp"

#include <atomic>
#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "ppco/drp_xml.hpp"
#include "ppco/viewpoint.hpp"
#include "ppco/workflow.hpp"

namespace ppco {

using nlohmann::json;

namespace {

std::atomic<std::uint64_t> correlation_counter{0};

std::string correlation_id_of(const httplib::Request& req, const json* body) {
    if (body && body->contains("correlation_id")) {
        return body->at("correlation_id").get<std::string>();
    }
    if (req.has_param("correlation_id")) return req.get_param_value("correlation_id");
    if (req.has_header("X-Correlation-Id")) return req.get_header_value("X-Correlation-Id");
    return "auto-" + std::to_string(++correlation_counter);
}

void reply_json(httplib::Response& res, const json& body, int status = 200) {
    res.status = status;
    if (body.contains("correlation_id")) {
        res.set_header("X-Correlation-Id", body["correlation_id"].get<std::string>());
    }
    res.set_content(body.dump(2), "application/json");
}

void reply_error(httplib::Response& res, const std::string& correlation, const Error& e) {
    reply_json(res,
               json{{"status", "error"},
                    {"error", e.name()},
                    {"message", e.what()},
                    {"correlation_id", correlation}},
               400);
}

json connexions_to_json(const InformationSet& set) {
    json out = json::array();
    for (const auto& c : set.connexions) {
        json entry{{"batch", c.batch_kind}, {"level", c.level}, {"description", c.description}};
        auto prov = set.provenance.find(c.batch_kind);
        entry["provenance"] = prov == set.provenance.end() ? json::array() : json(prov->second);
        out.push_back(entry);
    }
    return out;
}

std::string require_param(const httplib::Request& req, const std::string& name) {
    if (!req.has_param(name)) {
        throw Error(ErrorCode::UsageError, "missing query parameter '" + name + "'");
    }
    return req.get_param_value(name);
}

}  // namespace

Service::Service(Snapshot snap, std::string event_log_path)
    : server_(std::make_unique<httplib::Server>()),
      published_(std::make_shared<const Snapshot>(std::move(snap))),
      event_log_path_(std::move(event_log_path)) {
    setup_routes();
}

Service::~Service() { stop(); }

std::shared_ptr<const Snapshot> Service::current() const {
    std::lock_guard lock(publish_mu_);
    return published_;
}

void Service::publish(Snapshot snap) {
    auto fresh = std::make_shared<const Snapshot>(std::move(snap));
    std::lock_guard lock(publish_mu_);
    published_ = std::move(fresh);
}

int Service::start(const std::string& host) {
    int port = server_->bind_to_any_port(host.c_str());
    if (port < 0) throw Error(ErrorCode::Io, "cannot bind to " + host);
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    return port;
}

bool Service::run(const std::string& host, int port) {
    return server_->listen(host.c_str(), port);
}

void Service::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

void Service::setup_routes() {
    server_->Get("/filter", [this](const httplib::Request& req, httplib::Response& res) {
        std::string correlation = correlation_id_of(req, nullptr);
        try {
            auto snap = current();
            auto set = filter_info_artifact(snap->store, snap->catalog,
                                            require_param(req, "artifact"),
                                            require_param(req, "actor"));
            reply_json(res, json{{"status", "ok"},
                                 {"correlation_id", correlation},
                                 {"actor", set.actor},
                                 {"artifact", set.artifact},
                                 {"connexions", connexions_to_json(set)}});
        } catch (const Error& e) {
            reply_error(res, correlation, e);
        }
    });

    server_->Get("/export", [this](const httplib::Request& req, httplib::Response& res) {
        std::string correlation = correlation_id_of(req, nullptr);
        try {
            auto snap = current();
            auto set = filter_info_artifact(snap->store, snap->catalog,
                                            require_param(req, "artifact"),
                                            require_param(req, "actor"));
            res.set_header("X-Correlation-Id", correlation);
            res.set_content(serialize_drp(export_drp(set, *snap)), "application/xml");
        } catch (const Error& e) {
            reply_error(res, correlation, e);
        }
    });

    server_->Get("/log", [this](const httplib::Request& req, httplib::Response& res) {
        std::string correlation = correlation_id_of(req, nullptr);
        try {
            auto snap = current();
            std::string actor = require_param(req, "actor");
            if (!snap->store.actors.count(actor)) {
                throw Error(ErrorCode::UnknownActor, "actor '" + actor + "'");
            }
            json entries = json::array();
            for (const auto& a : snap->annotations) {
                if (a.recipient != actor) continue;
                entries.push_back(json{{"proposal", a.proposal},
                                       {"timestamp", a.at.display},
                                       {"message", a.message}});
            }
            reply_json(res, json{{"status", "ok"},
                                 {"correlation_id", correlation},
                                 {"actor", actor},
                                 {"annotations", entries}});
        } catch (const Error& e) {
            reply_error(res, correlation, e);
        }
    });

    server_->Post("/propose", [this](const httplib::Request& req, httplib::Response& res) {
        json body;
        std::string correlation;
        try {
            body = json::parse(req.body, nullptr, false);
            if (body.is_discarded()) {
                correlation = correlation_id_of(req, nullptr);
                throw Error(ErrorCode::UsageError, "request body is not valid JSON");
            }
            correlation = correlation_id_of(req, &body);
            std::vector<FieldChange> payload;
            json payload_json = body.value("payload", json::object());
            for (const auto& [field, value] : payload_json.items()) {
                payload.push_back({field, value.get<std::string>()});
            }
            std::lock_guard write(write_mu_);
            Snapshot snap = *current();
            WorkflowEngine engine(snap, system_timestamp,
                                  [this](const Annotation& a) { append_event_log(a); });
            const ChangeProposal& proposal =
                engine.propose_change(body.at("actor").get<std::string>(),
                                      body.at("target").get<std::string>(),
                                      body.at("batch").get<std::string>(), std::move(payload));
            json out{{"status", "ok"},
                     {"correlation_id", correlation},
                     {"proposal", proposal.id},
                     {"state", to_string(proposal.state)},
                     {"concerned", json(std::vector<std::string>(proposal.concerned.begin(),
                                                                 proposal.concerned.end()))}};
            publish(std::move(snap));
            reply_json(res, out);
        } catch (const Error& e) {
            reply_error(res, correlation.empty() ? correlation_id_of(req, nullptr) : correlation,
                        e);
        } catch (const json::exception& e) {
            reply_error(res, correlation.empty() ? correlation_id_of(req, nullptr) : correlation,
                        Error(ErrorCode::UsageError, e.what()));
        }
    });

    server_->Post("/vote", [this](const httplib::Request& req, httplib::Response& res) {
        json body;
        std::string correlation;
        try {
            body = json::parse(req.body, nullptr, false);
            if (body.is_discarded()) {
                correlation = correlation_id_of(req, nullptr);
                throw Error(ErrorCode::UsageError, "request body is not valid JSON");
            }
            correlation = correlation_id_of(req, &body);
            std::lock_guard write(write_mu_);
            Snapshot snap = *current();
            WorkflowEngine engine(snap, system_timestamp,
                                  [this](const Annotation& a) { append_event_log(a); });
            const ChangeProposal& proposal =
                engine.vote(body.at("proposal").get<std::string>(),
                            body.at("actor").get<std::string>(),
                            vote_decision_from_string(body.at("decision").get<std::string>()));
            json out{{"status", "ok"},
                     {"correlation_id", correlation},
                     {"proposal", proposal.id},
                     {"state", to_string(proposal.state)}};
            publish(std::move(snap));
            reply_json(res, out);
        } catch (const Error& e) {
            reply_error(res, correlation.empty() ? correlation_id_of(req, nullptr) : correlation,
                        e);
        } catch (const json::exception& e) {
            reply_error(res, correlation.empty() ? correlation_id_of(req, nullptr) : correlation,
                        Error(ErrorCode::UsageError, e.what()));
        }
    });
}

void Service::append_event_log(const Annotation& note) {
    if (event_log_path_.empty()) return;
    std::ofstream os(event_log_path_, std::ios::app);
    os << note.at.display << '\t' << note.proposal << '\t' << note.recipient << '\t'
       << note.message << '\n';
}

}  // namespace ppco
