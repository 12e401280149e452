#pragma once

// HTTP facade over filtering, export, and the approval workflow. Reads serve
// from an immutable published snapshot; propose/vote are funneled through a
// single writer and publish a fresh snapshot on commit.

#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "ppco/snapshot.hpp"

namespace httplib {
class Server;
}

namespace ppco {

class Service {
public:
    explicit Service(Snapshot snap, std::string event_log_path = "");
    ~Service();

    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    // Binds to an ephemeral port on `host`, serves on a background thread,
    // and returns the port.
    int start(const std::string& host);

    // Binds to a fixed port; blocks until stop(). Used by the daemon.
    bool run(const std::string& host, int port);

    void stop();

    std::shared_ptr<const Snapshot> current() const;

private:
    void setup_routes();
    void publish(Snapshot snap);
    void append_event_log(const Annotation& note);

    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    std::shared_ptr<const Snapshot> published_;
    mutable std::mutex publish_mu_;
    std::mutex write_mu_;
    std::string event_log_path_;
};

}  // namespace ppco
