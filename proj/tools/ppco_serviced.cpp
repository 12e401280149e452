#include <iostream>

#include <CLI11.hpp>

#include "ppco/fixture.hpp"
#include "ppco/service.hpp"
#include "ppco/snapshot.hpp"

int main(int argc, char** argv) {
    CLI::App app{"PPCO HTTP service"};

    std::string snapshot_path;
    std::string host = "127.0.0.1";
    std::string event_log;
    int port = 8080;
    bool use_fixture = false;
    app.add_option("-s,--snapshot", snapshot_path, "Snapshot file to serve");
    app.add_flag("--cyclone-fixture", use_fixture, "Serve the built-in cyclone fixture");
    app.add_option("--host", host, "Bind address");
    app.add_option("-p,--port", port, "Port");
    app.add_option("--log-file", event_log, "Annotation event log file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        ppco::Snapshot snap;
        if (use_fixture) {
            snap = ppco::load_cyclone_fixture();
        } else if (!snapshot_path.empty()) {
            snap = ppco::load_snapshot(snapshot_path);
        } else {
            std::cerr << "error: UsageError: pass --snapshot or --cyclone-fixture\n";
            return 2;
        }
        ppco::Service service(std::move(snap), event_log);
        std::cout << "serving on " << host << ':' << port << '\n';
        if (!service.run(host, port)) {
            std::cerr << "error: Io: cannot listen on " << host << ':' << port << '\n';
            return 1;
        }
    } catch (const ppco::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
