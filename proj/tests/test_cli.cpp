#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(PPCO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempSnapshot {
    std::string path;
    TempSnapshot() {
        path = (std::filesystem::temp_directory_path() /
                ("ppco_cli_" + std::to_string(std::random_device{}()) + ".snap"))
                   .string();
        auto res = run_cli("-s " + path + " load --fixture cyclone");
        REQUIRE(res.exit_code == 0);
    }
    ~TempSnapshot() { std::remove(path.c_str()); }
};

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text) n += (c == '\n');
    return n;
}

}  // namespace

TEST_CASE("load --fixture cyclone writes a snapshot and prints the summary") {
    TempSnapshot snap;
    auto res = run_cli("-s " + snap.path + " load");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("artifacts: 19") != std::string::npos);
    CHECK(res.output.find("interactions: 38") != std::string::npos);
    CHECK(res.output.find("teams: 3") != std::string::npos);
}

TEST_CASE("filter prints the 11-line merged connexion list, byte-identical across runs") {
    TempSnapshot snap;
    std::string args = "-s " + snap.path + " filter --actor ActorX --artifact 381009";
    auto first = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(count_lines(first.output) == 11);
    CHECK(first.output.rfind("Mechanic (1) : ", 0) == 0);
    CHECK(first.output.find("Flows (2) : ") != std::string::npos);
    CHECK(first.output.find("Group (1) : ") != std::string::npos);
    auto second = run_cli(args);
    CHECK(second.output == first.output);
}

TEST_CASE("export emits the DRP XML document") {
    TempSnapshot snap;
    auto res = run_cli("-s " + snap.path + " export --actor ActorX --artifact 381009");
    CHECK(res.exit_code == 0);
    CHECK(res.output.rfind("<?xml version=\"1.0\" ?>", 0) == 0);
    CHECK(res.output.find("<id_artifact>381009</id_artifact>") != std::string::npos);
    CHECK(res.output.find("<name>Cyclone Vessel</name>") != std::string::npos);
}

TEST_CASE("propose then vote to approval through the CLI persists the change") {
    TempSnapshot snap;
    auto proposed = run_cli("-s " + snap.path +
                            " propose --actor ActorX --target 381009 --batch Constraints"
                            " --set description=cli-edit");
    REQUIRE(proposed.exit_code == 0);
    CHECK(proposed.output.find("P1 Pending concerned: ActorY Michel") != std::string::npos);

    // a non-concerned voter is refused with a domain error
    auto refused = run_cli("-s " + snap.path + " vote --proposal P1 --actor Jean --decision approve");
    CHECK(refused.exit_code == 1);
    CHECK(refused.output.find("NotConcerned") != std::string::npos);

    CHECK(run_cli("-s " + snap.path + " vote --proposal P1 --actor Michel --decision approve")
              .exit_code == 0);
    auto final_vote =
        run_cli("-s " + snap.path + " vote --proposal P1 --actor ActorY --decision approve");
    CHECK(final_vote.exit_code == 0);
    CHECK(final_vote.output.find("P1 Approved") != std::string::npos);

    auto shown = run_cli("-s " + snap.path + " show --artifact 381009");
    CHECK(shown.output.find("description: cli-edit") != std::string::npos);

    auto log = run_cli("-s " + snap.path + " log --actor ActorY");
    CHECK(log.exit_code == 0);
    CHECK(count_lines(log.output) == 2);
    CHECK(log.output.find("approved") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("filter --actor ActorX").exit_code == 2);  // missing --artifact
    TempSnapshot snap;
    auto res = run_cli("filter --actor ActorX --artifact 381009");  // missing --snapshot
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("--snapshot is required") != std::string::npos);
}

TEST_CASE("domain errors exit with status 1 and name the error") {
    TempSnapshot snap;
    auto res = run_cli("-s " + snap.path + " filter --actor Nobody --artifact 381009");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("UnknownActor") != std::string::npos);
}
