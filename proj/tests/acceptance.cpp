// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "ppco/drp_xml.hpp"
#include "ppco/fixture.hpp"
#include "ppco/service.hpp"
#include "ppco/viewpoint.hpp"
#include "ppco/workflow.hpp"

using namespace ppco;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    auto started = Clock::now();
    try {
        body();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
        std::cout << "PASS  criterion " << number << ": " << title << " (" << ms.count()
                  << " ms)\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL  criterion " << number << ": " << title << " -- " << e.what() << "\n";
    }
}

struct Grant {
    const char* kind;
    int level;
    const char* description;
};

const std::vector<Grant> kVp01Table = {
    {"Artifact", 1, "Standard Information about the product"},
    {"Function", 2, "Different function of the final-product and sub-artifact"},
    {"Behavior", 2,
     "Different behaviors of the final-product and sub-artifact in relation with their respective "
     "functions"},
    {"Flows", 2, "Different flows of the final-product functions"},
    {"Geometry-Form", 1, "All information about the detailed-geometry with a CAD model"},
    {"Sub-Artifact", 2,
     "Different information about the second level of direct-component assembly"},
    {"Assembly", 2, "The relationship with Sub-Artifacts"},
    {"Constraints", 1, "All constraints of the product (design, assembly...)"},
    {"Requirements", 2, "Requirements about the product and different phases of its lifecycle"},
    {"Group", 1, "All information about actors of collaboration-team"},
};

const std::vector<Grant> kVp02Table = {
    {"Mechanic", 1,
     "All information about the mechanic application of the product (see activity of VP09 and "
     "VP08)"},
    {"Artifact", 2, "Standard Information about the product"},
    {"Function", 2, "Different function of the final-product and sub-artifact"},
    {"Behavior", 2,
     "Different behaviors of the final-product and sub-artifact in relation with their respective "
     "functions"},
    {"Flows", 3, "Different flows of the final-product functions"},
    {"Geometry-Form", 2, "Different information about the geometry with a CAD model"},
    {"Sub-Artifact", 3,
     "Different information about the first level of direct-component assembly"},
    {"Assembly", 3, "The relationship with Sub-Artifacts"},
    {"Constraints", 1, "All constraints design of the product"},
    {"Requirements", 3, "Requirements about the product and different phases of its lifecycle"},
    {"Group", 1, "All information about the actors in the group"},
};

void check_table(const std::vector<BatchConnexion>& got, const std::vector<Grant>& want,
                 const std::string& label) {
    expect(got.size() == want.size(), label + ": size " + std::to_string(got.size()) +
                                          " != " + std::to_string(want.size()));
    for (std::size_t i = 0; i < want.size(); ++i) {
        std::ostringstream at;
        at << label << " row " << i;
        expect(got[i].batch_kind == want[i].kind, at.str() + ": kind '" + got[i].batch_kind + "'");
        expect(got[i].level == want[i].level,
               at.str() + ": level " + std::to_string(got[i].level));
        expect(got[i].description == want[i].description,
               at.str() + ": description '" + got[i].description + "'");
    }
}

std::map<std::string, int> as_map(const std::vector<BatchConnexion>& list) {
    std::map<std::string, int> out;
    for (const auto& c : list) out[c.batch_kind] = c.level;
    return out;
}

std::map<std::string, int> min_merge_oracle(
    const std::vector<std::vector<BatchConnexion>>& lists) {
    std::map<std::string, int> out;
    for (const auto& list : lists) {
        for (const auto& c : list) {
            auto it = out.find(c.batch_kind);
            if (it == out.end() || c.level < it->second) out[c.batch_kind] = c.level;
        }
    }
    return out;
}

std::vector<BatchConnexion> random_connexions(std::mt19937& rng) {
    static const char* kinds[] = {"Artifact", "Function",     "Behavior",    "Flows",
                                  "Geometry-Form", "Sub-Artifact", "Assembly", "Constraints",
                                  "Requirements",  "Group",        "Mechanic", "Electronic"};
    std::uniform_int_distribution<int> count_dist(0, 8);
    std::uniform_int_distribution<int> level_dist(1, 4);
    std::uniform_int_distribution<std::size_t> kind_dist(0, std::size(kinds) - 1);
    int n = count_dist(rng);
    std::vector<BatchConnexion> out;
    std::set<std::string> used;
    for (int i = 0; i < n; ++i) {
        std::string kind = kinds[kind_dist(rng)];
        if (!used.insert(kind).second) continue;
        out.push_back({kind, level_dist(rng), "random grant"});
    }
    return out;
}

Timestamp fixed_clock() {
    return Timestamp{utc_epoch(2006, 1, 15, 10, 0, 0), "Sun Jan 15 10:00:00 UTC 2006"};
}

}  // namespace

int main() {
    criterion(1, "profile restitution reproduces both reference grant tables", [] {
        auto started = Clock::now();
        auto snap = load_cyclone_fixture();
        auto vp01 = restitute_connexions(snap.catalog.viewpoints.at("VP01"),
                                         snap.catalog.profiles);
        auto vp02 = restitute_connexions(snap.catalog.viewpoints.at("VP02"),
                                         snap.catalog.profiles);
        check_table(vp01, kVp01Table, "VP01");
        check_table(vp02, kVp02Table, "VP02");
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            Clock::now() - started);
        expect(elapsed.count() < 1000, "took " + std::to_string(elapsed.count()) + " ms");
    });

    criterion(2, "merged connexions match the brute-force minimum oracle", [] {
        auto snap = load_cyclone_fixture();
        auto set = filter_info_artifact(snap.store, snap.catalog, "381009", "ActorX");
        auto vp01 = restitute_connexions(snap.catalog.viewpoints.at("VP01"),
                                         snap.catalog.profiles);
        auto vp02 = restitute_connexions(snap.catalog.viewpoints.at("VP02"),
                                         snap.catalog.profiles);
        expect(set.connexions.size() == 11,
               "got " + std::to_string(set.connexions.size()) + " kinds");
        auto merged = as_map(set.connexions);
        expect(merged == min_merge_oracle({vp01, vp02}), "merged map differs from oracle");
        for (const char* kind : {"Artifact", "Geometry-Form", "Mechanic", "Constraints", "Group"}) {
            expect(merged.at(kind) == 1, std::string(kind) + " not at level 1");
        }
        expect(merged.at("Flows") == 2, "Flows not at level 2");
    });

    criterion(3, "fixture counts: 18 components, 38 interactions, 3-team symmetric matrix", [] {
        auto snap = load_cyclone_fixture();
        auto parts = snap.store.decomposition("381009");
        expect(parts.size() == 19, "decomposition lists " + std::to_string(parts.size()));
        expect(parts.front() == "381009", "decomposition does not start at the root");
        expect(snap.store.interactions.size() == 38,
               "interaction count " + std::to_string(snap.store.interactions.size()));
        std::map<InteractionKind, int> by_kind;
        for (const auto& i : snap.store.interactions) ++by_kind[i.kind];
        expect(by_kind.size() == 4, "interactions span " + std::to_string(by_kind.size()) +
                                        " kinds");
        expect(snap.store.teams.size() == 3,
               "team count " + std::to_string(snap.store.teams.size()));
        auto matrix = snap.store.team_matrix();
        expect(matrix.size() == 3, "matrix rows " + std::to_string(matrix.size()));
        for (std::size_t r = 0; r < 3; ++r) {
            expect(matrix[r].size() == 3, "matrix row width");
            expect(matrix[r][r] == 0, "nonzero diagonal");
            for (std::size_t c = 0; c < 3; ++c) {
                expect(matrix[r][c] == matrix[c][r], "matrix not symmetric");
            }
        }
    });

    criterion(4, "XML export reproduces the reference document and round-trips", [] {
        auto snap = load_cyclone_fixture();
        InformationSet set;
        set.actor = "ActorX";
        set.artifact = "381009";
        set.connexions = {{"Artifact", 1, ""}, {"Sub-Artifact", 1, ""}};
        auto doc = export_drp(set, snap);
        auto text = serialize_drp(doc);
        for (const char* needle :
             {"<id_artifact>381009</id_artifact>", "<id_sub_artifact>3011010</id_sub_artifact>",
              "<id_sub_artifact>5010120</id_sub_artifact>",
              "<id_sub_artifact>30141280</id_sub_artifact>",
              "<description>Industrial Closed Cyclone vessel</description>",
              "<type>-732469182</type>",
              "<creation_date>Sat Nov 12 07:34:44 EET 2005</creation_date>"}) {
            expect(text.find(needle) != std::string::npos,
                   std::string("missing '") + needle + "'");
        }
        expect(import_drp(text) == doc, "import(export(x)) != x");
        expect(diff_drp(doc, import_drp(text)).empty(), "diff reports differences");
    });

    criterion(5, "merge algebra holds on 1000+ randomized cases", [] {
        auto started = Clock::now();
        std::mt19937 rng(4242);
        for (int iter = 0; iter < 1200; ++iter) {
            auto a = random_connexions(rng);
            auto b = random_connexions(rng);
            auto c = random_connexions(rng);
            expect(as_map(optimize_connexions(a, b)) == min_merge_oracle({a, b}),
                   "merge differs from oracle at case " + std::to_string(iter));
            expect(as_map(optimize_connexions(a, b)) == as_map(optimize_connexions(b, a)),
                   "not commutative at case " + std::to_string(iter));
            expect(as_map(optimize_connexions(optimize_connexions(a, b), c)) ==
                       as_map(optimize_connexions(a, optimize_connexions(b, c))),
                   "not associative at case " + std::to_string(iter));
            expect(optimize_connexions(a, a) == a, "not idempotent at case " + std::to_string(iter));
        }
        // order insensitivity of the full pipeline
        auto base = load_cyclone_fixture();
        auto expected = as_map(
            filter_info_artifact(base.store, base.catalog, "381009", "ActorX").connexions);
        ViewpointCatalog reversed;
        std::vector<Viewpoint> vps;
        for (const auto& [id, vp] : base.catalog.viewpoints) vps.push_back(vp);
        for (auto it = vps.rbegin(); it != vps.rend(); ++it) reversed.add_viewpoint(*it);
        reversed.profiles = base.catalog.profiles;
        expect(as_map(filter_info_artifact(base.store, reversed, "381009", "ActorX").connexions) ==
                   expected,
               "filter depends on viewpoint registration order");
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            Clock::now() - started);
        expect(elapsed.count() < 10000, "took " + std::to_string(elapsed.count()) + " ms");
    });

    criterion(6, "adding viewpoints never raises a level or drops a batch kind", [] {
        std::mt19937 rng(777);
        auto snap = load_cyclone_fixture();
        static const char* domains[] = {"geometry", "mechanic", "simulation", "design"};
        static const int levels[] = {3, 2, 2, 3};
        for (int iter = 0; iter < 600; ++iter) {
            ViewpointCatalog catalog;
            catalog.profiles = snap.catalog.profiles;
            int n = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < n; ++i) {
                std::size_t pick = rng() % std::size(domains);
                catalog.add_viewpoint({"VP" + std::to_string(i), "ActorX", "", domains[pick],
                                       levels[pick], {"381009"}, {}});
            }
            auto before =
                as_map(filter_info_artifact(snap.store, catalog, "381009", "ActorX").connexions);
            std::size_t pick = rng() % std::size(domains);
            catalog.add_viewpoint(
                {"VP9", "ActorX", "", domains[pick], levels[pick], {"381009"}, {}});
            auto after =
                as_map(filter_info_artifact(snap.store, catalog, "381009", "ActorX").connexions);
            for (const auto& [kind, level] : before) {
                expect(after.count(kind) == 1,
                       kind + " disappeared at case " + std::to_string(iter));
                expect(after.at(kind) <= level,
                       kind + " level rose at case " + std::to_string(iter));
            }
        }
    });

    criterion(7, "workflow: veto, unanimity, invisibility, concurrent schedules linearize", [] {
        // pending changes are invisible until unanimous approval
        {
            auto snap = load_cyclone_fixture();
            WorkflowEngine engine(snap, fixed_clock);
            auto before = engine.effective_view("381009", "ActorX");
            const auto& proposal = engine.propose_change("ActorX", "381009", "Constraints",
                                                         {{"description", "Acceptance change"}});
            std::string id = proposal.id;
            expect(engine.effective_view("381009", "ActorX") == before,
                   "pending payload leaked into the view");
            engine.vote(id, "Michel", VoteDecision::Approve);
            expect(snap.store.artifact("381009").description != "Acceptance change",
                   "applied before unanimity");
            engine.vote(id, "ActorY", VoteDecision::Approve);
            expect(snap.store.artifact("381009").description == "Acceptance change",
                   "unanimous approval did not apply");
            snap.validate();
        }
        // a single veto rejects and leaves the store untouched
        {
            auto snap = load_cyclone_fixture();
            WorkflowEngine engine(snap, fixed_clock);
            const auto& proposal = engine.propose_change("ActorX", "381009", "Constraints",
                                                         {{"description", "Vetoed"}});
            std::string id = proposal.id;
            engine.vote(id, "Michel", VoteDecision::Approve);
            const auto& voted = engine.vote(id, "ActorY", VoteDecision::Reject);
            expect(voted.state == ProposalState::Rejected, "veto did not reject");
            expect(snap.store == load_cyclone_fixture().store, "veto mutated the store");
        }
        // service: enumerate every 2-actor decision schedule, fired concurrently
        const std::pair<VoteDecision, VoteDecision> schedules[] = {
            {VoteDecision::Approve, VoteDecision::Approve},
            {VoteDecision::Approve, VoteDecision::Reject},
            {VoteDecision::Reject, VoteDecision::Approve},
            {VoteDecision::Reject, VoteDecision::Reject},
        };
        for (const auto& [michel_vote, actory_vote] : schedules) {
            Service service(load_cyclone_fixture());
            int port = service.start("127.0.0.1");
            httplib::Client cli("127.0.0.1", port);
            json propose{{"actor", "ActorX"},
                         {"target", "381009"},
                         {"batch", "Constraints"},
                         {"payload", {{"description", "Scheduled change"}}}};
            auto res = cli.Post("/propose", propose.dump(), "application/json");
            expect(res && res->status == 200, "propose failed");
            std::string id = json::parse(res->body)["proposal"];

            auto cast = [&](const std::string& actor, VoteDecision decision) {
                httplib::Client voter("127.0.0.1", port);
                auto r = voter.Post(
                    "/vote",
                    json{{"proposal", id},
                         {"actor", actor},
                         {"decision", decision == VoteDecision::Approve ? "approve" : "reject"}}
                        .dump(),
                    "application/json");
                expect(bool(r), "vote request failed");
            };
            std::thread t1(cast, "Michel", michel_vote);
            std::thread t2(cast, "ActorY", actory_vote);
            t1.join();
            t2.join();
            auto committed = service.current();
            committed->validate();

            // serial replay oracle: both vote orders must agree with the committed state
            for (bool michel_first : {true, false}) {
                auto replay = load_cyclone_fixture();
                WorkflowEngine engine(replay, fixed_clock);
                std::string rid = engine.propose_change("ActorX", "381009", "Constraints",
                                                        {{"description", "Scheduled change"}})
                                      .id;
                auto run = [&](const std::string& actor, VoteDecision d) {
                    if (engine.proposal(rid).state == ProposalState::Pending) {
                        engine.vote(rid, actor, d);
                    }
                };
                if (michel_first) {
                    run("Michel", michel_vote);
                    run("ActorY", actory_vote);
                } else {
                    run("ActorY", actory_vote);
                    run("Michel", michel_vote);
                }
                expect(engine.proposal(rid).state == committed->proposals[0].state,
                       "committed proposal state disagrees with serial replay");
                expect(replay.store.artifact("381009").description ==
                           committed->store.artifact("381009").description,
                       "committed store disagrees with serial replay");
            }
        }
    });

    if (failures == 0) {
        std::cout << "ALL CRITERIA PASSED\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
