#include <doctest.h>

#include "ppco/drp_xml.hpp"
#include "ppco/fixture.hpp"
#include "ppco/workflow.hpp"

using namespace ppco;

namespace {

Timestamp fixed_clock() {
    return Timestamp{utc_epoch(2006, 1, 15, 10, 0, 0), "Sun Jan 15 10:00:00 UTC 2006"};
}

}  // namespace

TEST_CASE("propose_change on a level-1 batch stages a pending proposal") {
    auto snap = load_cyclone_fixture();
    auto store_before = snap.store;
    WorkflowEngine engine(snap, fixed_clock);

    // ActorX's merged set grants Constraints at level 1
    const auto& proposal = engine.propose_change(
        "ActorX", "381009", "Constraints", {{"description", "Tightened flange constraint"}});
    CHECK(proposal.state == ProposalState::Pending);
    CHECK(proposal.concerned == std::set<std::string>{"ActorY", "Michel"});
    CHECK(snap.store == store_before);  // live store untouched

    // creation annotation for every concerned actor
    for (const auto& actor : proposal.concerned) {
        CHECK(engine.annotations_for(actor).size() == 1);
    }
}

TEST_CASE("propose_change on a level-2 batch is refused") {
    auto snap = load_cyclone_fixture();
    WorkflowEngine engine(snap, fixed_clock);
    // ActorX's merged set grants Flows only at level 2
    CHECK_THROWS_WITH_AS(engine.propose_change("ActorX", "381009", "Flows", {{"name", "x"}}),
                         doctest::Contains("InsufficientAccess"), Error);
}

TEST_CASE("propose_change errors: unknown target, no viewpoint") {
    auto snap = load_cyclone_fixture();
    WorkflowEngine engine(snap, fixed_clock);
    CHECK_THROWS_WITH_AS(engine.propose_change("ActorX", "000", "Constraints", {}),
                         doctest::Contains("UnknownTarget"), Error);
    CHECK_THROWS_WITH_AS(engine.propose_change("Jean", "381009", "Constraints", {}),
                         doctest::Contains("InsufficientAccess"), Error);
}

TEST_CASE("concerned_actors scans fixture viewpoints and profiles") {
    auto snap = load_cyclone_fixture();
    WorkflowEngine engine(snap, fixed_clock);

    // every fixture actor granted Group scopes the vessel
    CHECK(engine.concerned_actors("381009", "Group") ==
          std::set<std::string>{"ActorX", "ActorY", "Michel"});
    // a batch kind granted to nobody
    CHECK(engine.concerned_actors("381009", "Electronics").empty());
    CHECK_THROWS_WITH_AS(engine.concerned_actors("000", "Group"),
                         doctest::Contains("UnknownTarget"), Error);
}

TEST_CASE("concerned_actors with only ActorX registered yields ActorX alone") {
    auto snap = load_cyclone_fixture();
    // strip every viewpoint except ActorX's two
    for (auto it = snap.catalog.viewpoints.begin(); it != snap.catalog.viewpoints.end();) {
        it = it->second.actor == "ActorX" ? std::next(it) : snap.catalog.viewpoints.erase(it);
    }
    snap.catalog.relationships.clear();
    WorkflowEngine engine(snap, fixed_clock);
    CHECK(engine.concerned_actors("381009", "Geometry-Form") == std::set<std::string>{"ActorX"});
}

TEST_CASE("unanimity of one: the sole concerned actor approves and the change applies") {
    auto snap = load_cyclone_fixture();
    WorkflowEngine engine(snap, fixed_clock);

    // only ActorY's profile also grants Mechanic, so ActorY is sole concerned
    const auto& proposal = engine.propose_change(
        "ActorX", "381009", "Mechanic", {{"description", "Updated mechanic description"}});
    REQUIRE(proposal.concerned == std::set<std::string>{"ActorY"});
    std::string id = proposal.id;

    const auto& voted = engine.vote(id, "ActorY", VoteDecision::Approve);
    CHECK(voted.state == ProposalState::Approved);
    const auto& node = snap.store.artifact("381009");
    CHECK(node.description == "Updated mechanic description");
    CHECK(node.last_update_by == "ActorX");
    CHECK(node.last_update_date.display == "Sun Jan 15 10:00:00 UTC 2006");
    CHECK(node.name == "Cyclone Vessel");  // untouched fields survive
    snap.validate();
}

TEST_CASE("a single reject vetoes the proposal and the store stays byte-identical") {
    auto snap = load_cyclone_fixture();
    auto store_before = serialize_snapshot(snap);
    WorkflowEngine engine(snap, fixed_clock);

    const auto& proposal = engine.propose_change(
        "ActorX", "381009", "Constraints", {{"description", "Never applied"}});
    std::string id = proposal.id;
    engine.vote(id, "Michel", VoteDecision::Approve);
    const auto& voted = engine.vote(id, "ActorY", VoteDecision::Reject);
    CHECK(voted.state == ProposalState::Rejected);

    auto after = load_cyclone_fixture();
    CHECK(snap.store == after.store);  // committed model untouched
    CHECK(serialize_snapshot(after) == store_before);
}

TEST_CASE("vote guards: NotConcerned, AlreadyVoted, NotPending, unknown proposal") {
    auto snap = load_cyclone_fixture();
    WorkflowEngine engine(snap, fixed_clock);
    const auto& proposal =
        engine.propose_change("ActorX", "381009", "Constraints", {{"name", "X"}});
    std::string id = proposal.id;

    CHECK_THROWS_WITH_AS(engine.vote(id, "Jean", VoteDecision::Approve),
                         doctest::Contains("NotConcerned"), Error);
    engine.vote(id, "Michel", VoteDecision::Approve);
    CHECK_THROWS_WITH_AS(engine.vote(id, "Michel", VoteDecision::Approve),
                         doctest::Contains("AlreadyVoted"), Error);
    engine.vote(id, "ActorY", VoteDecision::Reject);
    CHECK_THROWS_WITH_AS(engine.vote(id, "ActorY", VoteDecision::Approve),
                         doctest::Contains("NotPending"), Error);
    CHECK_THROWS_WITH_AS(engine.vote("P999", "Michel", VoteDecision::Approve),
                         doctest::Contains("UnknownId"), Error);
}

TEST_CASE("pending payloads are invisible; approval makes them effective") {
    auto snap = load_cyclone_fixture();
    WorkflowEngine engine(snap, fixed_clock);

    InformationSet full;
    full.actor = "ActorX";
    full.artifact = "381009";
    full.connexions = {{"Artifact", 1, ""}};

    auto view_before = engine.effective_view("381009", "ActorX");
    auto xml_before = serialize_drp(export_drp(full, snap));

    const auto& proposal = engine.propose_change(
        "ActorX", "381009", "Constraints", {{"description", "Revised constraint text"}});
    std::string id = proposal.id;

    CHECK(engine.effective_view("381009", "ActorX") == view_before);
    CHECK(serialize_drp(export_drp(full, snap)) == xml_before);  // pending change invisible

    engine.vote(id, "Michel", VoteDecision::Approve);
    CHECK(serialize_drp(export_drp(full, snap)) == xml_before);  // still one approval short
    engine.vote(id, "ActorY", VoteDecision::Approve);

    // oracle: re-run the filter on the mutated store
    auto view_after = filter_info_artifact(snap.store, snap.catalog, "381009", "ActorX");
    CHECK(engine.effective_view("381009", "ActorX") == view_after);
    auto xml_after = serialize_drp(export_drp(full, snap));
    CHECK(xml_after != xml_before);
    CHECK(xml_after.find("Revised constraint text") != std::string::npos);
}

TEST_CASE("a proposal with no concerned actor besides the author applies immediately") {
    auto snap = load_cyclone_fixture();
    // leave Michel as the only viewpoint holder; he is sole grantee of Function level 1
    for (auto it = snap.catalog.viewpoints.begin(); it != snap.catalog.viewpoints.end();) {
        it = it->second.actor == "Michel" ? std::next(it) : snap.catalog.viewpoints.erase(it);
    }
    snap.catalog.relationships.clear();
    WorkflowEngine engine(snap, fixed_clock);
    const auto& proposal =
        engine.propose_change("Michel", "381009", "Function", {{"name", "Cyclone Vessel Mk2"}});
    CHECK(proposal.state == ProposalState::Approved);
    CHECK(snap.store.artifact("381009").name == "Cyclone Vessel Mk2");
}

TEST_CASE("annotation completeness: creation and resolution notes per concerned actor") {
    auto snap = load_cyclone_fixture();
    WorkflowEngine engine(snap, fixed_clock);
    const auto& proposal =
        engine.propose_change("ActorX", "381009", "Constraints", {{"name", "X"}});
    std::string id = proposal.id;
    engine.vote(id, "Michel", VoteDecision::Approve);
    engine.vote(id, "ActorY", VoteDecision::Approve);

    for (const std::string actor : {"Michel", "ActorY"}) {
        auto notes = engine.annotations_for(actor);
        REQUIRE(notes.size() == 2);
        CHECK(notes[0].message.find("change proposed") != std::string::npos);
        CHECK(notes[1].message.find("approved") != std::string::npos);
    }
    snap.validate();
}

TEST_CASE("annotation sink receives every annotation") {
    auto snap = load_cyclone_fixture();
    std::vector<Annotation> sunk;
    WorkflowEngine engine(snap, fixed_clock, [&](const Annotation& a) { sunk.push_back(a); });
    engine.propose_change("ActorX", "381009", "Constraints", {{"name", "X"}});
    CHECK(sunk.size() == 2);  // ActorY and Michel
    CHECK(sunk == snap.annotations);
}
