#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ppco/drp_xml.hpp"
#include "ppco/fixture.hpp"
#include "ppco/snapshot.hpp"
#include "ppco/viewpoint.hpp"
#include "ppco/workflow.hpp"

namespace {

struct GlobalOpts {
    std::string snapshot_path;
    std::string output_path;
    std::string format = "text";
    std::string log_file;
};

void write_output(const GlobalOpts& opts, const std::string& text) {
    if (opts.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(opts.output_path, std::ios::binary);
    if (!os) throw ppco::Error(ppco::ErrorCode::Io, "cannot open '" + opts.output_path + "'");
    os << text;
}

ppco::Snapshot load(const GlobalOpts& opts) {
    if (opts.snapshot_path.empty()) {
        throw ppco::Error(ppco::ErrorCode::UsageError, "--snapshot is required");
    }
    return ppco::load_snapshot(opts.snapshot_path);
}

std::string connexion_lines(const ppco::InformationSet& set) {
    std::ostringstream os;
    for (const auto& c : set.connexions) {
        os << c.batch_kind << " (" << c.level << ") : " << c.description << '\n';
    }
    return os.str();
}

std::string summary(const ppco::Snapshot& snap) {
    std::ostringstream os;
    os << "artifacts: " << snap.store.artifacts.size() << '\n'
       << "assembly edges: " << snap.store.edges.size() << '\n'
       << "interactions: " << snap.store.interactions.size() << '\n'
       << "processes: " << snap.store.processes.size() << '\n'
       << "teams: " << snap.store.teams.size() << '\n'
       << "actors: " << snap.store.actors.size() << '\n'
       << "viewpoints: " << snap.catalog.viewpoints.size() << '\n'
       << "proposals: " << snap.proposals.size() << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PPCO metadata store, viewpoint filtering, and change workflow"};
    app.require_subcommand(1);
    app.allow_extras(false);

    GlobalOpts opts;
    app.add_option("-s,--snapshot", opts.snapshot_path, "Snapshot file path");
    app.add_option("-o,--output", opts.output_path, "Output file (default: stdout)");
    app.add_option("-f,--format", opts.format, "Output format (text|xml)")
        ->check(CLI::IsMember({"text", "xml"}));
    app.add_option("--log-file", opts.log_file, "Annotation event log file");

    auto* cmd_load = app.add_subcommand("load", "Load and validate a snapshot");
    std::string fixture_name;
    cmd_load->add_option("--fixture", fixture_name,
                         "Write a built-in fixture to the snapshot path first (cyclone)");

    auto* cmd_show = app.add_subcommand("show", "Inspect the model");
    std::string show_artifact;
    cmd_show->add_option("--artifact", show_artifact, "Artifact id to show");

    auto* cmd_filter = app.add_subcommand("filter", "Run viewpoint filtering for an actor");
    std::string actor, artifact;
    cmd_filter->add_option("--actor", actor, "Actor id")->required();
    cmd_filter->add_option("--artifact", artifact, "Artifact id")->required();

    auto* cmd_export = app.add_subcommand("export", "Export the filtered view as DRP XML");
    cmd_export->add_option("--actor", actor, "Actor id")->required();
    cmd_export->add_option("--artifact", artifact, "Artifact id")->required();

    auto* cmd_propose = app.add_subcommand("propose", "Stage a change proposal");
    std::string batch;
    std::vector<std::string> assignments;
    cmd_propose->add_option("--actor", actor, "Proposing actor")->required();
    cmd_propose->add_option("--target", artifact, "Target artifact id")->required();
    cmd_propose->add_option("--batch", batch, "Affected batch kind")->required();
    cmd_propose->add_option("--set", assignments, "Field change as field=value")->required();

    auto* cmd_vote = app.add_subcommand("vote", "Vote on a pending proposal");
    std::string proposal_id, decision;
    cmd_vote->add_option("--proposal", proposal_id, "Proposal id")->required();
    cmd_vote->add_option("--actor", actor, "Voting actor")->required();
    cmd_vote->add_option("--decision", decision, "approve|reject")
        ->required()
        ->check(CLI::IsMember({"approve", "reject"}));

    auto* cmd_log = app.add_subcommand("log", "Show annotations for an actor");
    cmd_log->add_option("--actor", actor, "Actor id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_load->parsed()) {
            if (!fixture_name.empty()) {
                if (fixture_name != "cyclone") {
                    throw ppco::Error(ppco::ErrorCode::UsageError,
                                      "unknown fixture '" + fixture_name + "'");
                }
                if (opts.snapshot_path.empty()) {
                    throw ppco::Error(ppco::ErrorCode::UsageError, "--snapshot is required");
                }
                ppco::save_snapshot(ppco::load_cyclone_fixture(), opts.snapshot_path);
            }
            auto snap = load(opts);
            write_output(opts, summary(snap));
        } else if (cmd_show->parsed()) {
            auto snap = load(opts);
            if (show_artifact.empty()) {
                write_output(opts, summary(snap));
            } else {
                const auto& node = snap.store.artifact(show_artifact);
                std::ostringstream os;
                os << "id: " << node.id << '\n'
                   << "name: " << node.name << '\n'
                   << "class: " << node.class_name << '\n'
                   << "description: " << node.description << '\n'
                   << "created by: " << node.created_by << " (" << node.creation_date.display
                   << ")\n"
                   << "last update by: " << node.last_update_by << " ("
                   << node.last_update_date.display << ")\n"
                   << "type: " << node.type_code << '\n';
                auto kids = snap.store.children_of(show_artifact);
                os << "children:";
                for (const auto& k : kids) os << ' ' << k;
                os << '\n';
                write_output(opts, os.str());
            }
        } else if (cmd_filter->parsed()) {
            auto snap = load(opts);
            auto set = ppco::filter_info_artifact(snap.store, snap.catalog, artifact, actor);
            write_output(opts, connexion_lines(set));
        } else if (cmd_export->parsed()) {
            auto snap = load(opts);
            auto set = ppco::filter_info_artifact(snap.store, snap.catalog, artifact, actor);
            write_output(opts, ppco::serialize_drp(ppco::export_drp(set, snap)));
        } else if (cmd_propose->parsed()) {
            auto snap = load(opts);
            std::vector<ppco::FieldChange> payload;
            for (const auto& a : assignments) {
                auto eq = a.find('=');
                if (eq == std::string::npos) {
                    throw ppco::Error(ppco::ErrorCode::UsageError,
                                      "--set expects field=value, got '" + a + "'");
                }
                payload.push_back({a.substr(0, eq), a.substr(eq + 1)});
            }
            ppco::WorkflowEngine engine(snap, ppco::system_timestamp,
                                        [&](const ppco::Annotation& note) {
                                            if (opts.log_file.empty()) return;
                                            std::ofstream os(opts.log_file, std::ios::app);
                                            os << note.at.display << '\t' << note.proposal << '\t'
                                               << note.recipient << '\t' << note.message << '\n';
                                        });
            const auto& proposal = engine.propose_change(actor, artifact, batch, payload);
            ppco::save_snapshot(snap, opts.snapshot_path);
            std::ostringstream os;
            os << proposal.id << ' ' << to_string(proposal.state) << " concerned:";
            for (const auto& c : proposal.concerned) os << ' ' << c;
            os << '\n';
            write_output(opts, os.str());
        } else if (cmd_vote->parsed()) {
            auto snap = load(opts);
            ppco::WorkflowEngine engine(snap, ppco::system_timestamp,
                                        [&](const ppco::Annotation& note) {
                                            if (opts.log_file.empty()) return;
                                            std::ofstream os(opts.log_file, std::ios::app);
                                            os << note.at.display << '\t' << note.proposal << '\t'
                                               << note.recipient << '\t' << note.message << '\n';
                                        });
            const auto& proposal =
                engine.vote(proposal_id, actor, ppco::vote_decision_from_string(decision));
            ppco::save_snapshot(snap, opts.snapshot_path);
            write_output(opts, std::string(proposal.id) + " " + to_string(proposal.state) + "\n");
        } else if (cmd_log->parsed()) {
            auto snap = load(opts);
            if (!snap.store.actors.count(actor)) {
                throw ppco::Error(ppco::ErrorCode::UnknownActor, "actor '" + actor + "'");
            }
            std::ostringstream os;
            for (const auto& note : snap.annotations) {
                if (note.recipient != actor) continue;
                os << note.at.display << '\t' << note.proposal << '\t' << note.recipient << '\t'
                   << note.message << '\n';
            }
            write_output(opts, os.str());
        }
    } catch (const ppco::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ppco::ErrorCode::UsageError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
