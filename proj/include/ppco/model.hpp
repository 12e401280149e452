#pragma once

// The PPCO base-level information model: product structure, development
// processes, and the supply-chain organization, held as a typed in-memory
// graph. Neutral with respect to any consuming application; viewpoint
// filtering and the workflow layer sit on top.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppco/errors.hpp"

namespace ppco {

// A timestamp keeps both the parsed epoch and the original display string.
// The display string is authoritative for export; the epoch is used only for
// ordering checks.
struct Timestamp {
    std::int64_t epoch = 0;
    std::string display;

    bool operator==(const Timestamp&) const = default;
};

// Seconds since the Unix epoch for a UTC civil time.
std::int64_t utc_epoch(int year, int month, int day, int hour, int minute, int second);

struct ArtifactNode {
    std::string id;  // integer-valued string, e.g. "381009"
    std::string name;
    std::string class_name;
    std::string properties_ref;
    std::string methods_ref;
    std::string documentation_ref;
    std::string description;
    std::string created_by;
    Timestamp creation_date;
    std::string last_update_by;
    Timestamp last_update_date;
    std::int64_t type_code = 0;  // opaque: stored and compared, never interpreted
    std::optional<bool> is_complete;  // root artifacts only

    bool operator==(const ArtifactNode&) const = default;
};

struct AssemblyEdge {
    std::string parent;
    std::string child;
    std::string relationship_note;

    bool operator==(const AssemblyEdge&) const = default;
};

enum class InteractionKind { Space, Energy, Material, Information };

const char* to_string(InteractionKind kind);
InteractionKind interaction_kind_from_string(const std::string& s);

// Undirected component interaction, stored with a < b.
struct Interaction {
    std::string a;
    std::string b;
    InteractionKind kind = InteractionKind::Space;
    std::string note;

    bool operator==(const Interaction&) const = default;
};

// Batch content records (functions, behaviors, flows, geometry references,
// constraints, requirements) share one shape; the category pins the batch
// kind the record belongs to.
enum class BatchItemCategory { Function, Behavior, Flow, Geometry, Constraint, Requirement };

const char* batch_kind_of(BatchItemCategory category);
BatchItemCategory batch_category_from_kind(const std::string& kind);

struct BatchItem {
    std::string id;
    std::string owner;  // artifact id
    BatchItemCategory category = BatchItemCategory::Function;
    std::string payload;  // external-document reference for geometry

    bool operator==(const BatchItem&) const = default;
};

struct TaskNode {
    std::string id;
    std::string name;
    std::string domain;

    bool operator==(const TaskNode&) const = default;
};

struct ActivityNode {
    std::string id;
    std::string name;
    std::vector<std::string> tasks;

    bool operator==(const ActivityNode&) const = default;
};

struct ProcessNode {
    std::string id;
    std::string name;
    std::vector<std::string> activities;

    bool operator==(const ProcessNode&) const = default;
};

struct InfoFlowEdge {
    std::string from_task;
    std::string to_task;
    std::string payload;

    bool operator==(const InfoFlowEdge&) const = default;
};

struct Team {
    std::string id;
    std::string name;
    std::string responsible_for;  // artifact id
    std::vector<std::string> members;

    bool operator==(const Team&) const = default;
};

struct ActorRecord {
    std::string id;
    std::string name;
    std::string role;
    std::string team;

    bool operator==(const ActorRecord&) const = default;
};

struct Competence {
    std::string actor;
    std::string domain;
    int level = 1;  // >= 1

    bool operator==(const Competence&) const = default;
};

// Pairwise collaboration frequency between two teams, stored with a < b.
struct TeamInteraction {
    std::string a;
    std::string b;
    double frequency = 0.0;

    bool operator==(const TeamInteraction&) const = default;
};

class Store {
public:
    // Product
    std::map<std::string, ArtifactNode> artifacts;
    std::vector<AssemblyEdge> edges;  // insertion order drives decomposition order
    std::vector<Interaction> interactions;
    std::vector<BatchItem> batch_items;

    // Process
    std::map<std::string, ProcessNode> processes;
    std::map<std::string, ActivityNode> activities;
    std::map<std::string, TaskNode> tasks;
    std::vector<InfoFlowEdge> info_flows;

    // Organization
    std::map<std::string, Team> teams;
    std::map<std::string, ActorRecord> actors;
    std::vector<Competence> competences;
    std::vector<TeamInteraction> team_interactions;

    bool operator==(const Store&) const = default;

    // -- product mutations --

    // Throws DuplicateId if the id is taken.
    const std::string& add_artifact(ArtifactNode node);

    // Throws UnknownId / CycleDetected. A repeated (parent, child) pair is a
    // no-op returning the existing edge.
    const AssemblyEdge& add_assembly_edge(const std::string& parent, const std::string& child,
                                          const std::string& note = "");

    // Canonicalizes the endpoint order; re-adding the mirrored pair with the
    // same kind leaves the store unchanged. Throws UnknownId / SelfInteraction.
    const Interaction& add_interaction(const std::string& a, const std::string& b,
                                       InteractionKind kind, const std::string& note = "");

    // Throws UnknownId if the owner artifact is missing, DuplicateId on id reuse.
    const BatchItem& add_batch_item(BatchItem item);

    void add_team_interaction(const std::string& team_a, const std::string& team_b,
                              double frequency);

    // -- queries --

    const ArtifactNode& artifact(const std::string& id) const;  // throws UnknownId
    bool has_artifact(const std::string& id) const { return artifacts.count(id) != 0; }

    // Deterministic depth-first order, root first. Children follow edge
    // insertion order.
    std::vector<std::string> decomposition(const std::string& root) const;

    std::vector<std::string> children_of(const std::string& id) const;

    // All transitive parents of an artifact (the decomposition is a DAG).
    std::vector<std::string> ancestors_of(const std::string& id) const;

    bool is_root(const std::string& id) const;

    // Symmetric, zero-diagonal frequency matrix over team_order().
    std::vector<std::vector<double>> team_matrix() const;
    std::vector<std::string> team_order() const;  // sorted team ids

    // Full invariant sweep; throws ReferentialIntegrity on the first violation.
    void validate() const;

private:
    bool reachable(const std::string& from, const std::string& to) const;
};

}  // namespace ppco
