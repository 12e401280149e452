#pragma once

// Actor viewpoints and the five-step filtering pipeline: restitute the
// actor's viewpoints, keep the ones scoping the artifact, order them by
// competence, restitute each one's batch grants, and merge the grants into
// one information set.

#include <map>
#include <string>
#include <vector>

#include "ppco/errors.hpp"
#include "ppco/model.hpp"

namespace ppco {

struct ViewpointObjective {
    std::string focus;
    std::string activity;  // activity id in the process model
    std::string domain;

    bool operator==(const ViewpointObjective&) const = default;
};

struct Viewpoint {
    std::string id;  // short code, e.g. "VP01"
    std::string actor;
    std::string focus;  // e.g. "shape global design"
    std::string domain;  // e.g. "geometry"
    int competence_level = 1;  // higher = more competent
    std::vector<std::string> scope;  // artifact ids
    ViewpointObjective objective;

    bool operator==(const Viewpoint&) const = default;
};

struct ViewpointRelationship {
    std::string from_vp;
    std::string to_vp;
    std::string label;

    bool operator==(const ViewpointRelationship&) const = default;
};

// A (batch-kind, level) access grant. Level 1 is the fullest access ("all
// information"); larger numbers carry progressively less detail.
struct BatchConnexion {
    std::string batch_kind;
    int level = 1;
    std::string description;

    bool operator==(const BatchConnexion&) const = default;
};

// Grant lists keyed by (domain, competence level). Loaded as fixture data;
// the mapping from a viewpoint to its grants is configuration, not logic.
class ProfileTable {
public:
    using Key = std::pair<std::string, int>;

    // Throws ReferentialIntegrity on a second grant for the same batch kind.
    void register_profile(const std::string& domain, int level,
                          std::vector<BatchConnexion> grants);

    const std::vector<BatchConnexion>* find(const std::string& domain, int level) const;

    const std::map<Key, std::vector<BatchConnexion>>& all() const { return profiles_; }
    bool empty() const { return profiles_.empty(); }

    bool operator==(const ProfileTable&) const = default;

private:
    std::map<Key, std::vector<BatchConnexion>> profiles_;
};

// Viewpoint definitions plus their access-profile configuration; travels
// beside the Store in a snapshot.
struct ViewpointCatalog {
    std::map<std::string, Viewpoint> viewpoints;
    std::vector<ViewpointRelationship> relationships;
    ProfileTable profiles;

    bool operator==(const ViewpointCatalog&) const = default;

    void add_viewpoint(Viewpoint vp);  // throws DuplicateId
    void add_relationship(const std::string& from_vp, const std::string& to_vp,
                          const std::string& label);

    // Invariant sweep against the given store; throws ReferentialIntegrity.
    void validate(const Store& store) const;
};

// The merged result for one (actor, artifact) pair.
struct InformationSet {
    std::string actor;
    std::string artifact;
    std::vector<BatchConnexion> connexions;  // at most one per batch kind
    std::map<std::string, std::vector<std::string>> provenance;  // batch kind -> viewpoint ids

    const BatchConnexion* find(const std::string& batch_kind) const;

    bool operator==(const InformationSet&) const = default;
};

// Step 1: all viewpoints of the actor, ordered by viewpoint id.
// Throws UnknownActor.
std::vector<Viewpoint> restitute_viewpoints(const Store& store, const ViewpointCatalog& catalog,
                                            const std::string& actor);

// Step 2: keep viewpoints whose scope contains the artifact or one of its
// decomposition ancestors; input order preserved. Throws UnknownArtifact.
std::vector<Viewpoint> filter_viewpoints_for_artifact(const Store& store,
                                                      std::vector<Viewpoint> vps,
                                                      const std::string& artifact);

// Step 3: sort by competence level descending, ties by viewpoint id ascending.
std::vector<Viewpoint> classify_viewpoints(std::vector<Viewpoint> vps);

// Step 4: the grants registered for (vp.domain, vp.competence_level).
// Throws MissingProfile.
std::vector<BatchConnexion> restitute_connexions(const Viewpoint& vp, const ProfileTable& profiles);

// Step 5: merge two grant lists. Union of batch kinds; a kind present in both
// keeps the smaller (more complete) level. The result follows `next`'s order
// with kinds only in `acc` appended.
std::vector<BatchConnexion> optimize_connexions(const std::vector<BatchConnexion>& acc,
                                                const std::vector<BatchConnexion>& next);

// The composite pipeline. Throws UnknownActor, UnknownArtifact,
// NoApplicableViewpoint, MissingProfile.
InformationSet filter_info_artifact(const Store& store, const ViewpointCatalog& catalog,
                                    const std::string& artifact, const std::string& actor);

}  // namespace ppco
