#include "ppco/viewpoint.hpp"

#include <algorithm>
#include <set>

namespace ppco {

void ProfileTable::register_profile(const std::string& domain, int level,
                                    std::vector<BatchConnexion> grants) {
    if (level < 1) {
        throw Error(ErrorCode::ReferentialIntegrity, "profile competence level below 1");
    }
    std::set<std::string> kinds;
    for (const auto& g : grants) {
        if (g.level < 1) {
            throw Error(ErrorCode::ReferentialIntegrity,
                        "grant level below 1 for batch '" + g.batch_kind + "'");
        }
        if (g.batch_kind.empty()) {
            throw Error(ErrorCode::ReferentialIntegrity, "empty batch kind in profile");
        }
        if (!kinds.insert(g.batch_kind).second) {
            throw Error(ErrorCode::ReferentialIntegrity,
                        "duplicate grant for batch '" + g.batch_kind + "' in profile (" + domain +
                            ", " + std::to_string(level) + ")");
        }
    }
    profiles_[{domain, level}] = std::move(grants);
}

const std::vector<BatchConnexion>* ProfileTable::find(const std::string& domain, int level) const {
    auto it = profiles_.find({domain, level});
    return it == profiles_.end() ? nullptr : &it->second;
}

void ViewpointCatalog::add_viewpoint(Viewpoint vp) {
    if (viewpoints.count(vp.id)) {
        throw Error(ErrorCode::DuplicateId, "viewpoint '" + vp.id + "'");
    }
    viewpoints.emplace(vp.id, std::move(vp));
}

void ViewpointCatalog::add_relationship(const std::string& from_vp, const std::string& to_vp,
                                        const std::string& label) {
    if (!viewpoints.count(from_vp)) throw Error(ErrorCode::UnknownId, "viewpoint '" + from_vp + "'");
    if (!viewpoints.count(to_vp)) throw Error(ErrorCode::UnknownId, "viewpoint '" + to_vp + "'");
    if (from_vp == to_vp) {
        throw Error(ErrorCode::ReferentialIntegrity, "self-relationship on '" + from_vp + "'");
    }
    relationships.push_back(ViewpointRelationship{from_vp, to_vp, label});
}

void ViewpointCatalog::validate(const Store& store) const {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::ReferentialIntegrity, msg); };
    for (const auto& [id, vp] : viewpoints) {
        if (id != vp.id) fail("viewpoint key/id mismatch for '" + id + "'");
        if (!store.actors.count(vp.actor)) fail("viewpoint '" + id + "' actor unknown");
        if (vp.scope.empty()) fail("viewpoint '" + id + "' has empty scope");
        if (vp.competence_level < 1) fail("viewpoint '" + id + "' competence below 1");
        for (const auto& art : vp.scope) {
            if (!store.has_artifact(art)) fail("viewpoint '" + id + "' scopes unknown artifact");
        }
        if (!vp.objective.activity.empty() && !store.activities.count(vp.objective.activity)) {
            fail("viewpoint '" + id + "' objective activity unknown");
        }
    }
    for (const auto& rel : relationships) {
        if (!viewpoints.count(rel.from_vp) || !viewpoints.count(rel.to_vp)) {
            fail("viewpoint relationship endpoint unknown");
        }
        if (rel.from_vp == rel.to_vp) fail("viewpoint self-relationship");
    }
}

const BatchConnexion* InformationSet::find(const std::string& batch_kind) const {
    for (const auto& c : connexions) {
        if (c.batch_kind == batch_kind) return &c;
    }
    return nullptr;
}

std::vector<Viewpoint> restitute_viewpoints(const Store& store, const ViewpointCatalog& catalog,
                                            const std::string& actor) {
    if (!store.actors.count(actor)) {
        throw Error(ErrorCode::UnknownActor, "actor '" + actor + "'");
    }
    std::vector<Viewpoint> out;
    for (const auto& [id, vp] : catalog.viewpoints) {  // map order = id order
        if (vp.actor == actor) out.push_back(vp);
    }
    return out;
}

std::vector<Viewpoint> filter_viewpoints_for_artifact(const Store& store,
                                                      std::vector<Viewpoint> vps,
                                                      const std::string& artifact) {
    if (!store.has_artifact(artifact)) {
        throw Error(ErrorCode::UnknownArtifact, "artifact '" + artifact + "'");
    }
    std::set<std::string> lineage{artifact};
    for (const auto& anc : store.ancestors_of(artifact)) lineage.insert(anc);

    std::vector<Viewpoint> out;
    for (auto& vp : vps) {
        bool applies = std::any_of(vp.scope.begin(), vp.scope.end(),
                                   [&](const std::string& s) { return lineage.count(s) != 0; });
        if (applies) out.push_back(std::move(vp));
    }
    return out;
}

std::vector<Viewpoint> classify_viewpoints(std::vector<Viewpoint> vps) {
    std::stable_sort(vps.begin(), vps.end(), [](const Viewpoint& a, const Viewpoint& b) {
        if (a.competence_level != b.competence_level) {
            return a.competence_level > b.competence_level;
        }
        return a.id < b.id;
    });
    return vps;
}

std::vector<BatchConnexion> restitute_connexions(const Viewpoint& vp,
                                                 const ProfileTable& profiles) {
    const auto* grants = profiles.find(vp.domain, vp.competence_level);
    if (!grants) {
        throw Error(ErrorCode::MissingProfile,
                    "no profile for (" + vp.domain + ", " +
                        std::to_string(vp.competence_level) + ")");
    }
    return *grants;
}

std::vector<BatchConnexion> optimize_connexions(const std::vector<BatchConnexion>& acc,
                                                const std::vector<BatchConnexion>& next) {
    std::vector<BatchConnexion> out;
    std::set<std::string> taken;
    for (const auto& c : next) {
        const BatchConnexion* pick = &c;
        for (const auto& prev : acc) {
            if (prev.batch_kind == c.batch_kind && prev.level <= c.level) pick = &prev;
        }
        out.push_back(*pick);
        taken.insert(c.batch_kind);
    }
    for (const auto& prev : acc) {
        if (!taken.count(prev.batch_kind)) out.push_back(prev);
    }
    return out;
}

InformationSet filter_info_artifact(const Store& store, const ViewpointCatalog& catalog,
                                    const std::string& artifact, const std::string& actor) {
    auto vps = restitute_viewpoints(store, catalog, actor);
    vps = filter_viewpoints_for_artifact(store, std::move(vps), artifact);
    if (vps.empty()) {
        throw Error(ErrorCode::NoApplicableViewpoint,
                    "no viewpoint of '" + actor + "' scopes artifact '" + artifact + "'");
    }
    vps = classify_viewpoints(std::move(vps));

    std::vector<BatchConnexion> merged = restitute_connexions(vps.front(), catalog.profiles);
    for (std::size_t i = 1; i < vps.size(); ++i) {
        merged = optimize_connexions(merged, restitute_connexions(vps[i], catalog.profiles));
    }

    InformationSet set;
    set.actor = actor;
    set.artifact = artifact;
    set.connexions = std::move(merged);
    for (const auto& c : set.connexions) {
        for (const auto& vp : vps) {
            const auto* grants = catalog.profiles.find(vp.domain, vp.competence_level);
            for (const auto& g : *grants) {
                if (g.batch_kind == c.batch_kind) set.provenance[c.batch_kind].push_back(vp.id);
            }
        }
    }
    return set;
}

}  // namespace ppco
