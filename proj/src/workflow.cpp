#include "ppco/workflow.hpp"

#include <ctime>

namespace ppco {

Timestamp system_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%a %b %d %H:%M:%S UTC %Y", &tm);
    return Timestamp{static_cast<std::int64_t>(now), buf};
}

namespace {

const char* kEditableFields[] = {"name",          "class_name", "properties",
                                 "methods",       "documentation", "description"};

void check_payload(const std::vector<FieldChange>& payload) {
    for (const auto& change : payload) {
        bool known = false;
        for (const char* f : kEditableFields) {
            if (change.field == f) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw Error(ErrorCode::ParseError, "field '" + change.field + "' is not editable");
        }
    }
}

}  // namespace

const ChangeProposal& WorkflowEngine::propose_change(const std::string& author,
                                                     const std::string& target,
                                                     const std::string& batch_kind,
                                                     std::vector<FieldChange> payload) {
    if (!snap_.store.has_artifact(target)) {
        throw Error(ErrorCode::UnknownTarget, "artifact '" + target + "'");
    }
    check_payload(payload);

    InformationSet rights;
    try {
        rights = filter_info_artifact(snap_.store, snap_.catalog, target, author);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoApplicableViewpoint || e.code() == ErrorCode::MissingProfile) {
            throw Error(ErrorCode::InsufficientAccess,
                        "'" + author + "' holds no applicable viewpoint on '" + target + "'");
        }
        throw;
    }
    const BatchConnexion* grant = rights.find(batch_kind);
    if (!grant || grant->level != 1) {
        throw Error(ErrorCode::InsufficientAccess,
                    "'" + author + "' lacks a level-1 '" + batch_kind + "' connexion on '" +
                        target + "'");
    }

    ChangeProposal proposal;
    proposal.id = "P" + std::to_string(snap_.next_proposal++);
    proposal.author = author;
    proposal.target = target;
    proposal.batch_kind = batch_kind;
    proposal.payload = std::move(payload);
    proposal.concerned = concerned_actors(target, batch_kind);
    proposal.concerned.erase(author);

    snap_.proposals.push_back(std::move(proposal));
    ChangeProposal& stored = snap_.proposals.back();
    for (const auto& actor : stored.concerned) {
        annotate(stored.id, actor,
                 "change proposed by " + author + " on " + target + " (" + batch_kind + ")");
    }
    if (stored.concerned.empty()) {
        stored.state = ProposalState::Approved;
        apply_payload(stored);
    }
    return stored;
}

std::set<std::string> WorkflowEngine::concerned_actors(const std::string& target,
                                                       const std::string& batch_kind) const {
    if (!snap_.store.has_artifact(target)) {
        throw Error(ErrorCode::UnknownTarget, "artifact '" + target + "'");
    }
    std::set<std::string> lineage{target};
    for (const auto& anc : snap_.store.ancestors_of(target)) lineage.insert(anc);

    std::set<std::string> out;
    for (const auto& [id, vp] : snap_.catalog.viewpoints) {
        bool scoped = false;
        for (const auto& s : vp.scope) {
            if (lineage.count(s)) {
                scoped = true;
                break;
            }
        }
        if (!scoped) continue;
        const auto* grants = snap_.catalog.profiles.find(vp.domain, vp.competence_level);
        if (!grants) continue;
        for (const auto& g : *grants) {
            if (g.batch_kind == batch_kind) {
                out.insert(vp.actor);
                break;
            }
        }
    }
    return out;
}

const ChangeProposal& WorkflowEngine::vote(const std::string& proposal_id,
                                           const std::string& actor, VoteDecision decision) {
    ChangeProposal& proposal = find_proposal(proposal_id);
    if (proposal.state != ProposalState::Pending) {
        throw Error(ErrorCode::NotPending, "proposal '" + proposal_id + "' is already " +
                                               to_string(proposal.state));
    }
    if (!proposal.concerned.count(actor)) {
        throw Error(ErrorCode::NotConcerned,
                    "'" + actor + "' is not concerned by '" + proposal_id + "'");
    }
    if (proposal.votes.count(actor)) {
        throw Error(ErrorCode::AlreadyVoted, "'" + actor + "' already voted on '" + proposal_id + "'");
    }
    proposal.votes[actor] = decision;

    if (decision == VoteDecision::Reject) {
        proposal.state = ProposalState::Rejected;
        for (const auto& recipient : proposal.concerned) {
            annotate(proposal.id, recipient, "proposal rejected by " + actor);
        }
        return proposal;
    }

    bool unanimous = true;
    for (const auto& recipient : proposal.concerned) {
        auto it = proposal.votes.find(recipient);
        if (it == proposal.votes.end() || it->second != VoteDecision::Approve) {
            unanimous = false;
            break;
        }
    }
    if (unanimous) {
        proposal.state = ProposalState::Approved;
        apply_payload(proposal);
        for (const auto& recipient : proposal.concerned) {
            annotate(proposal.id, recipient, "proposal approved and applied");
        }
    }
    return proposal;
}

InformationSet WorkflowEngine::effective_view(const std::string& artifact,
                                              const std::string& actor) const {
    return filter_info_artifact(snap_.store, snap_.catalog, artifact, actor);
}

const ChangeProposal& WorkflowEngine::proposal(const std::string& id) const {
    for (const auto& p : snap_.proposals) {
        if (p.id == id) return p;
    }
    throw Error(ErrorCode::UnknownId, "proposal '" + id + "'");
}

std::vector<Annotation> WorkflowEngine::annotations_for(const std::string& actor) const {
    std::vector<Annotation> out;
    for (const auto& a : snap_.annotations) {
        if (a.recipient == actor) out.push_back(a);
    }
    return out;
}

ChangeProposal& WorkflowEngine::find_proposal(const std::string& id) {
    for (auto& p : snap_.proposals) {
        if (p.id == id) return p;
    }
    throw Error(ErrorCode::UnknownId, "proposal '" + id + "'");
}

void WorkflowEngine::annotate(const std::string& proposal_id, const std::string& recipient,
                              const std::string& message) {
    Annotation note{proposal_id, recipient, clock_(), message};
    snap_.annotations.push_back(note);
    if (sink_) sink_(note);
}

void WorkflowEngine::apply_payload(const ChangeProposal& proposal) {
    ArtifactNode node = snap_.store.artifact(proposal.target);  // copy, applied all-or-nothing
    for (const auto& change : proposal.payload) {
        if (change.field == "name") node.name = change.value;
        else if (change.field == "class_name") node.class_name = change.value;
        else if (change.field == "properties") node.properties_ref = change.value;
        else if (change.field == "methods") node.methods_ref = change.value;
        else if (change.field == "documentation") node.documentation_ref = change.value;
        else if (change.field == "description") node.description = change.value;
    }
    node.last_update_by = proposal.author;
    node.last_update_date = clock_();
    snap_.store.artifacts[proposal.target] = std::move(node);
}

}  // namespace ppco
