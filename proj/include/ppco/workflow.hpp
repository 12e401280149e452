#pragma once

// The propose/annotate/approve protocol: modifications are staged as
// proposals, announced to every concerned actor, and applied to the store
// only after unanimous approval. A single reject vetoes the proposal.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ppco/proposal.hpp"
#include "ppco/snapshot.hpp"
#include "ppco/viewpoint.hpp"

namespace ppco {

// Current wall-clock time with an asctime-style display string.
Timestamp system_timestamp();

class WorkflowEngine {
public:
    using Clock = std::function<Timestamp()>;
    using AnnotationSink = std::function<void(const Annotation&)>;

    explicit WorkflowEngine(Snapshot& snap, Clock clock = system_timestamp,
                            AnnotationSink sink = nullptr)
        : snap_(snap), clock_(std::move(clock)), sink_(std::move(sink)) {}

    // Stages a change. The author needs a level-1 connexion on the affected
    // batch (the write threshold). Throws InsufficientAccess / UnknownTarget.
    // With no concerned actor besides the author, unanimity is vacuous and
    // the proposal is applied immediately.
    const ChangeProposal& propose_change(const std::string& author, const std::string& target,
                                         const std::string& batch_kind,
                                         std::vector<FieldChange> payload);

    // Every actor holding a viewpoint that scopes the target (or one of its
    // ancestors) and whose profile grants the batch at any level. The author
    // is excluded at call sites, not here. Throws UnknownTarget.
    std::set<std::string> concerned_actors(const std::string& target,
                                           const std::string& batch_kind) const;

    // Throws UnknownId / NotPending / NotConcerned / AlreadyVoted.
    const ChangeProposal& vote(const std::string& proposal_id, const std::string& actor,
                               VoteDecision decision);

    // The filtering pipeline over the committed store; pending payloads are
    // never visible.
    InformationSet effective_view(const std::string& artifact, const std::string& actor) const;

    const ChangeProposal& proposal(const std::string& id) const;  // throws UnknownId

    std::vector<Annotation> annotations_for(const std::string& actor) const;

private:
    ChangeProposal& find_proposal(const std::string& id);
    void annotate(const std::string& proposal_id, const std::string& recipient,
                  const std::string& message);
    void apply_payload(const ChangeProposal& proposal);

    Snapshot& snap_;
    Clock clock_;
    AnnotationSink sink_;
};

}  // namespace ppco
