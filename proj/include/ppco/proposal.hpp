#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ppco/model.hpp"

namespace ppco {

enum class ProposalState { Pending, Approved, Rejected };
enum class VoteDecision { Approve, Reject };

const char* to_string(ProposalState state);
const char* to_string(VoteDecision decision);
ProposalState proposal_state_from_string(const std::string& s);
VoteDecision vote_decision_from_string(const std::string& s);

// One field edit on the target artifact. Allowed fields: name, class_name,
// properties, methods, documentation, description.
struct FieldChange {
    std::string field;
    std::string value;

    bool operator==(const FieldChange&) const = default;
};

struct ChangeProposal {
    std::string id;  // "P1", "P2", ...
    std::string author;
    std::string target;  // artifact id
    std::string batch_kind;
    std::vector<FieldChange> payload;
    ProposalState state = ProposalState::Pending;
    std::set<std::string> concerned;  // frozen at creation, author excluded
    std::map<std::string, VoteDecision> votes;

    bool operator==(const ChangeProposal&) const = default;
};

struct Annotation {
    std::string proposal;
    std::string recipient;
    Timestamp at;
    std::string message;

    bool operator==(const Annotation&) const = default;
};

}  // namespace ppco
