#include "ppco/proposal.hpp"

#include "ppco/errors.hpp"

namespace ppco {

const char* to_string(ProposalState state) {
    switch (state) {
        case ProposalState::Pending: return "Pending";
        case ProposalState::Approved: return "Approved";
        case ProposalState::Rejected: return "Rejected";
    }
    return "Pending";
}

const char* to_string(VoteDecision decision) {
    return decision == VoteDecision::Approve ? "approve" : "reject";
}

ProposalState proposal_state_from_string(const std::string& s) {
    if (s == "Pending") return ProposalState::Pending;
    if (s == "Approved") return ProposalState::Approved;
    if (s == "Rejected") return ProposalState::Rejected;
    throw Error(ErrorCode::ParseError, "unknown proposal state '" + s + "'");
}

VoteDecision vote_decision_from_string(const std::string& s) {
    if (s == "approve") return VoteDecision::Approve;
    if (s == "reject") return VoteDecision::Reject;
    throw Error(ErrorCode::ParseError, "unknown vote decision '" + s + "'");
}

}  // namespace ppco
