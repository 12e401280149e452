#pragma once

// Whole-state persistence: the PPCO store, viewpoint catalog, redaction
// policy, and workflow state saved to one line-oriented, sectioned text file.
// Saving the same state twice yields identical bytes; loading validates every
// module invariant and refuses inconsistent files.

#include <cstdint>
#include <string>
#include <vector>

#include "ppco/model.hpp"
#include "ppco/proposal.hpp"
#include "ppco/viewpoint.hpp"

namespace ppco {

// Which XML fields a restricted access level hides. Levels at or above the
// threshold drop the listed elements from exported documents.
struct RedactionPolicy {
    int threshold = 2;
    std::vector<std::string> hidden_fields = {"properties", "methods", "documentation"};

    bool hides(const std::string& field, int level) const;

    bool operator==(const RedactionPolicy&) const = default;
};

struct Snapshot {
    Store store;
    ViewpointCatalog catalog;
    RedactionPolicy redaction;
    std::string drp_schema_location;
    std::vector<ChangeProposal> proposals;
    std::vector<Annotation> annotations;
    std::uint64_t next_proposal = 1;

    bool operator==(const Snapshot&) const = default;

    // Every module's invariant sweep; throws ReferentialIntegrity.
    void validate() const;
};

std::string serialize_snapshot(const Snapshot& snap);

// Throws ParseError / ReferentialIntegrity.
Snapshot parse_snapshot(const std::string& text);

void save_snapshot(const Snapshot& snap, const std::string& path);  // throws Io
Snapshot load_snapshot(const std::string& path);  // throws Io / ParseError / ReferentialIntegrity

}  // namespace ppco
