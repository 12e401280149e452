#pragma once

// The DRP XML interchange document: one root artifact plus its direct
// sub-artifacts, exported from an information set and parsed back
// byte-faithful for every carried field.

#include <optional>
#include <string>
#include <vector>

#include "ppco/snapshot.hpp"
#include "ppco/viewpoint.hpp"

namespace ppco {

// One <One-Artifact> or <Sub-artifact> block. Absent optionals mean the
// element was omitted (redacted or not shown); dates stay display strings.
struct DrpArtifactRecord {
    std::string id;
    std::string name;
    std::string class_name;
    std::optional<std::string> properties;
    std::optional<std::string> methods;
    std::optional<std::string> documentation;
    std::optional<std::string> description;
    std::optional<std::string> created_by;
    std::optional<std::string> creation_date;
    std::optional<std::string> last_update_by;
    std::optional<std::string> last_update_date;
    std::optional<std::string> type;
    std::optional<std::string> is_complete;  // root record only

    bool operator==(const DrpArtifactRecord&) const = default;
};

struct DrpDocument {
    std::string schema_location;
    DrpArtifactRecord root;
    std::vector<DrpArtifactRecord> sub_artifacts;

    bool operator==(const DrpDocument&) const = default;
};

struct DrpDifference {
    std::string path;  // e.g. "Artifact/One-Artifact/name"
    std::string detail;

    bool operator==(const DrpDifference&) const = default;
};

// Materialize the set over the product graph. The set must grant the
// Artifact batch (throws ArtifactBatchNotGranted); Sub-artifact blocks
// appear iff the Sub-Artifact batch is granted. Fields listed in the
// redaction policy are dropped when the governing level reaches the
// policy threshold.
DrpDocument export_drp(const InformationSet& set, const Snapshot& snap);

std::string serialize_drp(const DrpDocument& doc);

// Throws MalformedXml / UnknownElement / MissingRequiredField.
DrpDocument import_drp(const std::string& text);

// Field-by-field comparison; empty iff the documents are equal.
std::vector<DrpDifference> diff_drp(const DrpDocument& a, const DrpDocument& b);

}  // namespace ppco
