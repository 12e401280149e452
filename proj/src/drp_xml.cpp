#include "ppco/drp_xml.hpp"

#include <cctype>
#include <sstream>

namespace ppco {

namespace {

std::string escape_text(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string escape_attr(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void emit_field(std::ostream& os, const std::string& indent, const std::string& name,
                const std::optional<std::string>& value) {
    if (!value) return;
    os << indent << '<' << name << '>' << escape_text(*value) << "</" << name << ">\n";
}

struct FieldRef {
    const char* name;
    std::optional<std::string> DrpArtifactRecord::* member;
};

// One-Artifact / Sub-artifact element order, after the id element.
constexpr FieldRef kOptionalFields[] = {
    {"properties", &DrpArtifactRecord::properties},
    {"methods", &DrpArtifactRecord::methods},
    {"documentation", &DrpArtifactRecord::documentation},
    {"description", &DrpArtifactRecord::description},
    {"created_by", &DrpArtifactRecord::created_by},
    {"creation_date", &DrpArtifactRecord::creation_date},
    {"last_update_by", &DrpArtifactRecord::last_update_by},
    {"last_update_date", &DrpArtifactRecord::last_update_date},
    {"type", &DrpArtifactRecord::type},
};

void emit_record(std::ostream& os, const DrpArtifactRecord& rec, bool is_root) {
    const char* block = is_root ? "One-Artifact" : "Sub-artifact";
    const char* id_name = is_root ? "id_artifact" : "id_sub_artifact";
    os << "  <" << block << ">\n";
    os << "    <" << id_name << '>' << escape_text(rec.id) << "</" << id_name << ">\n";
    os << "    <name>" << escape_text(rec.name) << "</name>\n";
    os << "    <class_name>" << escape_text(rec.class_name) << "</class_name>\n";
    for (const auto& f : kOptionalFields) emit_field(os, "    ", f.name, rec.*(f.member));
    if (is_root) emit_field(os, "    ", "is_complete", rec.is_complete);
    os << "  </" << block << ">\n";
}

// ---- minimal XML reader, just enough for the DRP document shape ----

struct XmlNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<XmlNode> children;
    std::string text;
};

class XmlReader {
public:
    explicit XmlReader(const std::string& text) : s_(text) {}

    XmlNode parse_document() {
        skip_ws();
        if (peek_starts("<?")) skip_declaration();
        skip_ws();
        XmlNode root = parse_element();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing content after root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorCode::MalformedXml, msg + " (offset " + std::to_string(pos_) + ")");
    }

    bool peek_starts(const std::string& p) const { return s_.compare(pos_, p.size(), p) == 0; }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void skip_declaration() {
        auto end = s_.find("?>", pos_);
        if (end == std::string::npos) fail("unterminated XML declaration");
        pos_ = end + 2;
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' ||
                c == '.') {
                ++pos_;
            } else {
                break;
            }
        }
        if (pos_ == start) fail("expected a name");
        return s_.substr(start, pos_ - start);
    }

    std::string decode(const std::string& raw) {
        std::string out;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            auto semi = raw.find(';', i);
            if (semi == std::string::npos) fail("unterminated entity reference");
            std::string ent = raw.substr(i + 1, semi - i - 1);
            if (ent == "amp") out += '&';
            else if (ent == "lt") out += '<';
            else if (ent == "gt") out += '>';
            else if (ent == "quot") out += '"';
            else if (ent == "apos") out += '\'';
            else fail("unknown entity '&" + ent + ";'");
            i = semi;
        }
        return out;
    }

    XmlNode parse_element() {
        if (pos_ >= s_.size() || s_[pos_] != '<') fail("expected '<'");
        ++pos_;
        XmlNode node;
        node.name = parse_name();
        // attributes
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) fail("unterminated start tag");
            if (s_[pos_] == '>') {
                ++pos_;
                break;
            }
            if (peek_starts("/>")) {
                pos_ += 2;
                return node;
            }
            std::string attr = parse_name();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '=' after attribute name");
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\'')) {
                fail("expected quoted attribute value");
            }
            char quote = s_[pos_++];
            auto end = s_.find(quote, pos_);
            if (end == std::string::npos) fail("unterminated attribute value");
            node.attrs.emplace_back(attr, decode(s_.substr(pos_, end - pos_)));
            pos_ = end + 1;
        }
        // content
        std::string text;
        bool saw_text = false;
        while (true) {
            if (pos_ >= s_.size()) fail("unterminated element <" + node.name + ">");
            if (s_[pos_] == '<') {
                if (peek_starts("</")) {
                    pos_ += 2;
                    std::string closing = parse_name();
                    if (closing != node.name) {
                        fail("mismatched closing tag </" + closing + "> for <" + node.name + ">");
                    }
                    skip_ws();
                    if (pos_ >= s_.size() || s_[pos_] != '>') fail("malformed closing tag");
                    ++pos_;
                    break;
                }
                node.children.push_back(parse_element());
            } else {
                std::size_t next = s_.find('<', pos_);
                if (next == std::string::npos) fail("unterminated element <" + node.name + ">");
                text += s_.substr(pos_, next - pos_);
                saw_text = true;
                pos_ = next;
            }
        }
        if (!node.children.empty()) {
            for (char c : text) {
                if (!std::isspace(static_cast<unsigned char>(c))) {
                    fail("mixed text and element content in <" + node.name + ">");
                }
            }
        } else if (saw_text) {
            node.text = decode(text);
        }
        return node;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

DrpArtifactRecord record_from_node(const XmlNode& node, bool is_root) {
    const char* id_name = is_root ? "id_artifact" : "id_sub_artifact";
    DrpArtifactRecord rec;
    bool have_id = false, have_name = false, have_class = false;
    for (const auto& child : node.children) {
        if (!child.children.empty()) {
            throw Error(ErrorCode::UnknownElement,
                        "unexpected nested element <" + child.children.front().name + "> in <" +
                            node.name + ">");
        }
        const std::string& v = child.text;
        if (child.name == id_name) {
            rec.id = v;
            have_id = true;
        } else if (child.name == "name") {
            rec.name = v;
            have_name = true;
        } else if (child.name == "class_name") {
            rec.class_name = v;
            have_class = true;
        } else if (child.name == "is_complete" && is_root) {
            rec.is_complete = v;
        } else {
            bool known = false;
            for (const auto& f : kOptionalFields) {
                if (child.name == f.name) {
                    rec.*(f.member) = v;
                    known = true;
                    break;
                }
            }
            if (!known) {
                throw Error(ErrorCode::UnknownElement,
                            "element <" + child.name + "> not allowed in <" + node.name + ">");
            }
        }
    }
    if (!have_id) throw Error(ErrorCode::MissingRequiredField, std::string(id_name));
    if (!have_name) throw Error(ErrorCode::MissingRequiredField, "name");
    if (!have_class) throw Error(ErrorCode::MissingRequiredField, "class_name");
    return rec;
}

DrpArtifactRecord record_from_artifact(const ArtifactNode& node, int level,
                                       const RedactionPolicy& redaction, bool is_root) {
    DrpArtifactRecord rec;
    rec.id = node.id;
    rec.name = node.name;
    rec.class_name = node.class_name;
    if (!redaction.hides("properties", level)) rec.properties = node.properties_ref;
    if (!redaction.hides("methods", level)) rec.methods = node.methods_ref;
    if (!redaction.hides("documentation", level)) rec.documentation = node.documentation_ref;
    if (!redaction.hides("description", level)) rec.description = node.description;
    rec.created_by = node.created_by;
    rec.creation_date = node.creation_date.display;
    rec.last_update_by = node.last_update_by;
    rec.last_update_date = node.last_update_date.display;
    rec.type = std::to_string(node.type_code);
    if (is_root && node.is_complete.has_value()) {
        rec.is_complete = *node.is_complete ? "Yes" : "No";
    }
    return rec;
}

void diff_record(const DrpArtifactRecord& a, const DrpArtifactRecord& b, const std::string& path,
                 std::vector<DrpDifference>& out) {
    const char* id_name = path.find("One-Artifact") != std::string::npos ? "id_artifact"
                                                                         : "id_sub_artifact";
    auto note = [&](const std::string& field, const std::string& va, const std::string& vb) {
        out.push_back(DrpDifference{path + "/" + field, "'" + va + "' vs '" + vb + "'"});
    };
    if (a.id != b.id) note(id_name, a.id, b.id);
    if (a.name != b.name) note("name", a.name, b.name);
    if (a.class_name != b.class_name) note("class_name", a.class_name, b.class_name);
    auto opt = [](const std::optional<std::string>& v) { return v ? *v : std::string("<absent>"); };
    for (const auto& f : kOptionalFields) {
        if (a.*(f.member) != b.*(f.member)) note(f.name, opt(a.*(f.member)), opt(b.*(f.member)));
    }
    if (a.is_complete != b.is_complete) note("is_complete", opt(a.is_complete), opt(b.is_complete));
}

}  // namespace

DrpDocument export_drp(const InformationSet& set, const Snapshot& snap) {
    const ArtifactNode& root = snap.store.artifact(set.artifact);
    const BatchConnexion* artifact_grant = set.find("Artifact");
    if (!artifact_grant) {
        throw Error(ErrorCode::ArtifactBatchNotGranted,
                    "information set for '" + set.actor + "' does not grant the Artifact batch");
    }
    DrpDocument doc;
    doc.schema_location = snap.drp_schema_location;
    doc.root = record_from_artifact(root, artifact_grant->level, snap.redaction, true);
    if (const BatchConnexion* sub_grant = set.find("Sub-Artifact")) {
        for (const auto& child : snap.store.children_of(set.artifact)) {
            doc.sub_artifacts.push_back(record_from_artifact(snap.store.artifact(child),
                                                             sub_grant->level, snap.redaction,
                                                             false));
        }
    }
    return doc;
}

std::string serialize_drp(const DrpDocument& doc) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" ?>\n";
    os << "<DRP xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\""
       << " xsi:noNamespaceSchemaLocation=\"" << escape_attr(doc.schema_location) << "\">\n";
    os << "<Artifact>\n";
    emit_record(os, doc.root, true);
    for (const auto& sub : doc.sub_artifacts) emit_record(os, sub, false);
    os << "</Artifact>\n";
    os << "</DRP>\n";
    return os.str();
}

DrpDocument import_drp(const std::string& text) {
    XmlReader reader(text);
    XmlNode root = reader.parse_document();
    if (root.name != "DRP") {
        throw Error(ErrorCode::UnknownElement, "root element <" + root.name + ">, expected <DRP>");
    }
    DrpDocument doc;
    for (const auto& [attr, value] : root.attrs) {
        if (attr == "xsi:noNamespaceSchemaLocation") doc.schema_location = value;
    }
    if (root.children.size() != 1 || root.children.front().name != "Artifact") {
        if (!root.children.empty() && root.children.front().name != "Artifact") {
            throw Error(ErrorCode::UnknownElement,
                        "element <" + root.children.front().name + "> not allowed in <DRP>");
        }
        throw Error(ErrorCode::MissingRequiredField, "<DRP> must contain exactly one <Artifact>");
    }
    const XmlNode& artifact = root.children.front();
    bool have_root = false;
    for (const auto& child : artifact.children) {
        if (child.name == "One-Artifact") {
            if (have_root) {
                throw Error(ErrorCode::MalformedXml, "multiple <One-Artifact> blocks");
            }
            doc.root = record_from_node(child, true);
            have_root = true;
        } else if (child.name == "Sub-artifact") {
            doc.sub_artifacts.push_back(record_from_node(child, false));
        } else {
            throw Error(ErrorCode::UnknownElement,
                        "element <" + child.name + "> not allowed in <Artifact>");
        }
    }
    if (!have_root) throw Error(ErrorCode::MissingRequiredField, "One-Artifact");
    return doc;
}

std::vector<DrpDifference> diff_drp(const DrpDocument& a, const DrpDocument& b) {
    std::vector<DrpDifference> out;
    if (a.schema_location != b.schema_location) {
        out.push_back(DrpDifference{"DRP@xsi:noNamespaceSchemaLocation",
                                    "'" + a.schema_location + "' vs '" + b.schema_location + "'"});
    }
    diff_record(a.root, b.root, "Artifact/One-Artifact", out);
    if (a.sub_artifacts.size() != b.sub_artifacts.size()) {
        out.push_back(DrpDifference{"Artifact/Sub-artifact",
                                    "cardinality " + std::to_string(a.sub_artifacts.size()) +
                                        " vs " + std::to_string(b.sub_artifacts.size())});
        return out;
    }
    for (std::size_t i = 0; i < a.sub_artifacts.size(); ++i) {
        diff_record(a.sub_artifacts[i], b.sub_artifacts[i],
                    "Artifact/Sub-artifact[" + std::to_string(i + 1) + "]", out);
    }
    return out;
}

}  // namespace ppco
