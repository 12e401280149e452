#include "ppco/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ppco {

bool RedactionPolicy::hides(const std::string& field, int level) const {
    if (level < threshold) return false;
    return std::find(hidden_fields.begin(), hidden_fields.end(), field) != hidden_fields.end();
}

void Snapshot::validate() const {
    store.validate();
    catalog.validate(store);
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::ReferentialIntegrity, msg); };

    if (redaction.threshold < 1) fail("redaction threshold below 1");

    std::set<std::string> proposal_ids;
    for (const auto& p : proposals) {
        if (!proposal_ids.insert(p.id).second) fail("duplicate proposal id '" + p.id + "'");
        if (!store.actors.count(p.author)) fail("proposal '" + p.id + "' author unknown");
        if (!store.has_artifact(p.target)) fail("proposal '" + p.id + "' target unknown");
        if (p.batch_kind.empty()) fail("proposal '" + p.id + "' has no batch kind");
        for (const auto& actor : p.concerned) {
            if (!store.actors.count(actor)) fail("proposal '" + p.id + "' concerned actor unknown");
        }
        bool any_reject = false;
        bool all_approved = true;
        for (const auto& actor : p.concerned) {
            auto it = p.votes.find(actor);
            if (it == p.votes.end() || it->second != VoteDecision::Approve) all_approved = false;
        }
        for (const auto& [actor, decision] : p.votes) {
            if (!p.concerned.count(actor)) fail("proposal '" + p.id + "' vote from non-concerned");
            if (decision == VoteDecision::Reject) any_reject = true;
        }
        if (p.state == ProposalState::Approved && !all_approved) {
            fail("proposal '" + p.id + "' approved without unanimity");
        }
        if (p.state == ProposalState::Rejected && !any_reject) {
            fail("proposal '" + p.id + "' rejected without a reject vote");
        }
    }
    for (const auto& a : annotations) {
        if (!proposal_ids.count(a.proposal)) fail("annotation references unknown proposal");
        if (!store.actors.count(a.recipient)) fail("annotation recipient unknown");
    }
}

namespace {

std::string escape_field(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '|': out += "\\|"; break;
            case ';': out += "\\;"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape_field(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (i + 1 >= s.size()) throw Error(ErrorCode::ParseError, "dangling escape");
        char c = s[++i];
        switch (c) {
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            default: out += c;
        }
    }
    return out;
}

// Split at delimiters that are not escaped; keeps escapes in the pieces.
std::vector<std::string> split_escaped(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    bool escaped = false;
    for (char c : s) {
        if (escaped) {
            cur += c;
            escaped = false;
        } else if (c == '\\') {
            cur += c;
            escaped = true;
        } else if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string join_list(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ';';
        out += escape_field(items[i]);
    }
    return out;
}

template <typename Set>
std::string join_set(const Set& items) {
    return join_list(std::vector<std::string>(items.begin(), items.end()));
}

std::vector<std::string> parse_list(const std::string& field) {
    if (field.empty()) return {};
    std::vector<std::string> out;
    for (const auto& piece : split_escaped(field, ';')) out.push_back(unescape_field(piece));
    return out;
}

std::int64_t parse_int(const std::string& s) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad integer '" + s + "'");
    }
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad number '" + s + "'");
    }
}

std::string format_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

class RowWriter {
public:
    explicit RowWriter(std::ostream& os) : os_(os) {}

    void section(const std::string& name) { os_ << '[' << name << "]\n"; }

    RowWriter& field(const std::string& v) {
        piece(escape_field(v));
        return *this;
    }
    RowWriter& raw(const std::string& pre_escaped) {
        piece(pre_escaped);
        return *this;
    }
    RowWriter& num(std::int64_t v) {
        piece(std::to_string(v));
        return *this;
    }
    void end() {
        os_ << row_ << '\n';
        row_.clear();
        first_ = true;
    }

private:
    void piece(const std::string& v) {
        if (!first_) row_ += '|';
        row_ += v;
        first_ = false;
    }
    std::ostream& os_;
    std::string row_;
    bool first_ = true;
};

struct Row {
    std::vector<std::string> fields;  // unescaped
    std::vector<std::string> raw;     // still escaped, for list fields

    const std::string& at(std::size_t i) const {
        if (i >= fields.size()) throw Error(ErrorCode::ParseError, "missing field");
        return fields[i];
    }
    std::vector<std::string> list(std::size_t i) const {
        if (i >= raw.size()) throw Error(ErrorCode::ParseError, "missing field");
        return parse_list(raw[i]);
    }
    void expect(std::size_t n) const {
        if (fields.size() != n) {
            throw Error(ErrorCode::ParseError,
                        "expected " + std::to_string(n) + " fields, got " +
                            std::to_string(fields.size()));
        }
    }
};

}  // namespace

std::string serialize_snapshot(const Snapshot& snap) {
    std::ostringstream os;
    RowWriter w(os);
    os << "ppco-snapshot 1\n";
    w.field(snap.drp_schema_location)
        .num(snap.redaction.threshold)
        .raw(join_list(snap.redaction.hidden_fields))
        .num(static_cast<std::int64_t>(snap.next_proposal))
        .end();

    w.section("artifacts");
    for (const auto& [id, a] : snap.store.artifacts) {
        w.field(a.id)
            .field(a.name)
            .field(a.class_name)
            .field(a.properties_ref)
            .field(a.methods_ref)
            .field(a.documentation_ref)
            .field(a.description)
            .field(a.created_by)
            .num(a.creation_date.epoch)
            .field(a.creation_date.display)
            .field(a.last_update_by)
            .num(a.last_update_date.epoch)
            .field(a.last_update_date.display)
            .num(a.type_code)
            .field(a.is_complete ? (*a.is_complete ? "yes" : "no") : "-")
            .end();
    }
    w.section("edges");
    for (const auto& e : snap.store.edges) {
        w.field(e.parent).field(e.child).field(e.relationship_note).end();
    }
    w.section("interactions");
    for (const auto& ia : snap.store.interactions) {
        w.field(ia.a).field(ia.b).field(to_string(ia.kind)).field(ia.note).end();
    }
    w.section("batch_items");
    for (const auto& b : snap.store.batch_items) {
        w.field(b.id).field(b.owner).field(batch_kind_of(b.category)).field(b.payload).end();
    }
    w.section("processes");
    for (const auto& [id, p] : snap.store.processes) {
        w.field(p.id).field(p.name).raw(join_list(p.activities)).end();
    }
    w.section("activities");
    for (const auto& [id, a] : snap.store.activities) {
        w.field(a.id).field(a.name).raw(join_list(a.tasks)).end();
    }
    w.section("tasks");
    for (const auto& [id, t] : snap.store.tasks) {
        w.field(t.id).field(t.name).field(t.domain).end();
    }
    w.section("flows");
    for (const auto& f : snap.store.info_flows) {
        w.field(f.from_task).field(f.to_task).field(f.payload).end();
    }
    w.section("teams");
    for (const auto& [id, t] : snap.store.teams) {
        w.field(t.id).field(t.name).field(t.responsible_for).raw(join_list(t.members)).end();
    }
    w.section("actors");
    for (const auto& [id, a] : snap.store.actors) {
        w.field(a.id).field(a.name).field(a.role).field(a.team).end();
    }
    w.section("competences");
    for (const auto& c : snap.store.competences) {
        w.field(c.actor).field(c.domain).num(c.level).end();
    }
    w.section("team_interactions");
    for (const auto& ti : snap.store.team_interactions) {
        w.field(ti.a).field(ti.b).field(format_double(ti.frequency)).end();
    }
    w.section("viewpoints");
    for (const auto& [id, vp] : snap.catalog.viewpoints) {
        w.field(vp.id)
            .field(vp.actor)
            .field(vp.focus)
            .field(vp.domain)
            .num(vp.competence_level)
            .raw(join_list(vp.scope))
            .field(vp.objective.focus)
            .field(vp.objective.activity)
            .field(vp.objective.domain)
            .end();
    }
    w.section("vp_relationships");
    for (const auto& rel : snap.catalog.relationships) {
        w.field(rel.from_vp).field(rel.to_vp).field(rel.label).end();
    }
    w.section("profiles");
    for (const auto& [key, grants] : snap.catalog.profiles.all()) {
        for (const auto& g : grants) {
            w.field(key.first)
                .num(key.second)
                .field(g.batch_kind)
                .num(g.level)
                .field(g.description)
                .end();
        }
    }
    w.section("proposals");
    for (const auto& p : snap.proposals) {
        w.field(p.id)
            .field(p.author)
            .field(p.target)
            .field(p.batch_kind)
            .field(to_string(p.state))
            .raw(join_set(p.concerned))
            .end();
    }
    w.section("proposal_payloads");
    for (const auto& p : snap.proposals) {
        for (const auto& fc : p.payload) {
            w.field(p.id).field(fc.field).field(fc.value).end();
        }
    }
    w.section("proposal_votes");
    for (const auto& p : snap.proposals) {
        for (const auto& [actor, decision] : p.votes) {
            w.field(p.id).field(actor).field(to_string(decision)).end();
        }
    }
    w.section("annotations");
    for (const auto& a : snap.annotations) {
        w.field(a.proposal)
            .field(a.recipient)
            .num(a.at.epoch)
            .field(a.at.display)
            .field(a.message)
            .end();
    }
    return os.str();
}

Snapshot parse_snapshot(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "ppco-snapshot 1") {
        throw Error(ErrorCode::ParseError, "missing snapshot header");
    }

    auto read_row = [](const std::string& l) {
        Row row;
        row.raw = split_escaped(l, '|');
        for (const auto& piece : row.raw) row.fields.push_back(unescape_field(piece));
        return row;
    };

    if (!std::getline(is, line)) throw Error(ErrorCode::ParseError, "missing config row");
    Row config = read_row(line);
    config.expect(4);

    Snapshot snap;
    snap.drp_schema_location = config.at(0);
    snap.redaction.threshold = static_cast<int>(parse_int(config.at(1)));
    snap.redaction.hidden_fields = config.list(2);
    snap.next_proposal = static_cast<std::uint64_t>(parse_int(config.at(3)));

    std::map<std::string, std::size_t> proposal_index;
    std::string section;
    std::size_t line_no = 2;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw Error(ErrorCode::ParseError, "bad section header");
            section = line.substr(1, line.size() - 2);
            continue;
        }
        Row row = read_row(line);
        try {
            if (section == "artifacts") {
                row.expect(15);
                ArtifactNode a;
                a.id = row.at(0);
                a.name = row.at(1);
                a.class_name = row.at(2);
                a.properties_ref = row.at(3);
                a.methods_ref = row.at(4);
                a.documentation_ref = row.at(5);
                a.description = row.at(6);
                a.created_by = row.at(7);
                a.creation_date = {parse_int(row.at(8)), row.at(9)};
                a.last_update_by = row.at(10);
                a.last_update_date = {parse_int(row.at(11)), row.at(12)};
                a.type_code = parse_int(row.at(13));
                const std::string& flag = row.at(14);
                if (flag == "yes") a.is_complete = true;
                else if (flag == "no") a.is_complete = false;
                else if (flag != "-") throw Error(ErrorCode::ParseError, "bad is_complete flag");
                if (snap.store.artifacts.count(a.id)) {
                    throw Error(ErrorCode::ParseError, "duplicate artifact '" + a.id + "'");
                }
                snap.store.artifacts.emplace(a.id, std::move(a));
            } else if (section == "edges") {
                row.expect(3);
                snap.store.edges.push_back({row.at(0), row.at(1), row.at(2)});
            } else if (section == "interactions") {
                row.expect(4);
                snap.store.interactions.push_back(
                    {row.at(0), row.at(1), interaction_kind_from_string(row.at(2)), row.at(3)});
            } else if (section == "batch_items") {
                row.expect(4);
                snap.store.batch_items.push_back(
                    {row.at(0), row.at(1), batch_category_from_kind(row.at(2)), row.at(3)});
            } else if (section == "processes") {
                row.expect(3);
                snap.store.processes[row.at(0)] = {row.at(0), row.at(1), row.list(2)};
            } else if (section == "activities") {
                row.expect(3);
                snap.store.activities[row.at(0)] = {row.at(0), row.at(1), row.list(2)};
            } else if (section == "tasks") {
                row.expect(3);
                snap.store.tasks[row.at(0)] = {row.at(0), row.at(1), row.at(2)};
            } else if (section == "flows") {
                row.expect(3);
                snap.store.info_flows.push_back({row.at(0), row.at(1), row.at(2)});
            } else if (section == "teams") {
                row.expect(4);
                snap.store.teams[row.at(0)] = {row.at(0), row.at(1), row.at(2), row.list(3)};
            } else if (section == "actors") {
                row.expect(4);
                snap.store.actors[row.at(0)] = {row.at(0), row.at(1), row.at(2), row.at(3)};
            } else if (section == "competences") {
                row.expect(3);
                snap.store.competences.push_back(
                    {row.at(0), row.at(1), static_cast<int>(parse_int(row.at(2)))});
            } else if (section == "team_interactions") {
                row.expect(3);
                snap.store.team_interactions.push_back(
                    {row.at(0), row.at(1), parse_double(row.at(2))});
            } else if (section == "viewpoints") {
                row.expect(9);
                Viewpoint vp;
                vp.id = row.at(0);
                vp.actor = row.at(1);
                vp.focus = row.at(2);
                vp.domain = row.at(3);
                vp.competence_level = static_cast<int>(parse_int(row.at(4)));
                vp.scope = row.list(5);
                vp.objective = {row.at(6), row.at(7), row.at(8)};
                if (snap.catalog.viewpoints.count(vp.id)) {
                    throw Error(ErrorCode::ParseError, "duplicate viewpoint '" + vp.id + "'");
                }
                snap.catalog.viewpoints.emplace(vp.id, std::move(vp));
            } else if (section == "vp_relationships") {
                row.expect(3);
                snap.catalog.relationships.push_back({row.at(0), row.at(1), row.at(2)});
            } else if (section == "profiles") {
                row.expect(5);
                // grants accumulate per key in row order
                const std::string& domain = row.at(0);
                int level = static_cast<int>(parse_int(row.at(1)));
                auto existing = snap.catalog.profiles.find(domain, level);
                std::vector<BatchConnexion> grants =
                    existing ? *existing : std::vector<BatchConnexion>{};
                grants.push_back(
                    {row.at(2), static_cast<int>(parse_int(row.at(3))), row.at(4)});
                snap.catalog.profiles.register_profile(domain, level, std::move(grants));
            } else if (section == "proposals") {
                row.expect(6);
                ChangeProposal p;
                p.id = row.at(0);
                p.author = row.at(1);
                p.target = row.at(2);
                p.batch_kind = row.at(3);
                p.state = proposal_state_from_string(row.at(4));
                for (const auto& actor : row.list(5)) p.concerned.insert(actor);
                snap.proposals.push_back(std::move(p));
            } else if (section == "proposal_payloads") {
                row.expect(3);
                auto it = proposal_index.find(row.at(0));
                if (it == proposal_index.end()) {
                    throw Error(ErrorCode::ParseError, "payload for unknown proposal");
                }
                snap.proposals[it->second].payload.push_back({row.at(1), row.at(2)});
            } else if (section == "proposal_votes") {
                row.expect(3);
                auto it = proposal_index.find(row.at(0));
                if (it == proposal_index.end()) {
                    throw Error(ErrorCode::ParseError, "vote for unknown proposal");
                }
                snap.proposals[it->second].votes[row.at(1)] = vote_decision_from_string(row.at(2));
            } else if (section == "annotations") {
                row.expect(5);
                snap.annotations.push_back(
                    {row.at(0), row.at(1), {parse_int(row.at(2)), row.at(3)}, row.at(4)});
            } else {
                throw Error(ErrorCode::ParseError, "unknown section '" + section + "'");
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ReferentialIntegrity) {
                throw Error(e.code(), std::string(e.what()) + " at line " +
                                          std::to_string(line_no));
            }
            throw;
        }
        if (section == "proposals" && !snap.proposals.empty()) {
            proposal_index[snap.proposals.back().id] = snap.proposals.size() - 1;
        }
    }

    snap.validate();
    return snap;
}

void save_snapshot(const Snapshot& snap, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    os << serialize_snapshot(snap);
    if (!os) throw Error(ErrorCode::Io, "write failed for '" + path + "'");
}

Snapshot load_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_snapshot(buf.str());
}

}  // namespace ppco
