#include "ppco/model.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ppco {

std::int64_t utc_epoch(int year, int month, int day, int hour, int minute, int second) {
    // days-from-civil (Howard Hinnant's algorithm), valid far beyond our needs
    auto y = static_cast<std::int64_t>(year) - (month <= 2 ? 1 : 0);
    auto era = (y >= 0 ? y : y - 399) / 400;
    auto yoe = static_cast<unsigned>(y - era * 400);
    auto doy = static_cast<unsigned>((153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1);
    auto doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    auto days = era * 146097 + static_cast<std::int64_t>(doe) - 719468;
    return days * 86400 + hour * 3600 + minute * 60 + second;
}

const char* to_string(InteractionKind kind) {
    switch (kind) {
        case InteractionKind::Space: return "Space";
        case InteractionKind::Energy: return "Energy";
        case InteractionKind::Material: return "Material";
        case InteractionKind::Information: return "Information";
    }
    return "Space";
}

InteractionKind interaction_kind_from_string(const std::string& s) {
    if (s == "Space") return InteractionKind::Space;
    if (s == "Energy") return InteractionKind::Energy;
    if (s == "Material") return InteractionKind::Material;
    if (s == "Information") return InteractionKind::Information;
    throw Error(ErrorCode::ParseError, "unknown interaction kind '" + s + "'");
}

const char* batch_kind_of(BatchItemCategory category) {
    switch (category) {
        case BatchItemCategory::Function: return "Function";
        case BatchItemCategory::Behavior: return "Behavior";
        case BatchItemCategory::Flow: return "Flows";
        case BatchItemCategory::Geometry: return "Geometry-Form";
        case BatchItemCategory::Constraint: return "Constraints";
        case BatchItemCategory::Requirement: return "Requirements";
    }
    return "Function";
}

BatchItemCategory batch_category_from_kind(const std::string& kind) {
    if (kind == "Function") return BatchItemCategory::Function;
    if (kind == "Behavior") return BatchItemCategory::Behavior;
    if (kind == "Flows") return BatchItemCategory::Flow;
    if (kind == "Geometry-Form") return BatchItemCategory::Geometry;
    if (kind == "Constraints") return BatchItemCategory::Constraint;
    if (kind == "Requirements") return BatchItemCategory::Requirement;
    throw Error(ErrorCode::ParseError, "unknown batch item kind '" + kind + "'");
}

const std::string& Store::add_artifact(ArtifactNode node) {
    if (artifacts.count(node.id)) {
        throw Error(ErrorCode::DuplicateId, "artifact '" + node.id + "' already stored");
    }
    auto [it, ok] = artifacts.emplace(node.id, std::move(node));
    (void)ok;
    return it->first;
}

const AssemblyEdge& Store::add_assembly_edge(const std::string& parent, const std::string& child,
                                             const std::string& note) {
    if (!has_artifact(parent)) throw Error(ErrorCode::UnknownId, "parent '" + parent + "'");
    if (!has_artifact(child)) throw Error(ErrorCode::UnknownId, "child '" + child + "'");
    if (parent == child) {
        throw Error(ErrorCode::CycleDetected, "self-loop on '" + parent + "'");
    }
    for (const auto& e : edges) {
        if (e.parent == parent && e.child == child) return e;
    }
    // the edge closes a cycle iff parent is already below child
    if (reachable(child, parent)) {
        throw Error(ErrorCode::CycleDetected,
                    "edge " + parent + " -> " + child + " would close a cycle");
    }
    edges.push_back(AssemblyEdge{parent, child, note});
    return edges.back();
}

const Interaction& Store::add_interaction(const std::string& a, const std::string& b,
                                          InteractionKind kind, const std::string& note) {
    if (!has_artifact(a)) throw Error(ErrorCode::UnknownId, "artifact '" + a + "'");
    if (!has_artifact(b)) throw Error(ErrorCode::UnknownId, "artifact '" + b + "'");
    if (a == b) throw Error(ErrorCode::SelfInteraction, "interaction of '" + a + "' with itself");
    const std::string& lo = std::min(a, b);
    const std::string& hi = std::max(a, b);
    for (const auto& ia : interactions) {
        if (ia.a == lo && ia.b == hi && ia.kind == kind) return ia;
    }
    interactions.push_back(Interaction{lo, hi, kind, note});
    return interactions.back();
}

const BatchItem& Store::add_batch_item(BatchItem item) {
    if (!has_artifact(item.owner)) {
        throw Error(ErrorCode::UnknownId, "batch item owner '" + item.owner + "'");
    }
    for (const auto& b : batch_items) {
        if (b.id == item.id) throw Error(ErrorCode::DuplicateId, "batch item '" + item.id + "'");
    }
    batch_items.push_back(std::move(item));
    return batch_items.back();
}

void Store::add_team_interaction(const std::string& team_a, const std::string& team_b,
                                 double frequency) {
    if (!teams.count(team_a)) throw Error(ErrorCode::UnknownId, "team '" + team_a + "'");
    if (!teams.count(team_b)) throw Error(ErrorCode::UnknownId, "team '" + team_b + "'");
    if (team_a == team_b) {
        throw Error(ErrorCode::ReferentialIntegrity, "team self-interaction '" + team_a + "'");
    }
    const std::string& lo = std::min(team_a, team_b);
    const std::string& hi = std::max(team_a, team_b);
    for (auto& ti : team_interactions) {
        if (ti.a == lo && ti.b == hi) {
            ti.frequency = frequency;
            return;
        }
    }
    team_interactions.push_back(TeamInteraction{lo, hi, frequency});
}

const ArtifactNode& Store::artifact(const std::string& id) const {
    auto it = artifacts.find(id);
    if (it == artifacts.end()) throw Error(ErrorCode::UnknownId, "artifact '" + id + "'");
    return it->second;
}

std::vector<std::string> Store::children_of(const std::string& id) const {
    std::vector<std::string> out;
    for (const auto& e : edges) {
        if (e.parent == id) out.push_back(e.child);
    }
    return out;
}

std::vector<std::string> Store::decomposition(const std::string& root) const {
    if (!has_artifact(root)) throw Error(ErrorCode::UnknownId, "artifact '" + root + "'");
    std::vector<std::string> order;
    std::set<std::string> seen;
    std::vector<std::string> stack{root};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        order.push_back(cur);
        auto kids = children_of(cur);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return order;
}

std::vector<std::string> Store::ancestors_of(const std::string& id) const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::deque<std::string> queue{id};
    while (!queue.empty()) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const auto& e : edges) {
            if (e.child == cur && seen.insert(e.parent).second) {
                out.push_back(e.parent);
                queue.push_back(e.parent);
            }
        }
    }
    return out;
}

bool Store::is_root(const std::string& id) const {
    for (const auto& e : edges) {
        if (e.child == id) return false;
    }
    return true;
}

std::vector<std::string> Store::team_order() const {
    std::vector<std::string> ids;
    for (const auto& [id, t] : teams) ids.push_back(id);
    return ids;  // std::map is already sorted
}

std::vector<std::vector<double>> Store::team_matrix() const {
    auto order = team_order();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
    std::vector<std::vector<double>> m(order.size(), std::vector<double>(order.size(), 0.0));
    for (const auto& ti : team_interactions) {
        auto i = index.at(ti.a);
        auto j = index.at(ti.b);
        m[i][j] = ti.frequency;
        m[j][i] = ti.frequency;
    }
    return m;
}

bool Store::reachable(const std::string& from, const std::string& to) const {
    std::set<std::string> seen;
    std::vector<std::string> stack{from};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        if (cur == to) return true;
        if (!seen.insert(cur).second) continue;
        for (const auto& e : edges) {
            if (e.parent == cur) stack.push_back(e.child);
        }
    }
    return false;
}

void Store::validate() const {
    auto fail = [](const std::string& msg) { throw Error(ErrorCode::ReferentialIntegrity, msg); };

    for (const auto& [id, node] : artifacts) {
        if (id != node.id) fail("artifact key/id mismatch for '" + id + "'");
        if (node.creation_date.epoch > node.last_update_date.epoch) {
            fail("artifact '" + id + "' updated before creation");
        }
        if (node.is_complete.has_value() != is_root(id)) {
            fail("artifact '" + id + "': is_complete must be present exactly on roots");
        }
    }

    std::set<std::pair<std::string, std::string>> edge_pairs;
    for (const auto& e : edges) {
        if (!has_artifact(e.parent)) fail("edge parent '" + e.parent + "' unknown");
        if (!has_artifact(e.child)) fail("edge child '" + e.child + "' unknown");
        if (e.parent == e.child) fail("self-loop on '" + e.parent + "'");
        if (!edge_pairs.insert({e.parent, e.child}).second) {
            fail("duplicate edge " + e.parent + " -> " + e.child);
        }
    }
    // acyclicity by repeated leaf stripping
    {
        std::map<std::string, int> indeg;
        for (const auto& [id, n] : artifacts) indeg[id] = 0;
        for (const auto& e : edges) indeg[e.child]++;
        std::deque<std::string> queue;
        for (const auto& [id, d] : indeg) {
            if (d == 0) queue.push_back(id);
        }
        std::size_t removed = 0;
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            ++removed;
            for (const auto& e : edges) {
                if (e.parent == cur && --indeg[e.child] == 0) queue.push_back(e.child);
            }
        }
        if (removed != artifacts.size()) fail("decomposition graph contains a cycle");
    }

    for (const auto& ia : interactions) {
        if (!has_artifact(ia.a) || !has_artifact(ia.b)) fail("interaction endpoint unknown");
        if (!(ia.a < ia.b)) fail("interaction not stored canonically");
    }
    for (const auto& b : batch_items) {
        if (!has_artifact(b.owner)) fail("batch item '" + b.id + "' owner unknown");
    }

    for (const auto& [pid, proc] : processes) {
        if (proc.activities.empty()) fail("process '" + pid + "' has no activity");
        for (const auto& aid : proc.activities) {
            if (!activities.count(aid)) fail("process '" + pid + "' activity '" + aid + "' unknown");
        }
    }
    std::map<std::string, std::string> task_process;  // task id -> process id
    for (const auto& [pid, proc] : processes) {
        for (const auto& aid : proc.activities) {
            for (const auto& tid : activities.at(aid).tasks) {
                if (!tasks.count(tid)) fail("activity '" + aid + "' task '" + tid + "' unknown");
                task_process[tid] = pid;
            }
        }
    }
    for (const auto& f : info_flows) {
        auto from = task_process.find(f.from_task);
        auto to = task_process.find(f.to_task);
        if (from == task_process.end() || to == task_process.end()) {
            fail("info flow endpoint is not a process task");
        }
        if (from->second != to->second) fail("info flow crosses process trees");
    }
    // task graph acyclicity, per process
    {
        std::map<std::string, int> indeg;
        for (const auto& [tid, p] : task_process) indeg[tid] = 0;
        for (const auto& f : info_flows) indeg[f.to_task]++;
        std::deque<std::string> queue;
        for (const auto& [tid, d] : indeg) {
            if (d == 0) queue.push_back(tid);
        }
        std::size_t removed = 0;
        while (!queue.empty()) {
            std::string cur = queue.front();
            queue.pop_front();
            ++removed;
            for (const auto& f : info_flows) {
                if (f.from_task == cur && --indeg[f.to_task] == 0) queue.push_back(f.to_task);
            }
        }
        if (removed != indeg.size()) fail("task graph contains a cycle");
    }

    for (const auto& [tid, team] : teams) {
        if (!team.responsible_for.empty() && !has_artifact(team.responsible_for)) {
            fail("team '" + tid + "' responsible for unknown artifact");
        }
        for (const auto& m : team.members) {
            if (!actors.count(m)) fail("team '" + tid + "' member '" + m + "' unknown");
        }
    }
    for (const auto& [aid, actor] : actors) {
        if (!teams.count(actor.team)) fail("actor '" + aid + "' team '" + actor.team + "' unknown");
    }
    for (const auto& c : competences) {
        if (!actors.count(c.actor)) fail("competence actor '" + c.actor + "' unknown");
        if (c.level < 1) fail("competence level below 1 for '" + c.actor + "'");
    }
    for (const auto& ti : team_interactions) {
        if (!teams.count(ti.a) || !teams.count(ti.b)) fail("team interaction endpoint unknown");
        if (!(ti.a < ti.b)) fail("team interaction not stored canonically");
        if (ti.frequency < 0) fail("negative team interaction frequency");
    }
}

}  // namespace ppco
