#include "pg/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace pg {

const char* to_string(Player p) {
    return p == Player::even ? "even" : "odd";
}

ParityGame ParityGame::build(const std::vector<VertexRecord>& records) {
    const std::size_t n = records.size();
    ParityGame g;
    g.owners_.reserve(n);
    g.priorities_.reserve(n);

    // Validate and canonicalise the successor lists.
    std::vector<std::vector<VertexId>> succs(n);
    std::size_t edge_count = 0;
    for (VertexId v = 0; v < n; v++) {
        const VertexRecord& r = records[v];
        if (r.priority < 0) throw std::invalid_argument("priorities must be nonnegative");
        if (r.successors.empty()) throw EmptySuccessors(v);
        for (VertexId w : r.successors) {
            if (w >= n) throw DanglingEdge(v, w);
        }
        std::vector<VertexId> s = r.successors;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        edge_count += s.size();
        succs[v] = std::move(s);
        g.owners_.push_back(r.owner);
        g.priorities_.push_back(r.priority);
    }

    g.succ_offsets_.assign(n + 1, 0);
    g.succ_.reserve(edge_count);
    for (VertexId v = 0; v < n; v++) {
        g.succ_.insert(g.succ_.end(), succs[v].begin(), succs[v].end());
        g.succ_offsets_[v + 1] = static_cast<std::uint32_t>(g.succ_.size());
    }

    // Exact transpose; filling in ascending source order keeps the
    // predecessor lists sorted as well.
    g.pred_offsets_.assign(n + 1, 0);
    for (VertexId w : g.succ_) g.pred_offsets_[w + 1]++;
    for (std::size_t i = 1; i <= n; i++) g.pred_offsets_[i] += g.pred_offsets_[i - 1];
    g.pred_.resize(edge_count);
    std::vector<std::uint32_t> cursor(g.pred_offsets_.begin(), g.pred_offsets_.end() - 1);
    for (VertexId v = 0; v < n; v++) {
        for (VertexId w : g.successors(v)) g.pred_[cursor[w]++] = v;
    }

    std::vector<int> prios = g.priorities_;
    std::sort(prios.begin(), prios.end());
    g.distinct_priorities_ = std::unique(prios.begin(), prios.end()) - prios.begin();
    return g;
}

GameView restrict_to(const GameView& g, const VertexSet& keep) {
    if (keep.empty()) throw EmptyRestriction();
    assert(keep.is_subset_of(g.live()));
    return GameView(g.game(), g.live() & keep);
}

GameView remove(const GameView& g, const VertexSet& drop) {
    assert(drop.is_subset_of(g.live()));
    return GameView(g.game(), g.live() - drop);
}

std::optional<VertexId> first_nontotal_vertex(const GameView& g) {
    for (VertexId v : g.live()) {
        bool has_live = false;
        for (VertexId w : g.game().successors(v)) {
            if (g.contains(w)) {
                has_live = true;
                break;
            }
        }
        if (!has_live) return v;
    }
    return std::nullopt;
}

bool is_total(const GameView& g) {
    return !first_nontotal_vertex(g).has_value();
}

int max_priority(const GameView& g) {
    if (g.empty()) throw EmptyGame();
    int m = 0;
    bool first = true;
    for (VertexId v : g.live()) {
        int p = g.game().priority(v);
        if (first || p > m) m = p;
        first = false;
    }
    return m;
}

VertexSet vertices_with_priority(const GameView& g, int m) {
    if (g.empty()) throw EmptyGame();
    VertexSet out(g.game().num_vertices());
    for (VertexId v : g.live()) {
        if (g.game().priority(v) == m) out.insert(v);
    }
    return out;
}

}  // namespace pg
