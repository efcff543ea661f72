#include "beadcalc/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace beadcalc {

int BeadGraph::add_trivalent() {
    vertices_.push_back({VertexKind::Trivalent, ""});
    return vertex_count() - 1;
}

int BeadGraph::add_leg(const std::string& color) {
    vertices_.push_back({VertexKind::Leg, color});
    return vertex_count() - 1;
}

void BeadGraph::add_edge(int tv, int ts, int hv, int hs, LaurentPoly bead) {
    edges_.push_back({tv, ts, hv, hs, std::move(bead)});
}

int BeadGraph::trivalent_count() const {
    int c = 0;
    for (const auto& v : vertices_)
        if (v.kind == VertexKind::Trivalent) c++;
    return c;
}

int BeadGraph::leg_count() const {
    return vertex_count() - trivalent_count();
}

bool BeadGraph::is_beadless() const {
    for (const auto& e : edges_)
        if (!e.bead.is_one()) return false;
    return true;
}

void BeadGraph::flip_vertex_orientation(int vertex) {
    if (vertex < 0 || vertex >= vertex_count() || vertices_[vertex].kind != VertexKind::Trivalent)
        throw Error("flip_vertex_orientation: not a trivalent vertex");
    for (auto& e : edges_) {
        if (e.tail_vertex == vertex && e.tail_slot < 2) e.tail_slot = 1 - e.tail_slot;
        if (e.head_vertex == vertex && e.head_slot < 2) e.head_slot = 1 - e.head_slot;
    }
}

void BeadGraph::validate() const {
    std::vector<std::array<int, 3>> used(vertex_count(), {0, 0, 0});
    auto touch = [&](int v, int s, const char* what) {
        if (v < 0 || v >= vertex_count()) throw Error(std::string(what) + ": vertex out of range");
        int nslots = vertices_[v].kind == VertexKind::Trivalent ? 3 : 1;
        if (s < 0 || s >= nslots) throw Error(std::string(what) + ": slot out of range");
        used[v][s]++;
    };
    for (const auto& e : edges_) {
        touch(e.tail_vertex, e.tail_slot, "edge tail");
        touch(e.head_vertex, e.head_slot, "edge head");
    }
    for (int v = 0; v < vertex_count(); v++) {
        int nslots = vertices_[v].kind == VertexKind::Trivalent ? 3 : 1;
        for (int s = 0; s < nslots; s++)
            if (used[v][s] != 1)
                throw Error("vertex " + std::to_string(v) + " slot " + std::to_string(s) +
                            " used " + std::to_string(used[v][s]) + " times (expected 1)");
    }
}

Rational BeadGraph::vassiliev_degree() const {
    return Rational(vertex_count(), 2);
}

int BeadGraph::euler_degree() const {
    std::vector<int> deg(vertex_count(), 0);
    std::vector<bool> edge_alive(edges_.size(), true);
    for (const auto& e : edges_) {
        deg[e.tail_vertex]++;
        deg[e.head_vertex]++;
    }
    // iterated shaving of univalent vertices
    std::deque<int> q;
    std::vector<bool> dead(vertex_count(), false);
    for (int v = 0; v < vertex_count(); v++)
        if (deg[v] == 1) q.push_back(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (dead[v] || deg[v] != 1) continue;
        dead[v] = true;
        for (size_t i = 0; i < edges_.size(); i++) {
            if (!edge_alive[i]) continue;
            const Edge& e = edges_[i];
            if (e.tail_vertex == v || e.head_vertex == v) {
                edge_alive[i] = false;
                deg[e.tail_vertex]--;
                deg[e.head_vertex]--;
                int other = (e.tail_vertex == v) ? e.head_vertex : e.tail_vertex;
                if (!dead[other] && deg[other] == 1) q.push_back(other);
                break;  // a univalent vertex has exactly one live edge
            }
        }
    }
    int count = 0;
    for (int v = 0; v < vertex_count(); v++)
        if (!dead[v] && deg[v] == 3) count++;
    return count;
}

int BeadGraph::loop_degree() const {
    std::vector<int> parent(vertex_count());
    for (int v = 0; v < vertex_count(); v++) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges_) parent[find(e.tail_vertex)] = find(e.head_vertex);
    std::set<int> roots;
    for (int v = 0; v < vertex_count(); v++) roots.insert(find(v));
    return edge_count() - vertex_count() + static_cast<int>(roots.size());
}

// ---------------------------------------------------------------------------
// Canonicalization.
//
// The canonical form is the lexicographically least encoding over all vertex
// orderings compatible with an iterated color refinement of the vertices
// (the refinement is isomorphism-invariant, so restricting to compatible
// orderings is sound and prunes the search). Edges are re-oriented from
// lower to higher position with the bead involuted on reversal; self-loops
// branch over both directions. The AS sign is the parity of each stored
// cyclic order against the sorted flag descriptors; if the minimal encoding
// is reached with both signs the graph vanishes (sign 0).
// ---------------------------------------------------------------------------

namespace {

struct FlagRef {
    int edge = -1;
    int end = 0;  // 0 = tail, 1 = head (in stored orientation)
};

struct CanonSearcher {
    const BeadGraph& g;
    const CanonicalizeOptions& opt;
    int n;
    int nedges;

    std::vector<int> class_of;                      // vertex -> refined class
    std::vector<int> class_of_pos;                  // position -> class
    int trivalent_total = 0;
    std::vector<std::string> leg_colors_by_pos;     // positions trivalent_total..n-1

    std::vector<std::array<FlagRef, 3>> flag_at;    // vertex -> slot -> flag
    std::vector<std::vector<int>> incident;         // vertex -> edge ids, loops once
    std::vector<long> expo;                         // edge -> stored exponent

    std::vector<int> pos_of, vtx_at;
    std::vector<std::vector<int>> cur_blocks;
    std::optional<std::vector<std::vector<int>>> best_struct;
    std::optional<std::vector<std::array<long, 3>>> best_full;
    bool seen_plus = false, seen_minus = false;
    long leaf_guard = 0;

    CanonSearcher(const BeadGraph& graph, const CanonicalizeOptions& options)
        : g(graph), opt(options), n(graph.vertex_count()), nedges(graph.edge_count()) {}

    void prepare() {
        g.validate();
        if (n > opt.max_vertices)
            throw Error("canonicalize: graph exceeds the configured vertex bound (" +
                        std::to_string(opt.max_vertices) + ")");
        if (opt.holonomy && !g.is_legless())
            throw Error("canonicalize: holonomy normal form requires a legless graph");

        expo.resize(nedges);
        for (int e = 0; e < nedges; e++) {
            const LaurentPoly& b = g.edges()[e].bead;
            if (!b.is_unit_monomial())
                throw Error("canonicalize: bead '" + b.str() +
                            "' is not a pure power t^k (normalize first)");
            expo[e] = b.monomial_exponent();
        }

        flag_at.assign(n, {});
        incident.assign(n, {});
        for (int e = 0; e < nedges; e++) {
            const Edge& ed = g.edges()[e];
            flag_at[ed.tail_vertex][ed.tail_slot] = {e, 0};
            flag_at[ed.head_vertex][ed.head_slot] = {e, 1};
            incident[ed.tail_vertex].push_back(e);
            if (ed.head_vertex != ed.tail_vertex) incident[ed.head_vertex].push_back(e);
        }

        refine_classes();
    }

    // Iterated color refinement; class keys order trivalent vertices before
    // legs and legs by color, so the key layout is isomorphism-invariant.
    void refine_classes() {
        std::vector<std::string> key(n);
        for (int v = 0; v < n; v++) {
            const Vertex& vx = g.vertices()[v];
            key[v] = (vx.kind == VertexKind::Trivalent) ? "T" : "L:" + vx.color;
        }
        for (int round = 0; round < 3; round++) {
            std::vector<std::string> next(n);
            for (int v = 0; v < n; v++) {
                std::vector<std::string> nb;
                for (int e : incident[v]) {
                    const Edge& ed = g.edges()[e];
                    bool loop = ed.tail_vertex == ed.head_vertex;
                    int other = loop ? v : (ed.tail_vertex == v ? ed.head_vertex : ed.tail_vertex);
                    long kk = opt.holonomy ? 0 : std::abs(expo[e]);
                    nb.push_back((loop ? "o" : "e") + std::to_string(kk) + "|" + key[other]);
                }
                std::sort(nb.begin(), nb.end());
                next[v] = key[v] + "{";
                for (auto& s : nb) next[v] += s + ";";
                next[v] += "}";
            }
            key = std::move(next);
        }
        // classes sorted by key; positions laid out class by class
        std::map<std::string, std::vector<int>> groups;
        for (int v = 0; v < n; v++) groups[key[v]].push_back(v);
        class_of.assign(n, -1);
        class_of_pos.assign(n, -1);
        int cls = 0, pos = 0;
        trivalent_total = g.trivalent_count();
        leg_colors_by_pos.clear();
        for (auto& [k, vs] : groups) {
            for (int v : vs) {
                class_of[v] = cls;
                class_of_pos[pos++] = cls;
            }
            cls++;
        }
        // sanity: the key ordering puts "L:..." after "T..." only if classes
        // are grouped kind-first; enforce the layout explicitly instead
        std::vector<std::pair<std::pair<int, std::string>, std::vector<int>>> ordered;
        for (auto& [k, vs] : groups) {
            const Vertex& vx = g.vertices()[vs[0]];
            int kindrank = (vx.kind == VertexKind::Trivalent) ? 0 : 1;
            ordered.push_back({{kindrank, k}, vs});
        }
        std::sort(ordered.begin(), ordered.end());
        class_of.assign(n, -1);
        class_of_pos.assign(n, -1);
        cls = 0;
        pos = 0;
        for (auto& [k, vs] : ordered) {
            for (int v : vs) {
                class_of[v] = cls;
                class_of_pos[pos] = cls;
                if (g.vertices()[vs[0]].kind == VertexKind::Leg)
                    leg_colors_by_pos.push_back(g.vertices()[vs[0]].color);
                pos++;
            }
            cls++;
        }
    }

    void run() {
        pos_of.assign(n, -1);
        vtx_at.assign(n, -1);
        cur_blocks.clear();
        place(0);
    }

    void place(int p) {
        if (p == n) {
            leaf();
            return;
        }
        int want_class = class_of_pos[p];
        for (int v = 0; v < n; v++) {
            if (pos_of[v] != -1 || class_of[v] != want_class) continue;
            pos_of[v] = p;
            vtx_at[p] = v;
            std::vector<int> block;
            for (int e : incident[v]) {
                const Edge& ed = g.edges()[e];
                int other = (ed.tail_vertex == v && ed.head_vertex == v)
                                ? v
                                : (ed.tail_vertex == v ? ed.head_vertex : ed.tail_vertex);
                if (pos_of[other] != -1) block.push_back(pos_of[other]);
            }
            std::sort(block.begin(), block.end());

            bool descend = true;
            if (best_struct) {
                const auto& ref = (*best_struct)[p];
                if (block > ref) {
                    descend = false;
                } else if (block < ref) {
                    // everything below beats the old best
                    best_struct.reset();
                    best_full.reset();
                    seen_plus = seen_minus = false;
                }
            }
            if (descend) {
                cur_blocks.push_back(std::move(block));
                place(p + 1);
                cur_blocks.pop_back();
            }
            pos_of[v] = -1;
            vtx_at[p] = -1;
        }
    }

    struct LeafEdge {
        int a, b;       // positions, a <= b
        long k;         // exponent read from a to b (loops: per branch)
        int edge;       // original index
        bool flipped;   // stored orientation reversed
    };

    void leaf() {
        if (++leaf_guard > 50'000'000) throw Error("canonicalize: search too large");
        if (!best_struct) best_struct = cur_blocks;

        std::vector<LeafEdge> base(nedges);
        std::vector<int> loops;
        for (int e = 0; e < nedges; e++) {
            const Edge& ed = g.edges()[e];
            int pa = pos_of[ed.tail_vertex], pb = pos_of[ed.head_vertex];
            if (pa == pb) {
                base[e] = {pa, pb, expo[e], e, false};
                loops.push_back(e);
            } else if (pa < pb) {
                base[e] = {pa, pb, expo[e], e, false};
            } else {
                base[e] = {pb, pa, -expo[e], e, true};
            }
        }
        if (opt.holonomy) apply_holonomy(base);

        const size_t nloops = loops.size();
        for (size_t mask = 0; mask < (size_t{1} << nloops); mask++) {
            std::vector<LeafEdge> cur = base;
            for (size_t i = 0; i < nloops; i++)
                if (mask & (size_t{1} << i)) {
                    cur[loops[i]].k = -cur[loops[i]].k;
                    cur[loops[i]].flipped = true;
                }
            std::vector<int> order(nedges);
            for (int i = 0; i < nedges; i++) order[i] = i;
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                return std::tie(cur[x].b, cur[x].a, cur[x].k) < std::tie(cur[y].b, cur[y].a, cur[y].k);
            });
            std::vector<std::array<long, 3>> full(nedges);
            std::vector<int> sorted_idx(nedges);
            for (int i = 0; i < nedges; i++) {
                full[i] = {static_cast<long>(cur[order[i]].a), static_cast<long>(cur[order[i]].b),
                           cur[order[i]].k};
                sorted_idx[order[i]] = i;
            }

            if (best_full) {
                if (full > *best_full) continue;
                if (full < *best_full) {
                    seen_plus = seen_minus = false;
                }
            }
            int sign = leaf_sign(cur, sorted_idx);
            best_full = std::move(full);
            (sign > 0 ? seen_plus : seen_minus) = true;
        }
    }

    // One holonomy move per trivalent vertex: the bead of each incident edge
    // is multiplied by t^(+1) if the edge leaves the vertex and t^(-1) if it
    // enters. Zeroes the exponent of every spanning-forest edge (processing
    // tree vertices by increasing depth), leaving the H^1 class on the rest.
    void apply_holonomy(std::vector<LeafEdge>& cur) {
        // adjacency by position: (neighbor pos, direction-normalized k, edge)
        std::vector<std::vector<std::array<long, 3>>> adj(n);
        for (int e = 0; e < nedges; e++) {
            if (cur[e].a == cur[e].b) continue;
            adj[cur[e].a].push_back({static_cast<long>(cur[e].b), cur[e].k, e});
            adj[cur[e].b].push_back({static_cast<long>(cur[e].a), cur[e].k, e});
        }
        bool descending = opt.tree_policy == TreePolicy::BfsHighRoot;
        for (auto& lst : adj) {
            std::sort(lst.begin(), lst.end());
            if (descending) std::reverse(lst.begin(), lst.end());
        }

        std::vector<int> parent_edge(n, -1), order;
        std::vector<bool> seen(n, false);
        auto roots = [&](int i) { return descending ? n - 1 - i : i; };
        for (int ri = 0; ri < n; ri++) {
            int root = roots(ri);
            if (seen[root]) continue;
            seen[root] = true;
            if (opt.tree_policy == TreePolicy::DfsLowRoot) {
                std::vector<int> stack{root};
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (auto it = adj[u].rbegin(); it != adj[u].rend(); ++it) {
                        int w = static_cast<int>((*it)[0]);
                        if (seen[w]) continue;
                        seen[w] = true;
                        parent_edge[w] = static_cast<int>((*it)[2]);
                        order.push_back(w);
                        stack.push_back(w);
                    }
                }
            } else {
                std::deque<int> q{root};
                while (!q.empty()) {
                    int u = q.front();
                    q.pop_front();
                    for (const auto& nb : adj[u]) {
                        int w = static_cast<int>(nb[0]);
                        if (seen[w]) continue;
                        seen[w] = true;
                        parent_edge[w] = static_cast<int>(nb[2]);
                        order.push_back(w);
                        q.push_back(w);
                    }
                }
            }
        }

        // exponents in stored orientation for the move bookkeeping
        std::vector<long> stored(nedges);
        for (int e = 0; e < nedges; e++) stored[e] = cur[e].flipped ? -cur[e].k : cur[e].k;

        for (int p : order) {
            int e = parent_edge[p];
            int v = vtx_at[p];
            const Edge& ed = g.edges()[e];
            int eps = (ed.tail_vertex == v) ? +1 : -1;
            long m = -stored[e] * eps;
            if (m == 0) continue;
            for (int f : incident[v]) {
                const Edge& fe = g.edges()[f];
                if (fe.tail_vertex == v) stored[f] += m;
                if (fe.head_vertex == v) stored[f] -= m;
            }
        }
        for (int e = 0; e < nedges; e++) cur[e].k = cur[e].flipped ? -stored[e] : stored[e];
    }

    int leaf_sign(const std::vector<LeafEdge>& cur, const std::vector<int>& sorted_idx) {
        int sign = 1;
        for (int v = 0; v < n; v++) {
            if (g.vertices()[v].kind != VertexKind::Trivalent) continue;
            std::array<std::pair<int, int>, 3> d;
            for (int s = 0; s < 3; s++) {
                const FlagRef& f = flag_at[v][s];
                int role = f.end ^ (cur[f.edge].flipped ? 1 : 0);
                d[s] = {sorted_idx[f.edge], role};
            }
            int inv = 0;
            for (int i = 0; i < 3; i++)
                for (int j = i + 1; j < 3; j++)
                    if (d[i] > d[j]) inv++;
            if (inv % 2) sign = -sign;
        }
        return sign;
    }
};

}  // namespace

CanonicalForm BeadGraph::canonicalize(const CanonicalizeOptions& opt) const {
    CanonicalForm out;
    if (vertex_count() == 0) {
        if (edge_count() != 0) throw Error("edges without vertices");
        out.sign = 1;
        return out;
    }
    CanonSearcher s(*this, opt);
    s.prepare();
    s.run();

    out.key.trivalent_count = s.trivalent_total;
    out.key.leg_colors = s.leg_colors_by_pos;
    out.key.edges = *s.best_full;
    out.sign = (s.seen_plus && s.seen_minus) ? 0 : (s.seen_plus ? 1 : -1);
    return out;
}

BeadGraph CanonicalForm::graph() const {
    BeadGraph g;
    int n = key.trivalent_count + static_cast<int>(key.leg_colors.size());
    for (int i = 0; i < key.trivalent_count; i++) g.add_trivalent();
    for (const auto& c : key.leg_colors) g.add_leg(c);

    // flags at each vertex sorted by (canonical edge index, role): slot order
    // is exactly that sorted order, so the rebuilt orientation state is the
    // sign +1 reference
    std::vector<std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>> at(n);
    for (size_t i = 0; i < key.edges.size(); i++) {
        int a = static_cast<int>(key.edges[i][0]);
        int b = static_cast<int>(key.edges[i][1]);
        at[a].push_back({{static_cast<int>(i), 0}, {static_cast<int>(i), 0}});
        at[b].push_back({{static_cast<int>(i), 1}, {static_cast<int>(i), 1}});
    }
    std::vector<std::array<int, 2>> slot_of(key.edges.size(), {-1, -1});
    for (int v = 0; v < n; v++) {
        std::sort(at[v].begin(), at[v].end());
        for (size_t s = 0; s < at[v].size(); s++) {
            auto [edge, role] = at[v][s].second;
            slot_of[edge][role] = static_cast<int>(s);
        }
    }
    for (size_t i = 0; i < key.edges.size(); i++) {
        int a = static_cast<int>(key.edges[i][0]);
        int b = static_cast<int>(key.edges[i][1]);
        g.add_edge(a, slot_of[i][0], b, slot_of[i][1], LaurentPoly::t(key.edges[i][2]));
    }
    g.validate();
    return g;
}

// ---------------------------------------------------------------------------
// Automorphisms: brute force over class-preserving vertex bijections and
// compatible edge bijections.
// ---------------------------------------------------------------------------

namespace {

void collect_edge_maps(const BeadGraph& g, const std::vector<int>& vmap,
                       std::vector<GraphAutomorphism>& out) {
    int nedges = g.edge_count();
    // group edges by unordered endpoint pair
    std::map<std::pair<int, int>, std::vector<int>> groups, igroups;
    for (int e = 0; e < nedges; e++) {
        const Edge& ed = g.edges()[e];
        int u = std::min(ed.tail_vertex, ed.head_vertex);
        int v = std::max(ed.tail_vertex, ed.head_vertex);
        groups[{u, v}].push_back(e);
        int mu = std::min(vmap[ed.tail_vertex], vmap[ed.head_vertex]);
        int mv = std::max(vmap[ed.tail_vertex], vmap[ed.head_vertex]);
        igroups[{mu, mv}].push_back(e);
    }
    // target groups must exist with matching sizes
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;  // (source edges, target edges)
    for (const auto& [key, src] : igroups) {
        auto it = groups.find(key);
        if (it == groups.end() || it->second.size() != src.size()) return;
        pairs.push_back({src, it->second});
    }

    // per group: enumerate bijections src -> tgt with bead/orientation checks
    struct Choice {
        int src_edge, tgt_edge;
        bool reversed;
    };
    std::vector<std::vector<Choice>> partial{{}};
    for (auto& [src, tgt] : pairs) {
        std::vector<int> perm(tgt.size());
        for (size_t i = 0; i < perm.size(); i++) perm[i] = static_cast<int>(i);
        std::vector<std::vector<Choice>> grown;
        std::sort(perm.begin(), perm.end());
        do {
            // check this assignment of src[i] -> tgt[perm[i]]
            std::vector<std::vector<Choice>> local{{}};
            bool ok = true;
            for (size_t i = 0; i < src.size() && ok; i++) {
                const Edge& es = g.edges()[src[i]];
                const Edge& et = g.edges()[tgt[perm[i]]];
                bool sloop = es.tail_vertex == es.head_vertex;
                std::vector<Choice> opts;
                if (sloop) {
                    if (et.bead == es.bead) opts.push_back({src[i], tgt[perm[i]], false});
                    if (et.bead == es.bead.involute()) opts.push_back({src[i], tgt[perm[i]], true});
                } else {
                    if (vmap[es.tail_vertex] == et.tail_vertex) {
                        if (et.bead == es.bead) opts.push_back({src[i], tgt[perm[i]], false});
                    } else {
                        if (et.bead == es.bead.involute()) opts.push_back({src[i], tgt[perm[i]], true});
                    }
                }
                if (opts.empty()) {
                    ok = false;
                    break;
                }
                std::vector<std::vector<Choice>> next;
                for (auto& base : local)
                    for (auto& o : opts) {
                        auto ext = base;
                        ext.push_back(o);
                        next.push_back(std::move(ext));
                    }
                local = std::move(next);
            }
            if (!ok) continue;
            for (auto& base : partial)
                for (auto& loc : local) {
                    auto ext = base;
                    ext.insert(ext.end(), loc.begin(), loc.end());
                    grown.push_back(std::move(ext));
                }
        } while (std::next_permutation(perm.begin(), perm.end()));
        partial = std::move(grown);
        if (partial.empty()) return;
        if (partial.size() > 200000) throw Error("automorphisms: group too large");
    }

    // materialize, computing signs
    std::vector<std::array<FlagRef, 3>> flag_at(g.vertex_count());
    for (int e = 0; e < nedges; e++) {
        const Edge& ed = g.edges()[e];
        flag_at[ed.tail_vertex][ed.tail_slot] = {e, 0};
        flag_at[ed.head_vertex][ed.head_slot] = {e, 1};
    }
    std::vector<std::array<int, 2>> slot_of(nedges);  // edge -> (tail slot, head slot)
    for (int e = 0; e < nedges; e++) {
        slot_of[e] = {g.edges()[e].tail_slot, g.edges()[e].head_slot};
    }

    for (auto& choice : partial) {
        std::vector<std::pair<int, bool>> emap(nedges, {-1, false});
        for (auto& c : choice) emap[c.src_edge] = {c.tgt_edge, c.reversed};
        int sign = 1;
        for (int v = 0; v < g.vertex_count(); v++) {
            if (g.vertices()[v].kind != VertexKind::Trivalent) continue;
            std::array<int, 3> image{};
            for (int s = 0; s < 3; s++) {
                const FlagRef& f = flag_at[v][s];
                auto [te, rev] = emap[f.edge];
                int role = f.end ^ (rev ? 1 : 0);
                image[s] = slot_of[te][role];
            }
            int inv = 0;
            for (int i = 0; i < 3; i++)
                for (int j = i + 1; j < 3; j++)
                    if (image[i] > image[j]) inv++;
            if (inv % 2) sign = -sign;
        }
        out.push_back({vmap, emap, sign});
    }
}

}  // namespace

std::vector<GraphAutomorphism> automorphisms(const BeadGraph& g, int max_vertices) {
    g.validate();
    int n = g.vertex_count();
    if (n > max_vertices) throw Error("automorphisms: graph exceeds the vertex bound");
    std::vector<GraphAutomorphism> out;
    if (n == 0) {
        out.push_back({{}, {}, 1});
        return out;
    }

    // classes: kind + color
    std::map<std::pair<int, std::string>, std::vector<int>> classes;
    for (int v = 0; v < n; v++) {
        const Vertex& vx = g.vertices()[v];
        classes[{vx.kind == VertexKind::Trivalent ? 0 : 1, vx.color}].push_back(v);
    }
    std::vector<std::vector<int>> cls;
    for (auto& [k, vs] : classes) cls.push_back(vs);

    std::vector<int> vmap(n, -1);
    std::function<void(size_t)> rec = [&](size_t ci) {
        if (ci == cls.size()) {
            collect_edge_maps(g, vmap, out);
            return;
        }
        std::vector<int> perm = cls[ci];
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t i = 0; i < perm.size(); i++) vmap[cls[ci][i]] = perm[i];
            rec(ci + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int v : cls[ci]) vmap[v] = -1;
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// File format.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::pair<std::string, int> parse_flag_ref(const std::string& tok, int lineno) {
    auto dot = tok.rfind('.');
    if (dot == std::string::npos)
        throw Error("line " + std::to_string(lineno) + ": expected <vertex>.<slot>, got '" + tok + "'");
    std::string name = tok.substr(0, dot);
    int slot;
    try {
        slot = std::stoi(tok.substr(dot + 1));
    } catch (const std::exception&) {
        throw Error("line " + std::to_string(lineno) + ": bad slot in '" + tok + "'");
    }
    return {name, slot};
}

}  // namespace

BeadGraph parse_graph(std::istream& in) {
    BeadGraph g;
    std::map<std::string, int> names;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "vertex") {
            if (toks.size() < 3)
                throw Error("line " + std::to_string(lineno) + ": vertex needs a name and kind");
            if (names.count(toks[1]))
                throw Error("line " + std::to_string(lineno) + ": duplicate vertex '" + toks[1] + "'");
            if (toks[2] == "Y") {
                if (toks.size() != 3)
                    throw Error("line " + std::to_string(lineno) + ": trailing tokens after Y vertex");
                names[toks[1]] = g.add_trivalent();
            } else if (toks[2] == "leg") {
                if (toks.size() != 4)
                    throw Error("line " + std::to_string(lineno) + ": leg vertex needs a color");
                names[toks[1]] = g.add_leg(toks[3]);
            } else {
                throw Error("line " + std::to_string(lineno) + ": unknown vertex kind '" + toks[2] +
                            "' (expected Y or leg)");
            }
        } else if (toks[0] == "edge") {
            if (toks.size() < 3)
                throw Error("line " + std::to_string(lineno) + ": edge needs two endpoints");
            auto [tn, ts] = parse_flag_ref(toks[1], lineno);
            auto [hn, hs] = parse_flag_ref(toks[2], lineno);
            if (!names.count(tn) || !names.count(hn))
                throw Error("line " + std::to_string(lineno) + ": unknown vertex in edge");
            std::string beadtext = "1";
            if (toks.size() > 3) {
                beadtext.clear();
                for (size_t i = 3; i < toks.size(); i++) beadtext += toks[i];
            }
            LaurentPoly bead;
            try {
                bead = LaurentPoly::parse(beadtext);
            } catch (const Error& e) {
                throw Error("line " + std::to_string(lineno) + ": " + e.what());
            }
            g.add_edge(names[tn], ts, names[hn], hs, bead);
        } else {
            throw Error("line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
        }
    }
    try {
        g.validate();
    } catch (const Error& e) {
        throw Error(std::string("invalid graph: ") + e.what());
    }
    return g;
}

BeadGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

std::string serialize_graph(const BeadGraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.vertex_count(); v++) {
        const Vertex& vx = g.vertices()[v];
        if (vx.kind == VertexKind::Trivalent)
            os << "vertex v" << v << " Y\n";
        else
            os << "vertex v" << v << " leg " << vx.color << "\n";
    }
    for (const auto& e : g.edges()) {
        os << "edge v" << e.tail_vertex << "." << e.tail_slot << " v" << e.head_vertex << "."
           << e.head_slot;
        if (!e.bead.is_one()) os << " " << e.bead.str();
        os << "\n";
    }
    return os.str();
}

}  // namespace beadcalc
