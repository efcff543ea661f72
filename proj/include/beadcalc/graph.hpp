// Vertex-oriented unitrivalent graphs with oriented, bead-labeled edges and
// colored legs; degree computations; canonical labeling with antisymmetry
// sign; automorphism enumeration; structured-text file format.
#pragma once

#include "beadcalc/laurent.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace beadcalc {

enum class VertexKind : uint8_t { Trivalent, Leg };

struct Vertex {
    VertexKind kind = VertexKind::Trivalent;
    std::string color;  // leg color; empty for trivalent vertices
};

/// Oriented edge between two flags. A flag is (vertex, slot); slots 0..2 of a
/// trivalent vertex list its flags in the stored cyclic order, a leg has the
/// single slot 0. The edge runs from the tail flag to the head flag and the
/// bead is read along that direction.
struct Edge {
    int tail_vertex = -1;
    int tail_slot = 0;
    int head_vertex = -1;
    int head_slot = 0;
    LaurentPoly bead = LaurentPoly::one();
};

/// How canonicalization picks the spanning forest for the holonomy normal
/// form. Any policy yields a consistent canonical form; quotient dimensions
/// must not depend on the choice.
enum class TreePolicy : uint8_t { BfsLowRoot, DfsLowRoot, BfsHighRoot };

struct CanonicalizeOptions {
    /// Also reduce bead exponents modulo the holonomy relation (one move per
    /// trivalent vertex). Requires a legless graph.
    bool holonomy = false;
    TreePolicy tree_policy = TreePolicy::BfsLowRoot;
    int max_vertices = 16;
};

/// Canonical encoding of a graph: enough data to rebuild it with all vertex
/// orientations in reference (sorted-descriptor) order and all edges oriented
/// from lower to higher position. Ordered so it can key maps.
struct CanonKey {
    int trivalent_count = 0;
    std::vector<std::string> leg_colors;            // by position, after the trivalent block
    std::vector<std::array<long, 3>> edges;         // (tail pos, head pos, bead exponent), sorted

    auto operator<=>(const CanonKey&) const = default;
};

class BeadGraph;

struct CanonicalForm {
    CanonKey key;
    int sign = 0;  // +1/-1, or 0 when an automorphism forces the graph to vanish by AS
    /// Rebuilds the canonical representative (sign +1 orientation state).
    BeadGraph graph() const;
};

class BeadGraph {
public:
    BeadGraph() = default;

    int add_trivalent();
    int add_leg(const std::string& color);
    /// Adds the oriented edge (tail_vertex.tail_slot) -> (head_vertex.head_slot).
    void add_edge(int tail_vertex, int tail_slot, int head_vertex, int head_slot,
                  LaurentPoly bead = LaurentPoly::one());

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<Edge>& edges() { return edges_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int trivalent_count() const;
    int leg_count() const;
    bool is_legless() const { return leg_count() == 0; }
    bool is_beadless() const;

    /// Swaps two slots in the stored cyclic order of a trivalent vertex
    /// (an AS flip; edge endpoints are re-pointed accordingly).
    void flip_vertex_orientation(int vertex);

    /// Throws Error unless every slot of every vertex is used by exactly one
    /// edge endpoint.
    void validate() const;

    /// Half the number of vertices (a half-integer in general).
    Rational vassiliev_degree() const;
    /// Number of degree-3 vertices that survive iterated deletion of
    /// univalent vertices.
    int euler_degree() const;
    /// First Betti number: E - V + (number of connected components).
    int loop_degree() const;

    /// Requires every bead to be a pure power t^k. Minimizes the encoding
    /// over all vertex orderings (and self-loop directions), normalizing edge
    /// orientations with bead involution and accumulating the AS sign.
    CanonicalForm canonicalize(const CanonicalizeOptions& opt = {}) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

/// Automorphism of a bead graph: a vertex bijection plus a compatible edge
/// bijection (edges may map orientation-reversed when the involuted bead
/// matches), with the AS sign induced on vertex orientations.
struct GraphAutomorphism {
    std::vector<int> vertex_map;              // vertex -> vertex
    std::vector<std::pair<int, bool>> edge_map;  // edge -> (edge, reversed?)
    int sign = 1;
};

std::vector<GraphAutomorphism> automorphisms(const BeadGraph& g, int max_vertices = 16);

/// Structured text format, one graph per document:
///   vertex <name> Y            — trivalent, slots 0..2 in cyclic order
///   vertex <name> leg <color>
///   edge <name>.<slot> <name>.<slot> <bead>
/// '#' starts a comment. Parse errors report line and cause.
BeadGraph parse_graph(std::istream& in);
BeadGraph parse_graph(const std::string& text);
std::string serialize_graph(const BeadGraph& g);

}  // namespace beadcalc
