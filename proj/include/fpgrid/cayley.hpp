// Copyright 2026 The fpgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace fpgrid {

/// Distance marker for vertices not reached by a BFS.
inline constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

/// Undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Loops are stored (a vertex may list itself) and ignored by BFS.
class Graph {
public:
    explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

    std::size_t vertex_count() const { return adj_.size(); }

    /// Inserts the undirected edge {u, v}; u == v records a loop.
    /// Duplicate insertions are absorbed.
    void add_edge(std::size_t u, std::size_t v);

    bool adjacent(std::size_t u, std::size_t v) const;
    const std::vector<std::uint32_t>& neighbors(std::size_t u) const { return adj_[u]; }
    std::size_t edge_count() const;

    friend bool operator==(const Graph&, const Graph&) = default;

    /// Debug dump: first line is the vertex count, then one edge "u v"
    /// per line with u <= v, sorted lexicographically. Loops print "u u".
    std::string dump() const;

private:
    std::vector<std::vector<std::uint32_t>> adj_;
};

/// Unweighted shortest-path distances from source; unreached vertices get
/// kUnreachable.
std::vector<std::int64_t> bfs_distances(const Graph& g, std::size_t source);

/// Subgraph induced by the given vertices, re-indexed by list position.
/// The list must be duplicate-free.
Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& vertices);

/// A finite group given by its full operation table over element indices
/// 0..n-1. Construction locates the identity, computes inverses, and
/// spot-checks associativity (exhaustively for n <= 16, on a fixed-seed
/// sample of triples otherwise), rejecting non-groups.
class FiniteGroup {
public:
    /// Largest supported order; keeps the n*n table at desk scale.
    static constexpr std::size_t kMaxOrder = 4096;

    /// table is row-major: table[a*n + b] = a*b.
    static FiniteGroup from_table(std::size_t n, std::vector<std::uint32_t> table);

    /// Z_n under addition.
    static FiniteGroup cyclic(std::size_t n);

    /// Direct product; (a, b) is indexed as a*|B| + b.
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    /// Additive group of (Z/mZ)[i]; a+bi is indexed as a*m + b.
    static FiniteGroup gaussian_additive(std::uint64_t m);

    std::size_t size() const { return n_; }
    std::uint32_t op(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
    std::uint32_t identity() const { return identity_; }
    std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }

private:
    FiniteGroup() = default;

    std::size_t n_ = 0;
    std::vector<std::uint32_t> table_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> inverse_;
};

/// Vertex index of a+bi in graphs over FiniteGroup::gaussian_additive(m).
inline std::uint32_t gaussian_vertex(std::uint64_t re, std::uint64_t im, std::uint64_t m) {
    return static_cast<std::uint32_t>((re % m) * m + (im % m));
}

/// A group with a generating set and the resulting Cayley graph:
/// a, b are adjacent iff ab^-1 or ba^-1 is a generator.
struct CayleyGraph {
    FiniteGroup group;
    std::vector<std::uint32_t> generators; // sorted, duplicate-free
    Graph graph;
};

/// Builds the Cayley graph; throws std::invalid_argument when the
/// generators fail to generate the group (BFS from the identity must
/// reach every element).
CayleyGraph make_cayley_graph(FiniteGroup group, std::vector<std::uint32_t> generators);

/// Quotient of an arbitrary graph by a partition: vertices are class ids
/// 0..class_count-1, classes A, B adjacent iff some a in A and b in B are
/// adjacent in the base. A = B with an internal edge yields a loop.
Graph quotient_graph(const Graph& base, const std::vector<std::uint32_t>& class_of,
                     std::size_t class_count);

/// Everything produced by quotienting a Cayley graph by a normal subgroup.
/// Cosets are numbered in first-encounter order over element indices, so
/// coset_rep[c] is the smallest element of coset c and coset_of[identity]
/// is always 0.
struct SubgroupQuotient {
    std::vector<std::uint32_t> coset_of;            // element -> coset id
    std::vector<std::uint32_t> coset_rep;           // coset id -> smallest member
    FiniteGroup quotient_group;                     // group on coset ids
    std::vector<std::uint32_t> quotient_generators; // classes meeting the generator set
    Graph graph_quotient;                           // quotient of the base graph
    Graph cayley_of_quotient;                       // Cayley graph of the quotient group
};

/// Quotients cg by the cosets of the given subgroup. Verifies that the
/// subgroup contains the identity, is closed under product and inverse,
/// and is normal; throws std::invalid_argument otherwise. The returned
/// graph_quotient and cayley_of_quotient coincide for every valid input;
/// callers may assert equality.
SubgroupQuotient quotient_by_subgroup(const CayleyGraph& cg,
                                      const std::vector<std::uint32_t>& subgroup);

/// Constructs a transversal r (coset id -> element) with r(coset of e) = e
/// such that for every coset X with x = r(X), the distance from e inside
/// the subgraph induced by the image of r equals the norm of x in cg,
/// which equals the norm of X in the quotient.
///
/// Construction walks quotient BFS layers outward: for a coset B at
/// distance m, pick the smallest-id coset A at distance m-1 adjacent to B,
/// then the lexicographically smallest adjacent pair (a, b) in A x B, and
/// set r(B) = b a^-1 r(A). The output is one valid choice among many; the
/// contract is the three-way distance equality, not this particular map.
std::vector<std::uint32_t> representative_set(const CayleyGraph& cg, const SubgroupQuotient& q);

/// The three quantities chained by the coset-norm inequality, per coset.
struct ChainDistances {
    std::int64_t d_r;        // distance of r(X) from e inside the induced transversal subgraph
    std::int64_t norm_x;     // norm of r(X) in the base Cayley graph
    std::int64_t norm_coset; // norm of X in the quotient graph
};

/// Evaluates d_R(x, e), N(x), N(xH) for every coset under an arbitrary
/// transversal. Requires transversal[c] to be a member of coset c and the
/// identity coset's entry to be the identity element (otherwise d_R has no
/// basepoint); throws std::invalid_argument if violated. d_r is
/// kUnreachable when the induced subgraph disconnects the entry from e.
std::vector<ChainDistances> chain_distances(const CayleyGraph& cg, const SubgroupQuotient& q,
                                            const std::vector<std::uint32_t>& transversal);

/// True iff quotient distances never exceed the minimum base distance
/// between the classes, for all class pairs. kUnreachable acts as
/// infinity on both sides.
bool verify_quotient_distance_bound(const Graph& base, const std::vector<std::uint32_t>& class_of,
                                    std::size_t class_count);

} // namespace fpgrid
