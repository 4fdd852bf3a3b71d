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

#include "fpgrid/cayley.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <random>
#include <stdexcept>

namespace fpgrid {

void Graph::add_edge(std::size_t u, std::size_t v) {
    auto insert_sorted = [](std::vector<std::uint32_t>& list, std::uint32_t x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert_sorted(adj_[u], static_cast<std::uint32_t>(v));
    if (u != v) insert_sorted(adj_[v], static_cast<std::uint32_t>(u));
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), static_cast<std::uint32_t>(v));
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0, loops = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        twice += adj_[u].size();
        if (adjacent(u, u)) ++loops;
    }
    // every non-loop edge is listed twice, every loop once
    return (twice - loops) / 2 + loops;
}

std::string Graph::dump() const {
    std::string out = std::to_string(adj_.size()) + "\n";
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (std::uint32_t v : adj_[u])
            if (v >= u) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::vector<std::int64_t> bfs_distances(const Graph& g, std::size_t source) {
    std::vector<std::int64_t> dist(g.vertex_count(), kUnreachable);
    std::deque<std::uint32_t> queue;
    dist[source] = 0;
    queue.push_back(static_cast<std::uint32_t>(source));
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::uint32_t>& vertices) {
    std::vector<std::int64_t> position(g.vertex_count(), -1);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        if (position[vertices[j]] != -1)
            throw std::invalid_argument("induced_subgraph: duplicate vertex");
        position[vertices[j]] = static_cast<std::int64_t>(j);
    }
    Graph sub(vertices.size());
    for (std::size_t j = 0; j < vertices.size(); ++j)
        for (std::uint32_t v : g.neighbors(vertices[j]))
            if (position[v] >= 0 && position[v] >= static_cast<std::int64_t>(j))
                sub.add_edge(j, static_cast<std::size_t>(position[v]));
    return sub;
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<std::uint32_t> table) {
    if (n == 0 || n > kMaxOrder) throw std::invalid_argument("FiniteGroup: unsupported order");
    if (table.size() != n * n) throw std::invalid_argument("FiniteGroup: table size mismatch");
    for (std::uint32_t x : table)
        if (x >= n) throw std::invalid_argument("FiniteGroup: table entry out of range");

    FiniteGroup g;
    g.n_ = n;
    g.table_ = std::move(table);

    // Identity: the unique e with e*a = a*e = a for all a.
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::uint32_t a = 0; a < n && ok; ++a)
            ok = g.op(e, a) == a && g.op(a, e) == a;
        if (ok) {
            g.identity_ = e;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("FiniteGroup: no identity element");

    g.inverse_.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
        bool has = false;
        for (std::uint32_t b = 0; b < n; ++b) {
            if (g.op(a, b) == g.identity_ && g.op(b, a) == g.identity_) {
                g.inverse_[a] = b;
                has = true;
                break;
            }
        }
        if (!has) throw std::invalid_argument("FiniteGroup: element without inverse");
    }

    // Associativity: exhaustive for tiny orders, fixed-seed sample otherwise.
    auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
            throw std::invalid_argument("FiniteGroup: operation is not associative");
    };
    if (n <= 16) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eed5eedULL);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
        for (int t = 0; t < 2000; ++t) check(pick(rng), pick(rng), pick(rng));
    }
    return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
    return from_table(n, std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    std::size_t n = a.size() * b.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        auto xa = static_cast<std::uint32_t>(x / b.size());
        auto xb = static_cast<std::uint32_t>(x % b.size());
        for (std::size_t y = 0; y < n; ++y) {
            auto ya = static_cast<std::uint32_t>(y / b.size());
            auto yb = static_cast<std::uint32_t>(y % b.size());
            table[x * n + y] =
                static_cast<std::uint32_t>(a.op(xa, ya) * b.size() + b.op(xb, yb));
        }
    }
    return from_table(n, std::move(table));
}

FiniteGroup FiniteGroup::gaussian_additive(std::uint64_t m) {
    if (m < 2 || m * m > kMaxOrder)
        throw std::invalid_argument("gaussian_additive: modulus out of range");
    std::size_t n = static_cast<std::size_t>(m * m);
    std::vector<std::uint32_t> table(n * n);
    for (std::uint64_t are = 0; are < m; ++are)
        for (std::uint64_t aim = 0; aim < m; ++aim)
            for (std::uint64_t bre = 0; bre < m; ++bre)
                for (std::uint64_t bim = 0; bim < m; ++bim)
                    table[static_cast<std::size_t>(gaussian_vertex(are, aim, m)) * n +
                          gaussian_vertex(bre, bim, m)] =
                        gaussian_vertex(are + bre, aim + bim, m);
    return from_table(n, std::move(table));
}

CayleyGraph make_cayley_graph(FiniteGroup group, std::vector<std::uint32_t> generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (std::uint32_t g : generators)
        if (g >= group.size()) throw std::invalid_argument("make_cayley_graph: generator out of range");

    Graph graph(group.size());
    // a ~ b iff ab^-1 in Gamma or ba^-1 in Gamma; both cases are covered by
    // joining g*b to b for every generator g (undirected edges).
    for (std::uint32_t b = 0; b < group.size(); ++b)
        for (std::uint32_t g : generators) graph.add_edge(group.op(g, b), b);

    auto dist = bfs_distances(graph, group.identity());
    for (std::int64_t d : dist)
        if (d == kUnreachable)
            throw std::invalid_argument("make_cayley_graph: generators do not generate the group");

    return CayleyGraph{std::move(group), std::move(generators), std::move(graph)};
}

Graph quotient_graph(const Graph& base, const std::vector<std::uint32_t>& class_of,
                     std::size_t class_count) {
    if (class_of.size() != base.vertex_count())
        throw std::invalid_argument("quotient_graph: partition size mismatch");
    Graph q(class_count);
    for (std::size_t u = 0; u < base.vertex_count(); ++u)
        for (std::uint32_t v : base.neighbors(u))
            if (v >= u) q.add_edge(class_of[u], class_of[v]);
    return q;
}

SubgroupQuotient quotient_by_subgroup(const CayleyGraph& cg,
                                      const std::vector<std::uint32_t>& subgroup) {
    const FiniteGroup& g = cg.group;
    std::vector<bool> in_h(g.size(), false);
    for (std::uint32_t h : subgroup) {
        if (h >= g.size()) throw std::invalid_argument("quotient_by_subgroup: element out of range");
        in_h[h] = true;
    }
    if (!in_h[g.identity()])
        throw std::invalid_argument("quotient_by_subgroup: subgroup lacks the identity");
    for (std::uint32_t h1 : subgroup) {
        if (!in_h[g.inverse(h1)])
            throw std::invalid_argument("quotient_by_subgroup: subgroup not closed under inverse");
        for (std::uint32_t h2 : subgroup)
            if (!in_h[g.op(h1, h2)])
                throw std::invalid_argument("quotient_by_subgroup: subgroup not closed under product");
    }
    for (std::uint32_t x = 0; x < g.size(); ++x)
        for (std::uint32_t h : subgroup)
            if (!in_h[g.op(g.op(x, h), g.inverse(x))])
                throw std::invalid_argument("quotient_by_subgroup: subgroup is not normal");

    // Classes are the cosets Hx = {hx : h in H}; x == y iff xy^-1 in H.
    // First-encounter numbering over element indices.
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> coset_of(g.size(), kUnset);
    std::vector<std::uint32_t> coset_rep;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        if (coset_of[x] != kUnset) continue;
        auto id = static_cast<std::uint32_t>(coset_rep.size());
        coset_rep.push_back(x);
        for (std::uint32_t h : subgroup) coset_of[g.op(h, x)] = id;
    }
    std::size_t k = coset_rep.size();

    std::vector<std::uint32_t> table(k * k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            table[a * k + b] = coset_of[g.op(coset_rep[a], coset_rep[b])];
    FiniteGroup quotient_group = FiniteGroup::from_table(k, std::move(table));

    std::vector<std::uint32_t> quotient_generators;
    for (std::uint32_t gen : cg.generators) quotient_generators.push_back(coset_of[gen]);
    std::sort(quotient_generators.begin(), quotient_generators.end());
    quotient_generators.erase(
        std::unique(quotient_generators.begin(), quotient_generators.end()),
        quotient_generators.end());

    Graph graph_quotient = quotient_graph(cg.graph, coset_of, k);

    Graph cq(k);
    for (std::uint32_t b = 0; b < k; ++b)
        for (std::uint32_t gen : quotient_generators) cq.add_edge(quotient_group.op(gen, b), b);
    return SubgroupQuotient{std::move(coset_of),          std::move(coset_rep),
                            std::move(quotient_group),    std::move(quotient_generators),
                            std::move(graph_quotient),    std::move(cq)};
}

std::vector<std::uint32_t> representative_set(const CayleyGraph& cg, const SubgroupQuotient& q) {
    const FiniteGroup& g = cg.group;
    std::size_t k = q.coset_rep.size();
    std::uint32_t identity_coset = q.coset_of[g.identity()];
    auto dist_q = bfs_distances(q.cayley_of_quotient, identity_coset);

    // Process cosets outward by quotient distance, ids ascending inside a
    // layer, so the chosen neighbor coset always has its representative.
    std::vector<std::uint32_t> order(k);
    for (std::uint32_t c = 0; c < k; ++c) order[c] = c;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return dist_q[a] != dist_q[b] ? dist_q[a] < dist_q[b] : a < b;
    });

    // Bucket elements by coset once; buckets are ascending by construction.
    std::vector<std::vector<std::uint32_t>> members(k);
    for (std::uint32_t x = 0; x < g.size(); ++x) members[q.coset_of[x]].push_back(x);

    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> rep(k, kUnset);
    for (std::uint32_t b_coset : order) {
        if (dist_q[b_coset] == kUnreachable)
            throw std::invalid_argument("representative_set: quotient graph is disconnected");
        if (b_coset == identity_coset) {
            rep[b_coset] = g.identity();
            continue;
        }
        std::int64_t m = dist_q[b_coset];
        // Smallest-id coset one layer in, adjacent to b_coset.
        std::uint32_t a_coset = kUnset;
        for (std::uint32_t cand : q.cayley_of_quotient.neighbors(b_coset))
            if (dist_q[cand] == m - 1) {
                a_coset = cand;
                break;
            }
        assert(a_coset != kUnset && rep[a_coset] != kUnset);
        // Lexicographically smallest base-adjacent pair (a, b) in A x B.
        std::uint32_t chosen_a = kUnset, chosen_b = kUnset;
        for (std::uint32_t a : members[a_coset]) {
            for (std::uint32_t nb : cg.graph.neighbors(a))
                if (q.coset_of[nb] == b_coset) {
                    chosen_a = a;
                    chosen_b = nb;
                    break;
                }
            if (chosen_a != kUnset) break;
        }
        assert(chosen_a != kUnset);
        // r(B) = b a^-1 r(A); adjacency of a and b makes r(B) adjacent to r(A).
        rep[b_coset] = g.op(g.op(chosen_b, g.inverse(chosen_a)), rep[a_coset]);
        assert(q.coset_of[rep[b_coset]] == b_coset);
    }
    return rep;
}

std::vector<ChainDistances> chain_distances(const CayleyGraph& cg, const SubgroupQuotient& q,
                                            const std::vector<std::uint32_t>& transversal) {
    const FiniteGroup& g = cg.group;
    std::size_t k = q.coset_rep.size();
    if (transversal.size() != k)
        throw std::invalid_argument("chain_distances: transversal size mismatch");
    for (std::uint32_t c = 0; c < k; ++c)
        if (transversal[c] >= g.size() || q.coset_of[transversal[c]] != c)
            throw std::invalid_argument("chain_distances: entry is not in its coset");
    std::uint32_t identity_coset = q.coset_of[g.identity()];
    if (transversal[identity_coset] != g.identity())
        throw std::invalid_argument("chain_distances: identity coset must map to the identity");

    Graph sub = induced_subgraph(cg.graph, transversal);
    auto d_sub = bfs_distances(sub, identity_coset); // position of e == its coset id
    auto norm = bfs_distances(cg.graph, g.identity());
    auto norm_q = bfs_distances(q.cayley_of_quotient, identity_coset);

    std::vector<ChainDistances> out(k);
    for (std::uint32_t c = 0; c < k; ++c)
        out[c] = ChainDistances{d_sub[c], norm[transversal[c]], norm_q[c]};
    return out;
}

bool verify_quotient_distance_bound(const Graph& base, const std::vector<std::uint32_t>& class_of,
                                    std::size_t class_count) {
    Graph q = quotient_graph(base, class_of, class_count);
    // Minimum base distance between classes, via one BFS per base vertex.
    std::vector<std::vector<std::int64_t>> min_dist(
        class_count, std::vector<std::int64_t>(class_count, kUnreachable));
    for (std::size_t u = 0; u < base.vertex_count(); ++u) {
        auto d = bfs_distances(base, u);
        for (std::size_t v = 0; v < base.vertex_count(); ++v)
            if (d[v] != kUnreachable)
                min_dist[class_of[u]][class_of[v]] =
                    std::min(min_dist[class_of[u]][class_of[v]], d[v]);
    }
    for (std::size_t a = 0; a < class_count; ++a) {
        auto dq = bfs_distances(q, a);
        for (std::size_t b = 0; b < class_count; ++b) {
            if (min_dist[a][b] == kUnreachable) continue; // bound is vacuous
            if (dq[b] == kUnreachable || dq[b] > min_dist[a][b]) return false;
        }
    }
    return true;
}

} // namespace fpgrid
