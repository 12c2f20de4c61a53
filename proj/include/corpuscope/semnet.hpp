#ifndef CORPUSCOPE_SEMNET_HPP
#define CORPUSCOPE_SEMNET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "corpuscope/corpus.hpp"

namespace corpuscope {

/// Weighted undirected concept graph. No self-loops, no parallel edges;
/// edges carry u < v by node index and are sorted by (u, v).
struct SemanticNetwork {
    struct Edge {
        int u = 0;
        int v = 0;
        std::int64_t weight = 1;
    };

    std::vector<std::string> nodes;
    std::vector<Edge> edges;

    std::size_t node_count() const noexcept { return nodes.size(); }
    std::size_t edge_count() const noexcept { return edges.size(); }

    /// Unweighted neighbor lists, sorted.
    std::vector<std::vector<int>> adjacency() const;
};

/// Node set = distinct tokens; edge weight = number of documents in which
/// both tokens occur (binary per document, document as window). Edges with
/// weight < min_weight are dropped. Nodes are sorted lexicographically, so
/// the result is invariant under document and token order.
SemanticNetwork build_cooccurrence(const std::vector<TokenizedDoc>& corpus,
                                   std::int64_t min_weight = 1);

/// Removes degree-0 nodes and returns the largest connected component
/// (ties broken by the lexicographically smallest sorted node-name set).
/// Node order is preserved. Throws InputError if nothing remains.
SemanticNetwork giant_component(const SemanticNetwork& net);

bool is_connected(const SemanticNetwork& net);

struct NodeCentrality {
    std::string node;
    int degree = 0;
    std::int64_t weighted_degree = 0;
    double eigencentrality = 0.0;  // max-normalized to 1
    std::int64_t triangles = 0;
};

/// Degree, weighted degree, eigencentrality (power iteration on the
/// unweighted adjacency, all-ones start, max component normalized to 1)
/// and per-node triangle counts. Requires a connected network.
std::vector<NodeCentrality> centralities(const SemanticNetwork& net, double tolerance = 1e-10);

struct ClusteringPaths {
    double transitivity = 0.0;      // 3*triangles / connected triples
    double avg_clustering = 0.0;    // mean local clustering, 0 for degree < 2
    double mean_path_length = 0.0;  // mean over unordered pairs, BFS
};

/// Transitivity and mean local clustering plus the unweighted mean shortest
/// path length. Throws InputError on disconnected input (run giant_component).
ClusteringPaths clustering_and_paths(const SemanticNetwork& net);

/// Transitivity alone; defined (as 0) on any graph, no connectivity needed.
double transitivity(const SemanticNetwork& net);

struct ErNullStats {
    int n = 0;
    std::int64_t m = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    double c_mean = 0.0;
    double c_std = 0.0;
    double l_mean = 0.0;  // mean path length, computed on each sample's giant component
    double l_std = 0.0;
};

/// Samples G(n,m) graphs (uniform over graphs with exactly m edges) and
/// reports transitivity and mean-path statistics. Deterministic under seed.
ErNullStats er_null(int n, std::int64_t m, int samples, std::uint64_t seed);

struct SmallWorldStats {
    double c_obs = 0.0;
    double l_obs = 0.0;
    double c_rand = 0.0;
    double l_rand = 0.0;
    double s_delta = 0.0;  // (C_obs/C_rand) / (L_obs/L_rand)
    int null_samples = 0;
    std::uint64_t seed = 0;
    double threshold = 10.0;
    bool small_world = false;
};

/// Humphries-Gurney small-world coefficient with the triangle-based
/// (transitivity) clustering variant; verdict small_world iff
/// s_delta > threshold.
SmallWorldStats small_world_sdelta(const SemanticNetwork& net, const ErNullStats& null_stats,
                                   double threshold = 10.0);

struct LouvainResult {
    std::vector<int> community;  // per node, ids compact from 0
    double modularity = 0.0;
};

/// Louvain community detection (weighted modularity with resolution).
/// Node visits follow input order, so results are reproducible.
LouvainResult louvain(const SemanticNetwork& net, double resolution = 1.0);

/// Weighted modularity of an arbitrary partition at the given resolution.
double modularity(const SemanticNetwork& net, const std::vector<int>& community,
                  double resolution = 1.0);

/// GEXF 1.2 with node attributes (community, weighted_degree,
/// eigencentrality, triangles) and edge weights.
std::string to_gexf(const SemanticNetwork& net, const std::vector<NodeCentrality>& centrality,
                    const std::vector<int>& community);

/// "source,target,weight" rows.
std::string to_edge_csv(const SemanticNetwork& net);

}  // namespace corpuscope

#endif
