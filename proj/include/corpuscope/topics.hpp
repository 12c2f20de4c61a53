#ifndef CORPUSCOPE_TOPICS_HPP
#define CORPUSCOPE_TOPICS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "corpuscope/corpus.hpp"

namespace corpuscope {

struct TopicModelConfig {
    int k = 1;
    double alpha = 0.0;  // <= 0 resolves to the symmetric default 1/k
    double beta = 0.01;
    int iterations = 1000;
    int burn_in = 200;
    std::uint64_t seed = 0;
};

struct TopicModel {
    std::vector<std::vector<double>> phi;    // k x V, rows sum to 1
    std::vector<std::vector<double>> theta;  // D x k, rows sum to 1
    std::vector<std::string> vocab;          // V, first-appearance order
    TopicModelConfig config;                 // with alpha resolved
    std::vector<std::int64_t> corpus_term_counts;  // V
    std::vector<double> topic_weights;             // k, corpus share of tokens

    int k() const noexcept { return config.k; }
    std::size_t vocab_size() const noexcept { return vocab.size(); }
};

/// Collapsed Gibbs sampling. phi and theta are estimated from the mean
/// token-topic counts over post-burn-in sweeps with prior smoothing:
///   phi[t][w]   = (n_tw + beta)  / (n_t + V*beta)
///   theta[d][t] = (n_dt + alpha) / (n_d + k*alpha)
/// Identical corpus, config and seed give bit-identical models.
TopicModel fit_lda(const std::vector<TokenizedDoc>& corpus, TopicModelConfig config);

/// Top-n vocabulary ids per topic by phi, ties broken by vocab order.
std::vector<std::vector<int>> top_term_ids(const TopicModel& model, int top_n);

struct CoherenceOptions {
    int top_n = 10;
    int window = 110;        // boolean sliding window length, in tokens
    double epsilon = 1e-12;  // NPMI smoothing
};

/// c_v coherence: boolean sliding-window counts, NPMI vectors of each top
/// word over the top-word set, cosine of each vector with the sum vector,
/// averaged over words then topics, affinely mapped from [-1,1] to [0,1].
double coherence_cv(const TopicModel& model, const std::vector<TokenizedDoc>& corpus,
                    const CoherenceOptions& opts = {});

/// Per-topic c_v values (same pipeline, no topic averaging).
std::vector<double> coherence_cv_per_topic(const TopicModel& model,
                                           const std::vector<TokenizedDoc>& corpus,
                                           const CoherenceOptions& opts = {});

/// UMass coherence over document co-occurrence counts; diagnostic
/// cross-check, not on the [0,1] scale.
double coherence_umass(const TopicModel& model, const std::vector<TokenizedDoc>& corpus,
                       int top_n = 10);

struct SweepPoint {
    int k = 0;
    double coherence = 0.0;
};

struct SweepResult {
    std::vector<SweepPoint> points;  // ks strictly increasing
};

/// Fits one model per k (seed derived from base seed and k) and records
/// c_v coherence. Schedule must be strictly increasing, every k >= 2.
SweepResult sweep_k(const std::vector<TokenizedDoc>& corpus, const std::vector<int>& schedule,
                    const TopicModelConfig& base_config, const CoherenceOptions& opts = {});

/// Coarse pass over `coarse`, then a step-1 pass around the provisionally
/// selected k; returns the merged sweep.
SweepResult two_phase_sweep(const std::vector<TokenizedDoc>& corpus,
                            const std::vector<int>& coarse, const TopicModelConfig& base_config,
                            double delta = 0.01, const CoherenceOptions& opts = {});

struct SelectedK {
    int k = 0;
    double coherence = 0.0;
    bool accepted = false;
};

/// Smallest k whose coherence trails the best later coherence by less than
/// delta; accepted iff its coherence reaches `acceptance`.
SelectedK select_k(const SweepResult& sweep, double delta = 0.01, double acceptance = 0.5);

/// relevance(w,t) = lambda*log phi[t][w] + (1-lambda)*log(phi[t][w]/p(w)),
/// p(w) from corpus term counts. Descending, ties by vocab order.
std::vector<std::vector<std::pair<std::string, double>>> relevance_terms(const TopicModel& model,
                                                                         double lambda = 0.6,
                                                                         int top_n = 10);

/// Pairwise Jensen-Shannon divergence (natural log) between topic-word rows;
/// symmetric, zero diagonal, entries in [0, ln 2].
std::vector<std::vector<double>> jsd_matrix(const TopicModel& model);

struct IntertopicPoint {
    int topic = 0;
    double x = 0.0;
    double y = 0.0;
    double weight = 0.0;
};

/// Classical (Torgerson) MDS of the JSD matrix to 2 dimensions, plus the
/// per-topic corpus token share. Requires k >= 2.
std::vector<IntertopicPoint> intertopic_map(const TopicModel& model);

/// JSON bundle {vocab, phi, theta, config, weights} as a string.
std::string model_to_json(const TopicModel& model);

}  // namespace corpuscope

#endif
