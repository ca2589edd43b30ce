// Copyright(C) 2026 park contributors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <unordered_set>
#include <vector>

#include "park/common/matrix.hpp"
#include "park/corpus/types.hpp"
#include "park/dense/store.hpp"
#include "park/kg/graph.hpp"

namespace park::kg {

enum class KGModel : std::uint8_t { TransE, TransH };

[[nodiscard]] std::string_view name(KGModel model) noexcept;
[[nodiscard]] std::optional<KGModel> parse_model(std::string_view text) noexcept;

using Vec = std::span<double const>;

/// |h + r - t|_2
[[nodiscard]] double transe_score(Vec h, Vec r, Vec t);
/// v - (w.v) w. Requires |w|_2 = 1 within 1e-6.
[[nodiscard]] std::vector<double> transh_project(Vec v, Vec w);
/// |project(h, w) + d - project(t, w)|_2. Requires |w|_2 = 1 within 1e-6.
[[nodiscard]] double transh_score(Vec h, Vec t, Vec w, Vec d);

/// Vectors of one scored triple. `normal` is empty for TransE.
struct TripleVectors {
    Vec head;
    Vec relation;
    Vec tail;
    Vec normal;
};

struct TripleGradient {
    std::vector<double> head;
    std::vector<double> relation;
    std::vector<double> tail;
    std::vector<double> normal;
};

/// Score and its gradient. The TransH gradient treats w as a free vector (the training
/// loop restores unit length after each step).
[[nodiscard]] double score_gradient(KGModel model, TripleVectors const &v, TripleGradient &grad);

struct MarginGradient {
    double loss = 0.0;
    TripleGradient positive;
    TripleGradient negative;
};

/// max(margin + f(pos) - f(neg), 0) and its gradient with respect to both triples' vectors.
[[nodiscard]] MarginGradient margin_ranking_gradient(KGModel model, TripleVectors const &positive,
                                                     TripleVectors const &negative, double margin);

/// Soft orthogonality penalty for one relation: max((w.d)^2 / |d|^2 - eps^2, 0).
/// Gradients are added to grad_w and grad_d scaled by `weight`; returns the unweighted value.
double orthogonality_penalty(Vec w, Vec d, double eps, double weight, std::span<double> grad_w,
                             std::span<double> grad_d);

/// Membership set over triples for the closed-world filter.
class TripleSet {
  public:
    TripleSet() = default;
    explicit TripleSet(std::span<Triple const> triples);
    void insert(Triple const &t);
    [[nodiscard]] bool contains(Triple const &t) const;
    [[nodiscard]] std::size_t size() const noexcept { return m_keys.size(); }

  private:
    std::unordered_set<std::uint64_t> m_keys;
};

struct NegativeSample {
    Triple triple;
    bool corrupted_head = false;
    /// False when 100 attempts found no corruption absent from the known triples.
    bool ok = false;
};

/// Corrupts head or tail (probability 1/2 each) with a uniform entity of the kind the
/// relation requires, resampling until the result is not a known triple.
[[nodiscard]] NegativeSample sample_negative(Triple const &positive, EntityCatalog const &catalog,
                                             TripleSet const &known, std::mt19937_64 &rng);

/// Desk-scale defaults; full scale is 100 epochs with batch 16384.
struct KGTrainConfig {
    KGModel model = KGModel::TransH;
    double margin = 1.0;
    double lr = 1e-3;
    double weight_decay = 0.01;
    std::uint32_t epochs = 50;
    std::size_t batch_size = 4096;
    std::uint32_t negatives = 1;
    /// TransH soft-constraint weight C and tolerance eps.
    double soft_weight = 0.25;
    double soft_epsilon = 1e-3;
    std::uint64_t seed = 7;
    unsigned threads = 1;

    void validate() const;
};

struct KGEmbeddings {
    KGModel model = KGModel::TransE;
    Matrix<float> entities;
    Matrix<float> relations;
    /// Hyperplane normals; empty for TransE.
    Matrix<float> normals;
    /// 1 for document rows, which carry the dense document embeddings and never change.
    std::vector<std::uint8_t> frozen;

    [[nodiscard]] std::size_t dim() const noexcept { return entities.cols(); }
    friend bool operator==(KGEmbeddings const &, KGEmbeddings const &) = default;
};

struct KGEpochLog {
    std::uint32_t epoch = 0;
    double mean_loss = 0.0;
    std::size_t pairs = 0;
    std::size_t failed_negatives = 0;
};

using KGEpochObserver = std::function<void(KGEpochLog const &, KGEmbeddings const &)>;

/// Initial parameters: document rows copied from `docs` (matched through the corpus
/// ordinal of each Document entity), every other row uniform in [-6/sqrt(d), 6/sqrt(d)]
/// and normalized.
[[nodiscard]] KGEmbeddings initialize_kg(EntityCatalog const &catalog, corpus::Corpus const &corpus,
                                         dense::DocEmbeddingStore const &docs, KGModel model, std::uint64_t seed);

/// Margin-ranking training with AdamW. Trainable entity rows are projected back into the
/// unit ball after every step and TransH normals renormalized; document rows never move.
std::vector<KGEpochLog> train_kg(KGEmbeddings &embeddings, std::span<Triple const> triples,
                                 EntityCatalog const &catalog, KGTrainConfig const &config,
                                 KGEpochObserver const &observer = {});

/// Score of a triple under the trained parameters.
[[nodiscard]] double triple_score(KGEmbeddings const &embeddings, Triple const &t);

/// Mean over `targets` of the rank of the true tail among all entities of the tail kind,
/// ignoring candidates that form another triple in `known` (ties do not count against).
[[nodiscard]] double filtered_mean_rank(KGEmbeddings const &embeddings, EntityCatalog const &catalog,
                                        std::span<Triple const> targets, TripleSet const &known,
                                        unsigned threads = 1);

struct EntityVector {
    std::span<float const> row;
    bool frozen = false;
};

/// Throws DataError for an entity missing from the catalog.
[[nodiscard]] EntityVector entity_vector(KGEmbeddings const &embeddings, EntityCatalog const &catalog,
                                         EntityKind kind, std::string const &external_id);

/// Writes entities.emb, relations.emb, normals.emb (TransH) and manifest.tsv into `dir`.
void save_kg_embeddings(KGEmbeddings const &embeddings, EntityCatalog const &catalog,
                        std::filesystem::path const &dir);

struct LoadedKG {
    KGEmbeddings embeddings;
    EntityCatalog catalog;
};

[[nodiscard]] LoadedKG load_kg_embeddings(std::filesystem::path const &dir);

} // namespace park::kg
