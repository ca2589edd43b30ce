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

#include "park/kg/embed.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "park/common/error.hpp"
#include "park/common/log.hpp"
#include "park/common/parallel.hpp"
#include "park/common/vector_ops.hpp"
#include "park/dense/embedding_io.hpp"
#include "park/simd/kernels.hpp"

namespace park::kg {

std::string_view name(KGModel model) noexcept { return model == KGModel::TransE ? "transe" : "transh"; }

std::optional<KGModel> parse_model(std::string_view text) noexcept
{
    if (text == "transe") {
        return KGModel::TransE;
    }
    if (text == "transh") {
        return KGModel::TransH;
    }
    return std::nullopt;
}

namespace {

void expect_unit(Vec w)
{
    expects(std::abs(norm(w) - 1.0) <= 1e-6, "hyperplane normal must have unit length");
}

} // namespace

double transe_score(Vec h, Vec r, Vec t)
{
    expects(h.size() == r.size() && h.size() == t.size(), "transe_score: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        double e = h[i] + r[i] - t[i];
        s += e * e;
    }
    return std::sqrt(s);
}

std::vector<double> transh_project(Vec v, Vec w)
{
    expects(v.size() == w.size(), "transh_project: dimension mismatch");
    expect_unit(w);
    double s = simd::dot(v, w);
    std::vector<double> out(v.begin(), v.end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= s * w[i];
    }
    return out;
}

double transh_score(Vec h, Vec t, Vec w, Vec d)
{
    expects(h.size() == t.size() && h.size() == d.size(), "transh_score: dimension mismatch");
    auto hp = transh_project(h, w);
    auto tp = transh_project(t, w);
    return transe_score(hp, d, tp);
}

double score_gradient(KGModel model, TripleVectors const &v, TripleGradient &grad)
{
    auto n = v.head.size();
    expects(v.relation.size() == n && v.tail.size() == n, "triple vectors: dimension mismatch");
    grad.head.assign(n, 0.0);
    grad.relation.assign(n, 0.0);
    grad.tail.assign(n, 0.0);
    // The relation gradient equals the unit residual in both models, so the residual lives there.
    auto &e = grad.relation;
    double s = 0.0;
    if (model == KGModel::TransH) {
        expects(v.normal.size() == n, "triple vectors: TransH needs a normal");
        grad.normal.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            s += v.normal[i] * (v.head[i] - v.tail[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = v.head[i] - v.tail[i] - s * v.normal[i] + v.relation[i];
        }
    } else {
        grad.normal.clear();
        for (std::size_t i = 0; i < n; ++i) {
            e[i] = v.head[i] + v.relation[i] - v.tail[i];
        }
    }
    double f = norm(std::span<double const>(e));
    if (f == 0.0) {
        return 0.0;
    }
    for (auto &x : e) {
        x /= f;
    }
    if (model == KGModel::TransE) {
        for (std::size_t i = 0; i < n; ++i) {
            grad.head[i] = e[i];
            grad.tail[i] = -e[i];
        }
        return f;
    }
    double uw = simd::dot(std::span<double const>(e), v.normal);
    for (std::size_t i = 0; i < n; ++i) {
        double gh = e[i] - uw * v.normal[i];
        grad.head[i] = gh;
        grad.tail[i] = -gh;
        grad.normal[i] = -uw * (v.head[i] - v.tail[i]) - s * e[i];
    }
    return f;
}

namespace {

void margin_ranking_gradient_into(KGModel model, TripleVectors const &positive, TripleVectors const &negative,
                                  double margin, MarginGradient &out)
{
    out.loss = 0.0;
    double fp = score_gradient(model, positive, out.positive);
    double fn = score_gradient(model, negative, out.negative);
    double hinge = margin + fp - fn;
    if (hinge <= 0.0) {
        for (auto *g : {&out.positive, &out.negative}) {
            std::ranges::fill(g->head, 0.0);
            std::ranges::fill(g->relation, 0.0);
            std::ranges::fill(g->tail, 0.0);
            std::ranges::fill(g->normal, 0.0);
        }
        return;
    }
    out.loss = hinge;
    for (auto *v : {&out.negative.head, &out.negative.relation, &out.negative.tail, &out.negative.normal}) {
        for (auto &x : *v) {
            x = -x;
        }
    }
}

} // namespace

MarginGradient margin_ranking_gradient(KGModel model, TripleVectors const &positive, TripleVectors const &negative,
                                       double margin)
{
    MarginGradient out;
    margin_ranking_gradient_into(model, positive, negative, margin, out);
    return out;
}

double orthogonality_penalty(Vec w, Vec d, double eps, double weight, std::span<double> grad_w,
                             std::span<double> grad_d)
{
    expects(w.size() == d.size() && grad_w.size() == w.size() && grad_d.size() == d.size(),
            "orthogonality_penalty: dimension mismatch");
    double p = simd::dot(w, d);
    double q = simd::dot(d, d);
    if (q == 0.0) {
        return 0.0;
    }
    double value = p * p / q - eps * eps;
    if (value <= 0.0) {
        return 0.0;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        grad_w[i] += weight * 2.0 * p * d[i] / q;
        grad_d[i] += weight * (2.0 * p * w[i] / q - 2.0 * p * p * d[i] / (q * q));
    }
    return value;
}

namespace {

std::uint64_t key_of(Triple const &t)
{
    return (static_cast<std::uint64_t>(t.head) << 35) | (static_cast<std::uint64_t>(t.relation) << 32) | t.tail;
}

} // namespace

TripleSet::TripleSet(std::span<Triple const> triples)
{
    m_keys.reserve(triples.size());
    for (auto const &t : triples) {
        insert(t);
    }
}

void TripleSet::insert(Triple const &t)
{
    expects(t.head < (1U << 29), "entity ordinal too large for the triple key");
    m_keys.insert(key_of(t));
}

bool TripleSet::contains(Triple const &t) const { return m_keys.contains(key_of(t)); }

NegativeSample sample_negative(Triple const &positive, EntityCatalog const &catalog, TripleSet const &known,
                               std::mt19937_64 &rng)
{
    std::bernoulli_distribution coin(0.5);
    NegativeSample out{positive, coin(rng), false};
    auto pool = catalog.of_kind(out.corrupted_head ? head_kind(positive.relation) : tail_kind(positive.relation));
    if (pool.empty()) {
        return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Triple candidate = positive;
        (out.corrupted_head ? candidate.head : candidate.tail) = pool[pick(rng)];
        if (!known.contains(candidate)) {
            out.triple = candidate;
            out.ok = true;
            return out;
        }
    }
    return out;
}

void KGTrainConfig::validate() const
{
    if (!(margin > 0.0)) {
        throw ConfigError("kg training: margin must be positive");
    }
    if (!(lr > 0.0)) {
        throw ConfigError("kg training: lr must be positive");
    }
    if (weight_decay < 0.0) {
        throw ConfigError("kg training: weight_decay must be non-negative");
    }
    if (batch_size == 0 || negatives == 0) {
        throw ConfigError("kg training: batch_size and negatives must be positive");
    }
    if (soft_weight < 0.0 || !(soft_epsilon > 0.0)) {
        throw ConfigError("kg training: soft_weight must be non-negative and soft_epsilon positive");
    }
}

namespace {

void uniform_unit_rows(Matrix<float> &m, std::size_t first, std::size_t last, std::mt19937_64 &rng)
{
    double bound = 6.0 / std::sqrt(static_cast<double>(m.cols()));
    std::uniform_real_distribution<double> u(-bound, bound);
    for (std::size_t r = first; r < last; ++r) {
        auto row = m.row(r);
        for (auto &x : row) {
            x = static_cast<float>(u(rng));
        }
        normalize(row);
    }
}

std::vector<double> widen_row(Matrix<float> const &m, std::size_t r)
{
    auto row = m.row(r);
    return {row.begin(), row.end()};
}

// Contiguous [begin, end) ranges of trainable entity rows.
std::vector<std::pair<std::size_t, std::size_t>> trainable_runs(std::vector<std::uint8_t> const &frozen)
{
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t i = 0;
    while (i < frozen.size()) {
        if (frozen[i] != 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < frozen.size() && frozen[j] == 0) {
            ++j;
        }
        runs.emplace_back(i, j);
        i = j;
    }
    return runs;
}

void widen_into(Matrix<float> const &m, std::size_t r, std::vector<double> &out)
{
    auto row = m.row(r);
    out.assign(row.begin(), row.end());
}

struct Scratch {
    std::vector<double> rel, w, ph, pt, nh, nt;
};

struct PairWork {
    Triple positive;
    Triple negative;
};

TripleVectors view_of(std::vector<double> const &h, std::vector<double> const &r, std::vector<double> const &t,
                      std::vector<double> const &w)
{
    return {h, r, t, w};
}

} // namespace

KGEmbeddings initialize_kg(EntityCatalog const &catalog, corpus::Corpus const &corpus,
                           dense::DocEmbeddingStore const &docs, KGModel model, std::uint64_t seed)
{
    if (docs.size() != corpus.size()) {
        throw ConfigError("kg: document store has " + std::to_string(docs.size()) + " rows but the corpus has "
                          + std::to_string(corpus.size()) + " documents");
    }
    if (docs.dim() == 0) {
        throw ConfigError("kg: document store has zero dimension");
    }
    auto dim = docs.dim();
    KGEmbeddings e;
    e.model = model;
    e.entities = Matrix<float>(catalog.size(), dim);
    e.relations = Matrix<float>(kRelationTypes, dim);
    e.frozen.assign(catalog.size(), 0);

    std::mt19937_64 rng(seed);
    for (EntityId id = 0; id < catalog.size(); ++id) {
        if (catalog.kind(id) == EntityKind::Document) {
            auto pos = corpus.find(catalog.external_id(id));
            if (!pos) {
                throw ConfigError("kg: document entity '" + catalog.external_id(id) + "' has no embedding row");
            }
            auto src = docs.row(*pos);
            std::ranges::copy(src, e.entities.row(id).begin());
            e.frozen[id] = 1;
        } else {
            uniform_unit_rows(e.entities, id, id + 1, rng);
        }
    }
    uniform_unit_rows(e.relations, 0, kRelationTypes, rng);
    if (model == KGModel::TransH) {
        e.normals = Matrix<float>(kRelationTypes, dim);
        uniform_unit_rows(e.normals, 0, kRelationTypes, rng);
    }
    return e;
}

namespace {

// Relations that share a trainable entity, with everything needed to train them on their own.
struct TrainingBlock {
    std::vector<std::size_t> relations;
    std::vector<std::size_t> triples;
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::mt19937_64 rng;
    std::size_t step = 0;
};

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// With document rows frozen the loss splits into independent parts; each part gets its own
// shuffle, sampler stream and optimizer clock so adding an unrelated relation cannot perturb it.
std::vector<TrainingBlock> training_blocks(std::span<Triple const> triples, std::vector<std::uint8_t> const &frozen,
                                           std::uint64_t seed)
{
    std::vector<std::size_t> parent(kRelationTypes);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::vector<std::int64_t> owner(frozen.size(), -1);
    std::vector<bool> used(kRelationTypes, false);
    for (auto const &t : triples) {
        auto r = static_cast<std::size_t>(t.relation);
        used[r] = true;
        for (auto e : {t.head, t.tail}) {
            if (frozen[e] != 0) {
                continue;
            }
            if (owner[e] < 0) {
                owner[e] = static_cast<std::int64_t>(r);
            } else {
                auto a = find_root(parent, static_cast<std::size_t>(owner[e]));
                auto b = find_root(parent, r);
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }

    std::vector<TrainingBlock> blocks;
    std::vector<std::size_t> block_of(kRelationTypes, 0);
    for (std::size_t r = 0; r < kRelationTypes; ++r) {
        if (!used[r]) {
            continue;
        }
        auto root = find_root(parent, r);
        if (root == r) {
            block_of[r] = blocks.size();
            blocks.emplace_back();
        } else {
            block_of[r] = block_of[root];
        }
        blocks[block_of[r]].relations.push_back(r);
    }
    for (std::size_t i = 0; i < triples.size(); ++i) {
        blocks[block_of[static_cast<std::size_t>(triples[i].relation)]].triples.push_back(i);
    }
    for (auto &b : blocks) {
        std::uint64_t mask = 0;
        for (auto r : b.relations) {
            mask |= std::uint64_t{1} << r;
        }
        b.rng.seed(seed ^ 0x9e3779b97f4a7c15ULL ^ (mask * 0xbf58476d1ce4e5b9ULL));
        std::vector<std::uint8_t> outside(frozen.size(), 1);
        for (std::size_t e = 0; e < frozen.size(); ++e) {
            if (owner[e] >= 0 && block_of[static_cast<std::size_t>(owner[e])] == static_cast<std::size_t>(&b - blocks.data())) {
                outside[e] = 0;
            }
        }
        b.runs = trainable_runs(outside);
    }
    return blocks;
}

} // namespace

std::vector<KGEpochLog> train_kg(KGEmbeddings &emb, std::span<Triple const> triples, EntityCatalog const &catalog,
                                 KGTrainConfig const &config, KGEpochObserver const &observer)
{
    config.validate();
    expects(emb.entities.rows() == catalog.size(), "kg embeddings do not match the catalog");
    expects(config.model == emb.model, "kg training model differs from the initialized model");
    check_kinds(triples, catalog);
    std::vector<KGEpochLog> logs;
    if (config.epochs == 0 || triples.empty()) {
        return logs;
    }
    bool transh = emb.model == KGModel::TransH;
    auto dim = emb.dim();
    TripleSet known(triples);
    auto blocks = training_blocks(triples, emb.frozen, config.seed);

    Matrix<float> ge(emb.entities.rows(), dim);
    Matrix<float> gr(kRelationTypes, dim);
    Matrix<float> gw(transh ? kRelationTypes : 0, dim);
    Matrix<float> me(emb.entities.rows(), dim);
    Matrix<float> ve(emb.entities.rows(), dim);
    Matrix<float> mr(kRelationTypes, dim);
    Matrix<float> vr(kRelationTypes, dim);
    Matrix<float> mw(gw.rows(), dim);
    Matrix<float> vw(gw.rows(), dim);
    std::vector<MarginGradient> results;
    std::vector<Scratch> scratch(std::max(1U, config.threads));

    auto row_span = [dim](Matrix<float> &m, std::size_t lo, std::size_t hi) {
        return m.data().subspan(lo * dim, (hi - lo) * dim);
    };

    for (std::uint32_t epoch = 1; epoch <= config.epochs; ++epoch) {
        KGEpochLog log_entry{epoch, 0.0, 0, 0};
        double loss_sum = 0.0;
        for (auto &block : blocks) {
            auto &order = block.triples;
            std::shuffle(order.begin(), order.end(), block.rng);
            for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
                std::size_t end = std::min(order.size(), start + config.batch_size);
                std::vector<PairWork> work;
                work.reserve((end - start) * config.negatives);
                for (std::size_t i = start; i < end; ++i) {
                    auto const &pos = triples[order[i]];
                    for (std::uint32_t k = 0; k < config.negatives; ++k) {
                        auto neg = sample_negative(pos, catalog, known, block.rng);
                        if (!neg.ok) {
                            ++log_entry.failed_negatives;
                            continue;
                        }
                        work.push_back({pos, neg.triple});
                    }
                }
                if (work.empty()) {
                    continue;
                }
                results.resize(work.size());
                parallel_for(work.size(), config.threads, [&](std::size_t lo, std::size_t hi, unsigned worker) {
                    auto &sc = scratch[worker];
                    for (std::size_t i = lo; i < hi; ++i) {
                        auto const &p = work[i];
                        auto r = static_cast<std::size_t>(p.positive.relation);
                        widen_into(emb.relations, r, sc.rel);
                        if (transh) {
                            widen_into(emb.normals, r, sc.w);
                        }
                        widen_into(emb.entities, p.positive.head, sc.ph);
                        widen_into(emb.entities, p.positive.tail, sc.pt);
                        widen_into(emb.entities, p.negative.head, sc.nh);
                        widen_into(emb.entities, p.negative.tail, sc.nt);
                        margin_ranking_gradient_into(emb.model, view_of(sc.ph, sc.rel, sc.pt, sc.w),
                                                     view_of(sc.nh, sc.rel, sc.nt, sc.w), config.margin, results[i]);
                    }
                });

                for (auto [lo, hi] : block.runs) {
                    std::ranges::fill(row_span(ge, lo, hi), 0.0F);
                }
                for (auto r : block.relations) {
                    std::ranges::fill(gr.row(r), 0.0F);
                    if (transh) {
                        std::ranges::fill(gw.row(r), 0.0F);
                    }
                }
                double scale = 1.0 / static_cast<double>(work.size());
                for (std::size_t i = 0; i < work.size(); ++i) {
                    auto const &g = results[i];
                    if (g.loss == 0.0) {
                        continue;
                    }
                    loss_sum += g.loss;
                    auto const &p = work[i];
                    auto r = static_cast<std::size_t>(p.positive.relation);
                    for (auto const &[t, tg] :
                         {std::pair{&p.positive, &g.positive}, std::pair{&p.negative, &g.negative}}) {
                        // Frozen rows are never read back from the gradient buffer.
                        if (emb.frozen[t->head] == 0) {
                            simd::axpy(scale, std::span<double const>(tg->head), ge.row(t->head));
                        }
                        if (emb.frozen[t->tail] == 0) {
                            simd::axpy(scale, std::span<double const>(tg->tail), ge.row(t->tail));
                        }
                        simd::axpy(scale, std::span<double const>(tg->relation), gr.row(r));
                        if (transh) {
                            simd::axpy(scale, std::span<double const>(tg->normal), gw.row(r));
                        }
                    }
                }
                log_entry.pairs += work.size();

                if (transh && config.soft_weight > 0.0) {
                    std::vector<double> pw(dim);
                    std::vector<double> pd(dim);
                    for (auto r : block.relations) {
                        std::ranges::fill(pw, 0.0);
                        std::ranges::fill(pd, 0.0);
                        auto w = widen_row(emb.normals, r);
                        auto d = widen_row(emb.relations, r);
                        (void)orthogonality_penalty(w, d, config.soft_epsilon, config.soft_weight, pw, pd);
                        simd::axpy(1.0, std::span<double const>(pw), gw.row(r));
                        simd::axpy(1.0, std::span<double const>(pd), gr.row(r));
                    }
                }

                ++block.step;
                auto adam = simd::adamw_step_for(static_cast<float>(config.lr),
                                                 static_cast<float>(config.weight_decay), block.step);
                for (auto [lo, hi] : block.runs) {
                    simd::adamw(row_span(emb.entities, lo, hi), row_span(me, lo, hi), row_span(ve, lo, hi),
                                row_span(ge, lo, hi), adam);
                    for (std::size_t row = lo; row < hi; ++row) {
                        auto v = emb.entities.row(row);
                        if (norm(std::span<float const>(v)) > 1.0) {
                            normalize(v);
                        }
                    }
                }
                for (auto r : block.relations) {
                    simd::adamw(emb.relations.row(r), mr.row(r), vr.row(r), gr.row(r), adam);
                    if (transh) {
                        simd::adamw(emb.normals.row(r), mw.row(r), vw.row(r), gw.row(r), adam);
                        normalize(emb.normals.row(r));
                    }
                }
            }
        }
        log_entry.mean_loss = log_entry.pairs > 0 ? loss_sum / static_cast<double>(log_entry.pairs) : 0.0;
        log::info("kg epoch ", epoch, " mean loss ", log_entry.mean_loss, " pairs ", log_entry.pairs);
        if (log_entry.failed_negatives > 0) {
            log::warn("kg epoch ", epoch, ": ", log_entry.failed_negatives, " positives had no valid corruption");
        }
        logs.push_back(log_entry);
        if (observer) {
            observer(log_entry, emb);
        }
    }
    return logs;
}

namespace {

// Precomputed left side of a triple score: h + r (TransE) or project(h) + d (TransH).
std::vector<double> left_side(KGEmbeddings const &emb, EntityId head, RelationType relation)
{
    auto r = static_cast<std::size_t>(relation);
    auto h = widen_row(emb.entities, head);
    auto rel = widen_row(emb.relations, r);
    if (emb.model == KGModel::TransH) {
        auto w = widen_row(emb.normals, r);
        double s = simd::dot(std::span<double const>(h), std::span<double const>(w));
        for (std::size_t i = 0; i < h.size(); ++i) {
            h[i] -= s * w[i];
        }
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] += rel[i];
    }
    return h;
}

double right_distance(KGEmbeddings const &emb, std::span<double const> left, EntityId tail,
                      std::span<double const> w)
{
    auto t = emb.entities.row(tail);
    double s = 0.0;
    if (!w.empty()) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            s += w[i] * static_cast<double>(t[i]);
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        double tp = static_cast<double>(t[i]) - (w.empty() ? 0.0 : s * w[i]);
        double e = left[i] - tp;
        sum += e * e;
    }
    return std::sqrt(sum);
}

} // namespace

double triple_score(KGEmbeddings const &emb, Triple const &t)
{
    auto left = left_side(emb, t.head, t.relation);
    std::vector<double> w;
    if (emb.model == KGModel::TransH) {
        w = widen_row(emb.normals, static_cast<std::size_t>(t.relation));
    }
    return right_distance(emb, left, t.tail, w);
}

double filtered_mean_rank(KGEmbeddings const &emb, EntityCatalog const &catalog, std::span<Triple const> targets,
                          TripleSet const &known, unsigned threads)
{
    expects(!targets.empty(), "filtered_mean_rank: no targets");
    std::vector<double> ranks(targets.size());
    parallel_for(targets.size(), threads, [&](std::size_t lo, std::size_t hi, unsigned) {
        for (std::size_t i = lo; i < hi; ++i) {
            auto const &t = targets[i];
            auto left = left_side(emb, t.head, t.relation);
            std::vector<double> w;
            if (emb.model == KGModel::TransH) {
                w = widen_row(emb.normals, static_cast<std::size_t>(t.relation));
            }
            double truth = right_distance(emb, left, t.tail, w);
            std::size_t better = 0;
            for (auto c : catalog.of_kind(tail_kind(t.relation))) {
                if (c == t.tail) {
                    continue;
                }
                if (right_distance(emb, left, c, w) < truth && !known.contains({t.head, t.relation, c})) {
                    ++better;
                }
            }
            ranks[i] = static_cast<double>(better + 1);
        }
    });
    return std::accumulate(ranks.begin(), ranks.end(), 0.0) / static_cast<double>(ranks.size());
}

EntityVector entity_vector(KGEmbeddings const &emb, EntityCatalog const &catalog, EntityKind kind,
                           std::string const &external_id)
{
    auto id = catalog.at(kind, external_id);
    return {emb.entities.row(id), emb.frozen.at(id) != 0};
}

void save_kg_embeddings(KGEmbeddings const &emb, EntityCatalog const &catalog, std::filesystem::path const &dir)
{
    std::filesystem::create_directories(dir);
    dense::save_embedding_matrix(emb.entities, dir / "entities.emb");
    dense::save_embedding_matrix(emb.relations, dir / "relations.emb");
    if (emb.model == KGModel::TransH) {
        dense::save_embedding_matrix(emb.normals, dir / "normals.emb");
    }
    std::ofstream out(dir / "manifest.tsv", std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + (dir / "manifest.tsv").string());
    }
    out << "model\t" << name(emb.model) << "\ndim\t" << emb.dim() << '\n';
    for (std::size_t r = 0; r < kRelationTypes; ++r) {
        out << "relation\t" << r << '\t' << name(static_cast<RelationType>(r)) << '\n';
    }
    for (EntityId id = 0; id < catalog.size(); ++id) {
        out << "entity\t" << id << '\t' << name(catalog.kind(id)) << '\t' << catalog.external_id(id) << '\t'
            << static_cast<int>(emb.frozen[id]) << '\n';
    }
}

LoadedKG load_kg_embeddings(std::filesystem::path const &dir)
{
    auto manifest = dir / "manifest.tsv";
    std::ifstream in(manifest);
    if (!in) {
        throw MissingArtifact("missing KG embedding manifest " + manifest.string());
    }
    LoadedKG out;
    std::optional<KGModel> model;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tag;
        std::getline(fields, tag, '\t');
        if (tag == "model") {
            std::string m;
            std::getline(fields, m, '\t');
            model = parse_model(m);
            if (!model) {
                throw ParseError("unknown KG model '" + m + "'", line_no);
            }
        } else if (tag == "entity") {
            std::string ord;
            std::string kind;
            std::string id;
            std::string frozen;
            std::getline(fields, ord, '\t');
            std::getline(fields, kind, '\t');
            std::getline(fields, id, '\t');
            std::getline(fields, frozen, '\t');
            auto k = parse_kind(kind);
            if (!k || ord != std::to_string(out.catalog.size()) || (frozen != "0" && frozen != "1")) {
                throw ParseError("malformed entity line", line_no);
            }
            out.catalog.add(*k, id);
            out.embeddings.frozen.push_back(frozen == "1" ? 1 : 0);
        } else if (tag != "dim" && tag != "relation" && !tag.empty()) {
            throw ParseError("unknown manifest entry '" + tag + "'", line_no);
        }
    }
    if (!model) {
        throw ParseError("manifest has no model line", line_no);
    }
    out.embeddings.model = *model;
    out.embeddings.entities = dense::load_embedding_matrix(dir / "entities.emb");
    out.embeddings.relations = dense::load_embedding_matrix(dir / "relations.emb");
    if (*model == KGModel::TransH) {
        out.embeddings.normals = dense::load_embedding_matrix(dir / "normals.emb");
    }
    if (out.embeddings.entities.rows() != out.catalog.size()) {
        throw DataError(dir.string() + ": manifest lists " + std::to_string(out.catalog.size())
                        + " entities but entities.emb has " + std::to_string(out.embeddings.entities.rows()));
    }
    if (out.embeddings.relations.rows() != kRelationTypes
        || out.embeddings.relations.cols() != out.embeddings.entities.cols()) {
        throw DataError(dir.string() + ": relations.emb has the wrong shape");
    }
    return out;
}

} // namespace park::kg
