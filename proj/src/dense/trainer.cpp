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

#include "park/dense/trainer.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "park/common/log.hpp"
#include "park/common/parallel.hpp"
#include "park/common/vector_ops.hpp"
#include "park/dense/triplet.hpp"
#include "park/simd/kernels.hpp"

namespace park::dense {

void DenseTrainConfig::validate() const
{
    if (batch_size < 2) {
        throw ConfigError("dense training: batch_size must be at least 2 for in-batch negatives");
    }
    if (!(lr > 0.0)) {
        throw ConfigError("dense training: lr must be positive");
    }
    if (!(margin > 0.0)) {
        throw ConfigError("dense training: margin must be positive");
    }
    if (weight_decay < 0.0) {
        throw ConfigError("dense training: weight_decay must be non-negative");
    }
}

namespace {

struct Forward {
    std::vector<double> unit;
    double norm = 0.0;
};

Forward forward(HashedBowEncoder const &encoder, std::vector<std::uint32_t> const &buckets)
{
    Forward f;
    f.unit.assign(encoder.dim(), 0.0);
    for (auto b : buckets) {
        simd::axpy(1.0, encoder.table().row(b), std::span<double>(f.unit));
    }
    double inv = 1.0 / static_cast<double>(buckets.size());
    for (auto &x : f.unit) {
        x *= inv;
    }
    f.norm = normalize(std::span<double>(f.unit));
    return f;
}

// Pushes dL/d(unit) back through normalization and the mean into the table gradient.
void backward(Forward const &f, std::span<double const> grad_unit, std::vector<std::uint32_t> const &buckets,
              Matrix<float> &grad, std::vector<std::uint8_t> &touched, std::vector<std::uint32_t> &touched_rows)
{
    if (f.norm == 0.0) {
        return;
    }
    double proj = simd::dot(std::span<double const>(f.unit), grad_unit);
    std::vector<double> gx(grad_unit.size());
    double scale = 1.0 / (f.norm * static_cast<double>(buckets.size()));
    for (std::size_t i = 0; i < gx.size(); ++i) {
        gx[i] = (grad_unit[i] - f.unit[i] * proj) * scale;
    }
    for (auto b : buckets) {
        simd::axpy(1.0, std::span<double const>(gx), grad.row(b));
        if (touched[b] == 0) {
            touched[b] = 1;
            touched_rows.push_back(b);
        }
    }
}

} // namespace

std::vector<EpochLog> train_encoder(HashedBowEncoder &encoder, corpus::Corpus const &corpus,
                                    std::span<TrainingPair const> pairs, DenseTrainConfig const &config,
                                    std::function<void(EpochLog const &)> const &on_epoch)
{
    config.validate();
    std::vector<EpochLog> logs;
    if (config.epochs == 0 || pairs.empty()) {
        return logs;
    }

    std::vector<std::vector<std::uint32_t>> query_buckets;
    std::vector<std::size_t> pair_docs;
    std::unordered_map<std::size_t, std::vector<std::uint32_t>> doc_buckets;
    std::size_t skipped = 0;
    for (auto const &p : pairs) {
        expects(p.doc < corpus.size(), "training pair document ordinal out of range");
        auto qb = encoder.buckets_of(p.query);
        auto it = doc_buckets.find(p.doc);
        if (it == doc_buckets.end()) {
            auto const &doc = corpus[p.doc];
            it = doc_buckets.emplace(p.doc, encoder.buckets_of(doc.title + " " + doc.abstract)).first;
        }
        if (qb.empty() || it->second.empty()) {
            ++skipped;
            continue;
        }
        query_buckets.push_back(std::move(qb));
        pair_docs.push_back(p.doc);
    }
    if (skipped > 0) {
        log::warn("dense training: skipped ", skipped, " pairs with empty query or document text");
    }
    std::size_t n = query_buckets.size();
    if (n < 2) {
        throw DataError("dense training: fewer than two usable training pairs");
    }

    auto &table = encoder.table();
    std::size_t dim = table.cols();
    Matrix<float> m(table.rows(), dim);
    Matrix<float> v(table.rows(), dim);
    Matrix<float> grad(table.rows(), dim);
    std::vector<std::uint8_t> touched(table.rows(), 0);
    std::vector<std::uint32_t> touched_rows;

    std::mt19937_64 rng(config.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::size_t step = 0;

    for (std::uint32_t epoch = 1; epoch <= config.epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        double loss_sum = 0.0;
        std::size_t batches = 0;
        for (std::size_t start = 0; start + 1 < n; start += config.batch_size) {
            std::size_t end = std::min(n, start + config.batch_size);
            std::size_t b = end - start;
            std::vector<Forward> fq(b);
            std::vector<Forward> fd(b);
            parallel_for(b, config.threads, [&](std::size_t lo, std::size_t hi, unsigned) {
                for (std::size_t i = lo; i < hi; ++i) {
                    auto idx = order[start + i];
                    fq[i] = forward(encoder, query_buckets[idx]);
                    fd[i] = forward(encoder, doc_buckets.at(pair_docs[idx]));
                }
            });

            // Per-query gradients are kept apart and reduced in index order so the result
            // does not depend on the thread count.
            std::vector<TripletGradient> grads(b);
            std::vector<std::vector<std::size_t>> neg_index(b);
            parallel_for(b, config.threads, [&](std::size_t lo, std::size_t hi, unsigned) {
                for (std::size_t i = lo; i < hi; ++i) {
                    std::vector<VectorView> negatives;
                    for (std::size_t j = 0; j < b; ++j) {
                        if (j != i && pair_docs[order[start + j]] != pair_docs[order[start + i]]) {
                            negatives.emplace_back(fd[j].unit);
                            neg_index[i].push_back(j);
                        }
                    }
                    grads[i] = triplet_loss_gradient(fq[i].unit, fd[i].unit, negatives, config.margin);
                }
            });

            double inv_b = 1.0 / static_cast<double>(b);
            std::vector<std::vector<double>> gq(b, std::vector<double>(dim, 0.0));
            std::vector<std::vector<double>> gd(b, std::vector<double>(dim, 0.0));
            double batch_loss = 0.0;
            for (std::size_t i = 0; i < b; ++i) {
                batch_loss += grads[i].loss;
                simd::axpy(inv_b, std::span<double const>(grads[i].query), std::span<double>(gq[i]));
                simd::axpy(inv_b, std::span<double const>(grads[i].positive), std::span<double>(gd[i]));
                for (std::size_t k = 0; k < neg_index[i].size(); ++k) {
                    simd::axpy(inv_b, std::span<double const>(grads[i].negatives[k]),
                               std::span<double>(gd[neg_index[i][k]]));
                }
            }
            for (std::size_t i = 0; i < b; ++i) {
                auto idx = order[start + i];
                backward(fq[i], gq[i], query_buckets[idx], grad, touched, touched_rows);
                backward(fd[i], gd[i], doc_buckets.at(pair_docs[idx]), grad, touched, touched_rows);
            }

            ++step;
            auto adam = simd::adamw_step_for(static_cast<float>(config.lr), static_cast<float>(config.weight_decay),
                                             step);
            simd::adamw(table.data(), m.data(), v.data(), grad.data(), adam);
            for (auto r : touched_rows) {
                std::ranges::fill(grad.row(r), 0.0F);
                touched[r] = 0;
            }
            touched_rows.clear();

            loss_sum += batch_loss * inv_b;
            ++batches;
        }
        EpochLog entry{epoch, batches > 0 ? loss_sum / static_cast<double>(batches) : 0.0, batches};
        log::info("dense epoch ", epoch, " mean loss ", entry.mean_loss, " over ", batches, " batches");
        logs.push_back(entry);
        if (on_epoch) {
            on_epoch(entry);
        }
    }
    return logs;
}

} // namespace park::dense
