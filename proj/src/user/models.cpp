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

#include "park/user/models.hpp"

#include <algorithm>
#include <cmath>

#include "park/common/vector_ops.hpp"

namespace park::user {

std::optional<Aggregation> parse_aggregation(std::string_view text) noexcept
{
    if (text == "max") {
        return Aggregation::Max;
    }
    if (text == "mean") {
        return Aggregation::Mean;
    }
    return std::nullopt;
}

UserDirectory::UserDirectory(corpus::Corpus const &corpus, std::span<std::size_t const> profile_docs)
{
    for (auto pos : profile_docs) {
        auto const &doc = corpus[pos];
        for (auto const &a : doc.author_ids) {
            auto &ctx = m_users[a];
            ctx.user_id = a;
            ctx.authored.push_back(pos);
            for (auto const &other : doc.author_ids) {
                if (other != a) {
                    ctx.coauthors.insert(other);
                }
            }
        }
    }
    for (auto &[id, ctx] : m_users) {
        std::ranges::sort(ctx.authored);
        auto dup = std::ranges::unique(ctx.authored);
        ctx.authored.erase(dup.begin(), dup.end());
    }
}

UserContext const *UserDirectory::find(std::string const &user_id) const
{
    auto it = m_users.find(user_id);
    return it == m_users.end() ? nullptr : &it->second;
}

ParkUserModel::ParkUserModel(kg::KGEmbeddings const &embeddings, kg::EntityCatalog const &catalog,
                             std::span<kg::Triple const> triples, Aggregation mode)
    : m_embeddings(&embeddings), m_catalog(&catalog), m_known(catalog.size(), 0), m_mode(mode)
{
    expects(embeddings.entities.rows() == catalog.size(), "user model: embeddings do not match the catalog");
    for (auto const &t : triples) {
        m_known.at(t.head) = 1;
    }
}

std::optional<kg::EntityId> ParkUserModel::known_id(std::string const &user_id) const
{
    auto id = m_catalog->find(kg::EntityKind::User, user_id);
    if (!id || m_known[*id] == 0) {
        return std::nullopt;
    }
    return id;
}

bool ParkUserModel::known(std::string const &user_id) const { return known_id(user_id).has_value(); }

UserScore ParkUserModel::score(std::string const &query_user, std::span<std::string const> candidate_authors) const
{
    auto q = known_id(query_user);
    if (!q) {
        return {0.0, ScoreStatus::UnknownUser};
    }
    auto qv = widen(m_embeddings->entities.row(*q));
    double best = -2.0;
    double sum = 0.0;
    std::size_t count = 0;
    for (auto const &a : candidate_authors) {
        auto id = known_id(a);
        if (!id) {
            continue;
        }
        double c = cosine(qv, widen(m_embeddings->entities.row(*id)));
        best = std::max(best, c);
        sum += c;
        ++count;
    }
    if (count == 0) {
        return {0.0, ScoreStatus::NoKnownAuthors};
    }
    return {m_mode == Aggregation::Max ? best : sum / static_cast<double>(count), ScoreStatus::Ok};
}

std::vector<double> apply_floor(std::span<UserScore const> scores)
{
    std::vector<double> out(scores.size(), 0.0);
    std::optional<double> floor;
    for (auto const &s : scores) {
        if (s.status == ScoreStatus::Ok) {
            floor = floor ? std::min(*floor, s.score) : s.score;
        }
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
        switch (scores[i].status) {
        case ScoreStatus::Ok:
            out[i] = scores[i].score;
            break;
        case ScoreStatus::NoKnownAuthors:
            out[i] = floor.value_or(0.0);
            break;
        case ScoreStatus::UnknownUser:
            out[i] = 0.0;
            break;
        }
    }
    return out;
}

std::optional<std::vector<double>> mean_user_vector(dense::DocEmbeddingStore const &docs, UserContext const &user)
{
    if (user.authored.empty()) {
        return std::nullopt;
    }
    std::vector<double> v(docs.dim(), 0.0);
    for (auto pos : user.authored) {
        simd::axpy(1.0, docs.row(pos), std::span<double>(v));
    }
    for (auto &x : v) {
        x /= static_cast<double>(user.authored.size());
    }
    normalize(std::span<double>(v));
    return v;
}

std::vector<double> attention_weights(std::span<double const> query, dense::DocEmbeddingStore const &docs,
                                      UserContext const &user)
{
    expects(query.size() == docs.dim(), "attention: dimension mismatch");
    std::vector<double> logits;
    logits.reserve(user.authored.size());
    double scale = 1.0 / std::sqrt(static_cast<double>(docs.dim()));
    for (auto pos : user.authored) {
        logits.push_back(dense::dense_score(query, docs.row(pos)) * scale);
    }
    if (logits.empty()) {
        return logits;
    }
    double top = *std::ranges::max_element(logits);
    double sum = 0.0;
    for (auto &x : logits) {
        x = std::exp(x - top);
        sum += x;
    }
    for (auto &x : logits) {
        x /= sum;
    }
    return logits;
}

std::optional<std::vector<double>> attention_user_vector(std::span<double const> query,
                                                         dense::DocEmbeddingStore const &docs, UserContext const &user)
{
    if (user.authored.empty()) {
        return std::nullopt;
    }
    auto alpha = attention_weights(query, docs, user);
    std::vector<double> v(docs.dim(), 0.0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        simd::axpy(alpha[i], docs.row(user.authored[i]), std::span<double>(v));
    }
    normalize(std::span<double>(v));
    return v;
}

double profile_score(std::span<double const> user_vector, dense::DocEmbeddingStore const &docs, std::size_t candidate)
{
    return cosine(user_vector, widen(docs.row(candidate)));
}

double attention_user_score(std::span<double const> query, UserContext const &user,
                            dense::DocEmbeddingStore const &docs, std::size_t candidate)
{
    auto v = attention_user_vector(query, docs, user);
    return v ? profile_score(*v, docs, candidate) : 0.0;
}

double self_citation_score(UserContext const &user, std::span<std::string const> candidate_authors)
{
    for (auto const &a : candidate_authors) {
        if (a == user.user_id || user.coauthors.contains(a)) {
            return 1.0;
        }
    }
    return 0.0;
}

} // namespace park::user
