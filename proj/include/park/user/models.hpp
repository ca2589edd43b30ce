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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "park/corpus/types.hpp"
#include "park/dense/store.hpp"
#include "park/kg/embed.hpp"

namespace park::user {

enum class Aggregation : std::uint8_t { Max, Mean };

[[nodiscard]] std::optional<Aggregation> parse_aggregation(std::string_view text) noexcept;

/// What a user did before the cutoff.
struct UserContext {
    std::string user_id;
    std::vector<std::size_t> authored;
    std::set<std::string> coauthors;
};

/// Contexts of every author of the given (pre-cutoff) documents.
class UserDirectory {
  public:
    UserDirectory(corpus::Corpus const &corpus, std::span<std::size_t const> profile_docs);
    [[nodiscard]] UserContext const *find(std::string const &user_id) const;
    [[nodiscard]] std::size_t size() const noexcept { return m_users.size(); }

  private:
    std::unordered_map<std::string, UserContext> m_users;
};

enum class ScoreStatus : std::uint8_t { Ok, UnknownUser, NoKnownAuthors };

struct UserScore {
    double score = 0.0;
    ScoreStatus status = ScoreStatus::Ok;
};

/// PARK user similarity: cosine between the query user's KG vector and each candidate
/// author's vector, aggregated over authors. Users are known when they head at least one
/// training triple.
class ParkUserModel {
  public:
    ParkUserModel(kg::KGEmbeddings const &embeddings, kg::EntityCatalog const &catalog,
                  std::span<kg::Triple const> triples, Aggregation mode = Aggregation::Max);

    [[nodiscard]] bool known(std::string const &user_id) const;
    [[nodiscard]] UserScore score(std::string const &query_user, std::span<std::string const> candidate_authors) const;

  private:
    std::optional<kg::EntityId> known_id(std::string const &user_id) const;

    kg::KGEmbeddings const *m_embeddings;
    kg::EntityCatalog const *m_catalog;
    std::vector<std::uint8_t> m_known;
    Aggregation m_mode;
};

/// Resolves per-candidate statuses for one query: NoKnownAuthors candidates take the
/// minimum Ok score (0 when there is none); UnknownUser leaves every candidate at 0.
[[nodiscard]] std::vector<double> apply_floor(std::span<UserScore const> scores);

/// L2-normalized mean of the user's authored document rows; nullopt without authored docs.
[[nodiscard]] std::optional<std::vector<double>> mean_user_vector(dense::DocEmbeddingStore const &docs,
                                                                  UserContext const &user);

/// Scaled dot-product attention weights softmax(q.d_i / sqrt(dim)) over the authored rows.
[[nodiscard]] std::vector<double> attention_weights(std::span<double const> query, dense::DocEmbeddingStore const &docs,
                                                    UserContext const &user);

/// Attention-weighted user vector, L2-normalized; nullopt without authored docs.
[[nodiscard]] std::optional<std::vector<double>> attention_user_vector(std::span<double const> query,
                                                                       dense::DocEmbeddingStore const &docs,
                                                                       UserContext const &user);

/// Cosine between a user vector and a candidate row.
[[nodiscard]] double profile_score(std::span<double const> user_vector, dense::DocEmbeddingStore const &docs,
                                   std::size_t candidate);

[[nodiscard]] double attention_user_score(std::span<double const> query, UserContext const &user,
                                          dense::DocEmbeddingStore const &docs, std::size_t candidate);

/// 1 when a candidate author is the user or one of their pre-cutoff co-authors.
[[nodiscard]] double self_citation_score(UserContext const &user, std::span<std::string const> candidate_authors);

} // namespace park::user
