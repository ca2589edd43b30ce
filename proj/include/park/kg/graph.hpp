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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "park/corpus/types.hpp"

namespace park::kg {

enum class EntityKind : std::uint8_t { User, Document, Venue, Affiliation };
inline constexpr std::size_t kEntityKinds = 4;

enum class RelationType : std::uint8_t { Wrote, Cited, InVenue, Affiliated, CoAuthor };
inline constexpr std::size_t kRelationTypes = 5;
inline constexpr std::array<RelationType, kRelationTypes> kAllRelations{
    RelationType::Wrote, RelationType::Cited, RelationType::InVenue, RelationType::Affiliated, RelationType::CoAuthor};

[[nodiscard]] std::string_view name(EntityKind kind) noexcept;
[[nodiscard]] std::string_view name(RelationType relation) noexcept;
/// Inverse of name(); nullopt for unknown text.
[[nodiscard]] std::optional<EntityKind> parse_kind(std::string_view text) noexcept;
[[nodiscard]] std::optional<RelationType> parse_relation(std::string_view text) noexcept;

/// Kind of head and tail a relation accepts. Every relation starts at a User.
[[nodiscard]] EntityKind head_kind(RelationType relation) noexcept;
[[nodiscard]] EntityKind tail_kind(RelationType relation) noexcept;
[[nodiscard]] constexpr bool symmetric(RelationType relation) noexcept { return relation == RelationType::CoAuthor; }

using EntityId = std::uint32_t;

struct Triple {
    EntityId head = 0;
    RelationType relation = RelationType::Wrote;
    EntityId tail = 0;

    friend auto operator<=>(Triple const &, Triple const &) = default;
};

struct KGConfig {
    bool include_venue = true;
    bool include_affiliation = true;
    /// Cited triples towards documents the user also wrote.
    bool include_self_citations = false;
};

/// (kind, external id) <-> contiguous entity ordinal. Ordinals are assigned kind by kind
/// (User, Document, Venue, Affiliation), sorted by external id within a kind.
class EntityCatalog {
  public:
    [[nodiscard]] std::size_t size() const noexcept { return m_entities.size(); }
    [[nodiscard]] EntityKind kind(EntityId id) const { return m_entities.at(id).first; }
    [[nodiscard]] std::string const &external_id(EntityId id) const { return m_entities.at(id).second; }
    [[nodiscard]] std::optional<EntityId> find(EntityKind kind, std::string const &external_id) const;
    /// Throws DataError naming the entity when it is absent.
    [[nodiscard]] EntityId at(EntityKind kind, std::string const &external_id) const;
    /// Ordinals of one kind, ascending (a contiguous range).
    [[nodiscard]] std::span<EntityId const> of_kind(EntityKind kind) const noexcept
    {
        return m_by_kind[static_cast<std::size_t>(kind)];
    }

    /// Appends an entity; duplicates are a DataError.
    EntityId add(EntityKind kind, std::string external_id);

    friend bool operator==(EntityCatalog const &a, EntityCatalog const &b) { return a.m_entities == b.m_entities; }

  private:
    std::vector<std::pair<EntityKind, std::string>> m_entities;
    std::array<std::vector<EntityId>, kEntityKinds> m_by_kind;
    std::array<std::unordered_map<std::string, EntityId>, kEntityKinds> m_lookup;
};

/// All documents and authors; venues and affiliations only when enabled. Authors referenced
/// by documents but missing from `authors` are still cataloged.
[[nodiscard]] EntityCatalog build_catalog(corpus::Corpus const &corpus, std::vector<corpus::Author> const &authors,
                                          KGConfig const &config);

/// Sorted, deduplicated triples extracted from `source_docs` (document ordinals, normally
/// the pre-cutoff profile documents). Affiliated triples come from author metadata for
/// every cataloged user.
[[nodiscard]] std::vector<Triple> build_kg(corpus::Corpus const &corpus, std::vector<corpus::Author> const &authors,
                                           EntityCatalog const &catalog, KGConfig const &config,
                                           std::span<std::size_t const> source_docs);

/// Throws ContractViolation on a triple that breaks its relation's kind constraint.
void check_kinds(std::span<Triple const> triples, EntityCatalog const &catalog);

void write_triples(std::span<Triple const> triples, EntityCatalog const &catalog, std::filesystem::path const &path);
/// Reads `kind:id<TAB>relation<TAB>kind:id` lines; endpoints must resolve in the catalog.
[[nodiscard]] std::vector<Triple> read_triples(std::filesystem::path const &path, EntityCatalog const &catalog);

struct DegreeSummary {
    std::size_t min = 0;
    std::size_t max = 0;
    double mean = 0.0;
    std::size_t median = 0;
};

struct KGStats {
    std::array<std::size_t, kRelationTypes> per_relation{};
    std::array<std::size_t, kEntityKinds> per_kind{};
    /// Total (in + out) degree over the entities of each kind.
    std::array<DegreeSummary, kEntityKinds> degree{};
    std::size_t triples = 0;
};

[[nodiscard]] KGStats kg_stats(std::span<Triple const> triples, EntityCatalog const &catalog);
[[nodiscard]] std::string format_stats(KGStats const &stats);

} // namespace park::kg
