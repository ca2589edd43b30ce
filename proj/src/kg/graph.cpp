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

#include "park/kg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "park/common/error.hpp"

namespace park::kg {

namespace {

constexpr std::array<std::string_view, kEntityKinds> kKindNames{"user", "doc", "venue", "aff"};
constexpr std::array<std::string_view, kRelationTypes> kRelationNames{"wrote", "cited", "in_venue", "affiliated",
                                                                      "coauthor"};

template <typename E, std::size_t N>
std::optional<E> parse(std::array<std::string_view, N> const &names, std::string_view text) noexcept
{
    for (std::size_t i = 0; i < N; ++i) {
        if (names[i] == text) {
            return static_cast<E>(i);
        }
    }
    return std::nullopt;
}

} // namespace

std::string_view name(EntityKind kind) noexcept { return kKindNames[static_cast<std::size_t>(kind)]; }
std::string_view name(RelationType relation) noexcept { return kRelationNames[static_cast<std::size_t>(relation)]; }

std::optional<EntityKind> parse_kind(std::string_view text) noexcept { return parse<EntityKind>(kKindNames, text); }
std::optional<RelationType> parse_relation(std::string_view text) noexcept
{
    return parse<RelationType>(kRelationNames, text);
}

EntityKind head_kind(RelationType) noexcept { return EntityKind::User; }

EntityKind tail_kind(RelationType relation) noexcept
{
    switch (relation) {
    case RelationType::Wrote:
    case RelationType::Cited:
        return EntityKind::Document;
    case RelationType::InVenue:
        return EntityKind::Venue;
    case RelationType::Affiliated:
        return EntityKind::Affiliation;
    case RelationType::CoAuthor:
        return EntityKind::User;
    }
    return EntityKind::User;
}

std::optional<EntityId> EntityCatalog::find(EntityKind kind, std::string const &external_id) const
{
    auto const &lookup = m_lookup[static_cast<std::size_t>(kind)];
    auto it = lookup.find(external_id);
    if (it == lookup.end()) {
        return std::nullopt;
    }
    return it->second;
}

EntityId EntityCatalog::at(EntityKind kind, std::string const &external_id) const
{
    auto id = find(kind, external_id);
    if (!id) {
        throw DataError("unknown " + std::string(name(kind)) + " entity '" + external_id + "'");
    }
    return *id;
}

EntityId EntityCatalog::add(EntityKind kind, std::string external_id)
{
    auto k = static_cast<std::size_t>(kind);
    auto id = static_cast<EntityId>(m_entities.size());
    if (!m_lookup[k].emplace(external_id, id).second) {
        throw DataError("duplicate " + std::string(name(kind)) + " entity '" + external_id + "'");
    }
    m_entities.emplace_back(kind, std::move(external_id));
    m_by_kind[k].push_back(id);
    return id;
}

EntityCatalog build_catalog(corpus::Corpus const &corpus, std::vector<corpus::Author> const &authors,
                            KGConfig const &config)
{
    std::set<std::string> users;
    std::set<std::string> docs;
    std::set<std::string> venues;
    std::set<std::string> affiliations;
    for (auto const &a : authors) {
        users.insert(a.author_id);
        if (config.include_affiliation && a.affiliation_id) {
            affiliations.insert(*a.affiliation_id);
        }
    }
    for (auto const &d : corpus.documents()) {
        docs.insert(d.doc_id);
        users.insert(d.author_ids.begin(), d.author_ids.end());
        if (config.include_venue && d.venue_id) {
            venues.insert(*d.venue_id);
        }
    }
    EntityCatalog catalog;
    for (auto const &[kind, ids] : {std::pair{EntityKind::User, &users}, std::pair{EntityKind::Document, &docs},
                                    std::pair{EntityKind::Venue, &venues},
                                    std::pair{EntityKind::Affiliation, &affiliations}}) {
        for (auto const &id : *ids) {
            catalog.add(kind, id);
        }
    }
    return catalog;
}

std::vector<Triple> build_kg(corpus::Corpus const &corpus, std::vector<corpus::Author> const &authors,
                             EntityCatalog const &catalog, KGConfig const &config,
                             std::span<std::size_t const> source_docs)
{
    std::vector<Triple> triples;
    auto user = [&](std::string const &id) { return catalog.at(EntityKind::User, id); };
    for (auto pos : source_docs) {
        auto const &doc = corpus[pos];
        auto d = catalog.at(EntityKind::Document, doc.doc_id);
        std::vector<EntityId> team;
        for (auto const &a : doc.author_ids) {
            team.push_back(user(a));
        }
        std::vector<EntityId> cited;
        for (auto const &ref : doc.references) {
            cited.push_back(catalog.at(EntityKind::Document, ref));
        }
        std::optional<EntityId> venue;
        if (config.include_venue && doc.venue_id) {
            venue = catalog.at(EntityKind::Venue, *doc.venue_id);
        }
        for (auto u : team) {
            triples.push_back({u, RelationType::Wrote, d});
            for (auto c : cited) {
                triples.push_back({u, RelationType::Cited, c});
            }
            if (venue) {
                triples.push_back({u, RelationType::InVenue, *venue});
            }
            for (auto other : team) {
                if (other != u) {
                    triples.push_back({u, RelationType::CoAuthor, other});
                }
            }
        }
    }
    if (config.include_affiliation) {
        for (auto const &a : authors) {
            if (a.affiliation_id) {
                triples.push_back(
                    {user(a.author_id), RelationType::Affiliated, catalog.at(EntityKind::Affiliation, *a.affiliation_id)});
            }
        }
    }
    std::ranges::sort(triples);
    auto dup = std::ranges::unique(triples);
    triples.erase(dup.begin(), dup.end());

    if (!config.include_self_citations) {
        // Triples are sorted by (head, relation, tail), so a user's Wrote block is at hand
        // when its Cited block is filtered.
        std::vector<Triple> kept;
        kept.reserve(triples.size());
        std::set<EntityId> wrote;
        EntityId current = 0;
        bool have = false;
        for (auto const &t : triples) {
            if (!have || t.head != current) {
                current = t.head;
                have = true;
                wrote.clear();
            }
            if (t.relation == RelationType::Wrote) {
                wrote.insert(t.tail);
            }
            if (t.relation == RelationType::Cited && wrote.contains(t.tail)) {
                continue;
            }
            kept.push_back(t);
        }
        triples = std::move(kept);
    }
    return triples;
}

void check_kinds(std::span<Triple const> triples, EntityCatalog const &catalog)
{
    for (auto const &t : triples) {
        expects(t.head < catalog.size() && t.tail < catalog.size(), "triple endpoint outside the catalog");
        expects(catalog.kind(t.head) == head_kind(t.relation) && catalog.kind(t.tail) == tail_kind(t.relation),
                "triple violates its relation's kind constraint");
    }
}

void write_triples(std::span<Triple const> triples, EntityCatalog const &catalog, std::filesystem::path const &path)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    for (auto const &t : triples) {
        out << name(catalog.kind(t.head)) << ':' << catalog.external_id(t.head) << '\t' << name(t.relation) << '\t'
            << name(catalog.kind(t.tail)) << ':' << catalog.external_id(t.tail) << '\n';
    }
}

namespace {

EntityId parse_endpoint(std::string_view field, EntityCatalog const &catalog, std::size_t line)
{
    auto colon = field.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("triple endpoint without kind prefix", line);
    }
    auto kind = parse_kind(field.substr(0, colon));
    if (!kind) {
        throw ParseError("unknown entity kind '" + std::string(field.substr(0, colon)) + "'", line);
    }
    auto id = catalog.find(*kind, std::string(field.substr(colon + 1)));
    if (!id) {
        throw ParseError("unknown entity '" + std::string(field) + "'", line);
    }
    return *id;
}

} // namespace

std::vector<Triple> read_triples(std::filesystem::path const &path, EntityCatalog const &catalog)
{
    std::ifstream in(path);
    if (!in) {
        throw MissingArtifact("missing triple file " + path.string());
    }
    std::vector<Triple> triples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto t1 = line.find('\t');
        auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
            throw ParseError("expected three tab-separated fields", line_no);
        }
        std::string_view view(line);
        auto relation = parse_relation(view.substr(t1 + 1, t2 - t1 - 1));
        if (!relation) {
            throw ParseError("unknown relation '" + line.substr(t1 + 1, t2 - t1 - 1) + "'", line_no);
        }
        Triple t{parse_endpoint(view.substr(0, t1), catalog, line_no), *relation,
                 parse_endpoint(view.substr(t2 + 1), catalog, line_no)};
        if (catalog.kind(t.head) != head_kind(t.relation) || catalog.kind(t.tail) != tail_kind(t.relation)) {
            throw ParseError("triple violates the kind constraint of '" + std::string(name(t.relation)) + "'", line_no);
        }
        triples.push_back(t);
    }
    return triples;
}

KGStats kg_stats(std::span<Triple const> triples, EntityCatalog const &catalog)
{
    KGStats stats;
    stats.triples = triples.size();
    std::vector<std::size_t> degree(catalog.size(), 0);
    for (auto const &t : triples) {
        ++stats.per_relation[static_cast<std::size_t>(t.relation)];
        ++degree.at(t.head);
        ++degree.at(t.tail);
    }
    for (std::size_t k = 0; k < kEntityKinds; ++k) {
        auto ids = catalog.of_kind(static_cast<EntityKind>(k));
        stats.per_kind[k] = ids.size();
        if (ids.empty()) {
            continue;
        }
        std::vector<std::size_t> d;
        d.reserve(ids.size());
        for (auto id : ids) {
            d.push_back(degree[id]);
        }
        std::ranges::sort(d);
        double sum = 0.0;
        for (auto x : d) {
            sum += static_cast<double>(x);
        }
        stats.degree[k] = {d.front(), d.back(), sum / static_cast<double>(d.size()), d[d.size() / 2]};
    }
    return stats;
}

std::string format_stats(KGStats const &stats)
{
    std::ostringstream out;
    out << "relation\ttriples\n";
    for (std::size_t r = 0; r < kRelationTypes; ++r) {
        out << name(static_cast<RelationType>(r)) << '\t' << stats.per_relation[r] << '\n';
    }
    out << "total\t" << stats.triples << "\n\nkind\tentities\tdeg_min\tdeg_median\tdeg_mean\tdeg_max\n";
    for (std::size_t k = 0; k < kEntityKinds; ++k) {
        auto const &d = stats.degree[k];
        out << name(static_cast<EntityKind>(k)) << '\t' << stats.per_kind[k] << '\t' << d.min << '\t' << d.median
            << '\t' << d.mean << '\t' << d.max << '\n';
    }
    return out.str();
}

} // namespace park::kg
