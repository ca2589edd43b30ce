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

#include "park/corpus/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "park/common/error.hpp"
#include "park/corpus/text.hpp"

namespace park::corpus {

namespace {

using Rng = std::mt19937_64;

constexpr std::string_view kConsonants = "bdfgklmnprtvz";
constexpr std::string_view kVowels = "aeiou";
constexpr std::size_t kSyllables = 13 * 5;
constexpr std::size_t kWordSpace = kSyllables * kSyllables * kSyllables;

// Stopwords sprinkled into generated text; all are on the shipped list.
constexpr std::array<std::string_view, 9> kFillers{"the", "of", "for", "and", "in", "on", "with", "a", "to"};

std::string syllable(std::size_t s)
{
    return {kConsonants[s % 13], kVowels[s / 13]};
}

std::string id(char const *prefix, std::size_t i, int width)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*zu", prefix, width, i);
    return buf;
}

struct Vocabulary {
    std::vector<std::string> words;
    std::vector<bool> inflectable;
    std::vector<std::uint32_t> general;
    std::vector<std::vector<std::uint32_t>> topics;
    /// Global subtopic -> contiguous slice of its topic's words.
    std::vector<std::vector<std::uint32_t>> subtopics;
    /// Alternate spellings per word id; filled for topical words only.
    std::vector<std::vector<std::uint32_t>> alternates;
};

Vocabulary build_vocabulary(SynthConfig const &cfg)
{
    Vocabulary v;
    std::unordered_set<std::string> seen;
    std::size_t j = 0;
    auto n_general = static_cast<std::size_t>(std::round(cfg.general_vocab_fraction * cfg.vocab_size));
    n_general = std::min(n_general, cfg.vocab_size - cfg.n_topics);
    std::size_t total = cfg.vocab_size + (cfg.vocab_size - n_general) * cfg.synonyms_per_word;
    while (v.words.size() < total) {
        if (j >= kWordSpace) {
            throw ConfigError("synthetic vocabulary exhausted the word space");
        }
        std::size_t code = (j * 104729 + 7919) % kWordSpace;
        ++j;
        auto w = syllable(code % kSyllables) + syllable((code / kSyllables) % kSyllables)
                 + syllable(code / (kSyllables * kSyllables));
        if (is_stopword(w) || stem(w) != w || !seen.insert(w).second) {
            continue;
        }
        v.inflectable.push_back(stem(w + "s") == w);
        v.words.push_back(std::move(w));
    }
    v.alternates.resize(cfg.vocab_size);
    std::size_t next = cfg.vocab_size;
    for (std::size_t w = n_general; w < cfg.vocab_size; ++w) {
        for (std::size_t k = 0; k < cfg.synonyms_per_word; ++k) {
            v.alternates[w].push_back(static_cast<std::uint32_t>(next++));
        }
    }
    for (std::size_t i = 0; i < n_general; ++i) {
        v.general.push_back(static_cast<std::uint32_t>(i));
    }
    v.topics.resize(cfg.n_topics);
    std::size_t per_topic = (cfg.vocab_size - n_general) / cfg.n_topics;
    for (std::size_t t = 0; t < cfg.n_topics; ++t) {
        for (std::size_t i = 0; i < per_topic; ++i) {
            v.topics[t].push_back(static_cast<std::uint32_t>(n_general + t * per_topic + i));
        }
        std::size_t per_sub = per_topic / cfg.subtopics_per_topic;
        for (std::size_t s = 0; s < cfg.subtopics_per_topic; ++s) {
            // Interleave so every subtopic gets frequent and rare topic words alike.
            std::vector<std::uint32_t> slice;
            for (std::size_t i = 0; i < per_sub; ++i) {
                slice.push_back(v.topics[t][s + i * cfg.subtopics_per_topic]);
            }
            v.subtopics.push_back(std::move(slice));
        }
    }
    return v;
}

std::discrete_distribution<std::size_t> zipf(std::size_t n, double exponent)
{
    std::vector<double> w(n);
    for (std::size_t r = 0; r < n; ++r) {
        w[r] = 1.0 / std::pow(static_cast<double>(r + 1), exponent);
    }
    return {w.begin(), w.end()};
}

struct DocDraft {
    std::uint32_t topic = 0;
    std::uint32_t subtopic = 0;
    std::size_t spelling = 0;
    std::vector<std::uint32_t> focus;
    std::optional<std::uint32_t> secondary;
    std::vector<std::size_t> team;
    std::optional<std::size_t> venue;
};

class Generator {
  public:
    Generator(SynthConfig const &cfg, std::uint64_t seed)
        : m_cfg(cfg), m_rng(seed), m_vocab(build_vocabulary(cfg)),
          m_general_zipf(zipf(std::max<std::size_t>(m_vocab.general.size(), 1), cfg.zipf_exponent)),
          m_topic_zipf(zipf(m_vocab.topics.front().size(), cfg.zipf_exponent)),
          m_subtopic_zipf(zipf(m_vocab.subtopics.front().size(), cfg.zipf_exponent))
    {}

    SyntheticCorpus run()
    {
        make_affiliations_and_venues();
        make_authors();
        auto years = yearly_counts();

        SyntheticCorpus out;
        std::vector<Document> docs;
        docs.reserve(m_cfg.n_docs);
        m_topic_docs.assign(m_cfg.n_topics, {});
        m_subtopic_docs.assign(m_vocab.subtopics.size(), {});
        m_author_docs.assign(m_cfg.n_authors, {});
        m_affiliation_docs.assign(m_cfg.n_affiliations, {});
        m_venue_docs.assign(m_cfg.n_venues, {});

        std::size_t year_begin = 0;
        for (std::size_t yi = 0; yi < years.size(); ++yi) {
            int year = m_cfg.year_min + static_cast<int>(yi);
            activate(year);
            for (std::size_t k = 0; k < years[yi]; ++k) {
                std::size_t ordinal = docs.size();
                auto draft = draft_document();
                Document d;
                d.doc_id = id("d", ordinal, 6);
                d.year = year;
                d.title = text(draft, m_cfg.title_min_tokens, m_cfg.title_max_tokens, m_cfg.title_stopword_prob,
                               m_cfg.title_general_prob, true);
                d.abstract = text(draft, m_cfg.abstract_min_tokens, m_cfg.abstract_max_tokens,
                                  m_cfg.abstract_stopword_prob, m_cfg.abstract_general_prob, false);
                for (auto a : draft.team) {
                    d.author_ids.push_back(m_author_ids[a]);
                }
                if (draft.venue) {
                    d.venue_id = m_venue_ids[*draft.venue];
                }
                auto refs = references(draft, year_begin);
                for (auto ref : refs) {
                    d.references.push_back(docs[ref].doc_id);
                }
                register_document(ordinal, draft, std::move(refs));
                out.doc_topic.push_back(draft.topic);
                out.doc_subtopic.push_back(draft.subtopic);
                docs.push_back(std::move(d));
            }
            year_begin = docs.size();
        }

        out.corpus = Corpus(std::move(docs));
        for (std::size_t a = 0; a < m_cfg.n_authors; ++a) {
            Author author;
            author.author_id = m_author_ids[a];
            if (m_author_affiliation[a]) {
                author.affiliation_id = m_affiliation_ids[*m_author_affiliation[a]];
            }
            out.authors.push_back(std::move(author));
        }
        out.author_topics = m_author_topics;
        return out;
    }

  private:
    std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(m_rng); }
    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(m_rng); }

    void make_affiliations_and_venues()
    {
        for (std::size_t a = 0; a < m_cfg.n_affiliations; ++a) {
            m_affiliation_ids.push_back(id("aff", a, 4));
            std::vector<std::uint32_t> topics{static_cast<std::uint32_t>(uniform(m_cfg.n_topics))};
            if (m_cfg.n_topics > 1 && unit() < 0.5) {
                auto second = static_cast<std::uint32_t>(uniform(m_cfg.n_topics));
                if (second != topics.front()) {
                    topics.push_back(second);
                }
            }
            std::vector<std::uint32_t> subs;
            for (auto t : topics) {
                subs.push_back(subtopic_of(t, uniform(m_cfg.subtopics_per_topic)));
            }
            m_affiliation_topics.push_back(std::move(topics));
            m_affiliation_subtopics.push_back(std::move(subs));
        }
        m_venue_topic.resize(m_cfg.n_venues);
        m_topic_venues.assign(m_cfg.n_topics, {});
        for (std::size_t v = 0; v < m_cfg.n_venues; ++v) {
            m_venue_ids.push_back(id("v", v, 3));
            m_venue_topic[v] = static_cast<std::uint32_t>(v % m_cfg.n_topics);
            m_topic_venues[m_venue_topic[v]].push_back(v);
        }
    }

    std::uint32_t subtopic_of(std::uint32_t topic, std::size_t s) const
    {
        return static_cast<std::uint32_t>(topic * m_cfg.subtopics_per_topic + s);
    }

    void make_authors()
    {
        m_author_affiliation.resize(m_cfg.n_authors);
        m_author_topics.resize(m_cfg.n_authors);
        m_author_subtopics.resize(m_cfg.n_authors);
        m_topic_authors.assign(m_cfg.n_topics, {});
        m_affiliation_authors.assign(m_cfg.n_affiliations, {});
        std::lognormal_distribution<double> productivity(0.0, m_cfg.productivity_sigma);
        for (std::size_t a = 0; a < m_cfg.n_authors; ++a) {
            m_author_ids.push_back(id("a", a, 5));
            std::optional<std::size_t> aff;
            if (m_cfg.n_affiliations > 0 && unit() >= m_cfg.affiliation_missing_prob) {
                aff = uniform(m_cfg.n_affiliations);
                m_affiliation_authors[*aff].push_back(a);
            }
            m_author_affiliation[a] = aff;

            auto n_topics = std::min<std::size_t>(1 + uniform(3), m_cfg.n_topics);
            auto &topics = m_author_topics[a];
            auto &subs = m_author_subtopics[a];
            while (topics.size() < n_topics) {
                std::uint32_t t = 0;
                std::uint32_t sub = 0;
                if (aff && unit() < m_cfg.affiliation_topic_prob) {
                    auto const &pool = m_affiliation_topics[*aff];
                    auto k = uniform(pool.size());
                    t = pool[k];
                    // Members inherit their group's niche within the topic.
                    sub = unit() < m_cfg.subtopic_affinity_prob ? m_affiliation_subtopics[*aff][k]
                                                                : subtopic_of(t, uniform(m_cfg.subtopics_per_topic));
                } else {
                    t = static_cast<std::uint32_t>(uniform(m_cfg.n_topics));
                    sub = subtopic_of(t, uniform(m_cfg.subtopics_per_topic));
                }
                if (std::find(topics.begin(), topics.end(), t) == topics.end()) {
                    topics.push_back(t);
                    subs.push_back(sub);
                } else if (topics.size() + 1 == n_topics && unit() < 0.5) {
                    break;
                }
            }
            for (auto t : topics) {
                m_topic_authors[t].push_back(a);
            }
            m_weights.push_back(productivity(m_rng));
            m_debut.push_back(unit() < m_cfg.initial_author_fraction
                                  ? m_cfg.year_min
                                  : m_cfg.year_min + static_cast<int>(uniform(
                                        static_cast<std::size_t>(m_cfg.year_max - m_cfg.year_min) + 1)));
        }
    }

    void activate(int year)
    {
        std::vector<double> w(m_weights.size(), 0.0);
        bool any = false;
        for (std::size_t a = 0; a < w.size(); ++a) {
            if (m_debut[a] <= year) {
                w[a] = m_weights[a];
                any = true;
            }
        }
        if (!any) {
            w = m_weights;
        }
        m_productivity = std::discrete_distribution<std::size_t>(w.begin(), w.end());
        m_year = year;
    }

    bool active(std::size_t a) const { return m_debut[a] <= m_year; }

    std::vector<std::size_t> yearly_counts() const
    {
        auto n_years = static_cast<std::size_t>(m_cfg.year_max - m_cfg.year_min + 1);
        std::vector<double> w(n_years);
        for (std::size_t y = 0; y < n_years; ++y) {
            w[y] = 1.0 + m_cfg.yearly_growth * static_cast<double>(y);
        }
        double total = std::accumulate(w.begin(), w.end(), 0.0);
        std::vector<std::size_t> counts(n_years);
        std::vector<std::pair<double, std::size_t>> remainders;
        std::size_t assigned = 0;
        for (std::size_t y = 0; y < n_years; ++y) {
            double exact = w[y] / total * static_cast<double>(m_cfg.n_docs);
            counts[y] = static_cast<std::size_t>(exact);
            assigned += counts[y];
            remainders.emplace_back(exact - static_cast<double>(counts[y]), y);
        }
        std::sort(remainders.begin(), remainders.end(),
                  [](auto const &a, auto const &b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
        for (std::size_t i = 0; assigned < m_cfg.n_docs; ++i, ++assigned) {
            ++counts[remainders[i % n_years].second];
        }
        return counts;
    }

    DocDraft draft_document()
    {
        DocDraft d;
        std::size_t lead = m_productivity(m_rng);
        auto const &lead_topics = m_author_topics[lead];
        auto k = uniform(lead_topics.size());
        d.topic = lead_topics[k];
        d.subtopic = unit() < m_cfg.subtopic_affinity_prob ? m_author_subtopics[lead][k]
                                                           : subtopic_of(d.topic, uniform(m_cfg.subtopics_per_topic));
        d.team.push_back(lead);

        static constexpr std::array<double, 5> kTeamSize{0.2, 0.35, 0.25, 0.15, 0.05};
        std::size_t team_size = 1 + std::discrete_distribution<std::size_t>(kTeamSize.begin(), kTeamSize.end())(m_rng);
        team_size = std::min(team_size, m_cfg.n_authors);
        for (std::size_t attempt = 0; d.team.size() < team_size && attempt < 20; ++attempt) {
            std::size_t candidate = 0;
            auto aff = m_author_affiliation[lead];
            if (aff && unit() < m_cfg.same_affiliation_coauthor_prob) {
                auto const &pool = m_affiliation_authors[*aff];
                candidate = pool[uniform(pool.size())];
            } else if (!m_topic_authors[d.topic].empty()) {
                auto const &pool = m_topic_authors[d.topic];
                candidate = pool[uniform(pool.size())];
            } else {
                candidate = uniform(m_cfg.n_authors);
            }
            if (active(candidate) && std::find(d.team.begin(), d.team.end(), candidate) == d.team.end()) {
                d.team.push_back(candidate);
            }
        }

        if (m_cfg.n_topics > 1 && unit() < m_cfg.secondary_topic_prob) {
            std::vector<std::uint32_t> options;
            for (auto a : d.team) {
                for (auto t : m_author_topics[a]) {
                    if (t != d.topic) {
                        options.push_back(t);
                    }
                }
            }
            if (options.empty()) {
                auto t = static_cast<std::uint32_t>(uniform(m_cfg.n_topics));
                if (t != d.topic) {
                    d.secondary = t;
                }
            } else {
                d.secondary = options[uniform(options.size())];
            }
        }

        d.spelling = uniform(m_cfg.synonyms_per_word + 1);
        auto const &slice = m_vocab.subtopics[d.subtopic];
        for (std::size_t k = 0; k < m_cfg.focus_words; ++k) {
            d.focus.push_back(slice[uniform(slice.size())]);
        }
        if (m_cfg.n_venues > 0 && unit() >= m_cfg.no_venue_prob) {
            auto const &topical = m_topic_venues[d.topic];
            if (!topical.empty() && unit() < m_cfg.venue_topic_prob) {
                d.venue = topical[uniform(topical.size())];
            } else {
                d.venue = uniform(m_cfg.n_venues);
            }
        }
        return d;
    }

    std::string const &content_word(DocDraft const &d, double general_prob, bool &inflectable)
    {
        std::uint32_t w = 0;
        if (!m_vocab.general.empty() && unit() < general_prob) {
            w = m_vocab.general[m_general_zipf(m_rng)];
        } else {
            if (d.secondary && unit() < m_cfg.secondary_topic_weight) {
                w = m_vocab.topics[*d.secondary][m_topic_zipf(m_rng)];
            } else if (!d.focus.empty() && unit() < m_cfg.focus_prob) {
                w = d.focus[uniform(d.focus.size())];
            } else if (unit() < m_cfg.subtopic_vocab_prob) {
                w = m_vocab.subtopics[d.subtopic][m_subtopic_zipf(m_rng)];
            } else {
                w = m_vocab.topics[d.topic][m_topic_zipf(m_rng)];
            }
            auto const &alt = m_vocab.alternates[w];
            if (!alt.empty()) {
                auto form = unit() < m_cfg.spelling_mix_prob ? uniform(alt.size() + 1) : d.spelling;
                if (form > 0) {
                    w = alt[form - 1];
                }
            }
        }
        inflectable = m_vocab.inflectable[w];
        return m_vocab.words[w];
    }

    std::string text(DocDraft const &d, std::size_t min_len, std::size_t max_len, double stop_prob,
                     double general_prob, bool capitalize)
    {
        std::size_t len = min_len + uniform(max_len - min_len + 1);
        std::string out;
        for (std::size_t i = 0; i < len; ++i) {
            std::string token;
            if (unit() < stop_prob) {
                token = kFillers[uniform(kFillers.size())];
            } else {
                bool inflectable = false;
                token = content_word(d, general_prob, inflectable);
                if (inflectable && unit() < m_cfg.inflection_prob) {
                    token += 's';
                }
            }
            if (capitalize && i == 0) {
                token[0] = static_cast<char>(token[0] - 'a' + 'A');
            }
            if (!out.empty()) {
                out.push_back(' ');
            }
            out += token;
        }
        return out;
    }

    std::size_t recent_index(std::size_t n)
    {
        if (m_cfg.citation_recency <= 0.0) {
            return uniform(n);
        }
        auto x = std::pow(unit(), 1.0 / (1.0 + m_cfg.citation_recency));
        return std::min(n - 1, static_cast<std::size_t>(x * static_cast<double>(n)));
    }

    // Entries of an ordinal-sorted list that precede `limit`.
    static std::size_t prefix(std::vector<std::size_t> const &list, std::size_t limit)
    {
        return static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), limit) - list.begin());
    }

    std::optional<std::size_t> pick(std::vector<std::size_t> const &list, std::size_t limit)
    {
        auto n = prefix(list, limit);
        if (n == 0) {
            return std::nullopt;
        }
        return list[recent_index(n)];
    }

    std::optional<std::size_t> pick_social(std::vector<std::size_t> const &list, std::size_t limit, DocDraft const &d)
    {
        auto n = prefix(list, limit);
        if (n == 0) {
            return std::nullopt;
        }
        std::optional<std::size_t> same_topic;
        std::size_t first = list[recent_index(n)];
        for (std::size_t k = 0; k < m_cfg.social_candidates; ++k) {
            auto doc = k == 0 ? first : list[recent_index(n)];
            if (m_doc_subtopic[doc] == d.subtopic) {
                return doc;
            }
            if (!same_topic && m_doc_subtopic[doc] / m_cfg.subtopics_per_topic == d.topic) {
                same_topic = doc;
            }
        }
        return same_topic.value_or(first);
    }

    std::size_t focus_overlap(std::size_t doc, DocDraft const &d) const
    {
        std::size_t n = 0;
        for (auto w : m_doc_focus[doc]) {
            n += static_cast<std::size_t>(std::find(d.focus.begin(), d.focus.end(), w) != d.focus.end());
        }
        return n;
    }

    std::optional<std::size_t> pick_similar(std::vector<std::size_t> const &list, std::size_t limit, DocDraft const &d)
    {
        auto n = prefix(list, limit);
        if (n == 0) {
            return std::nullopt;
        }
        std::size_t best = list[recent_index(n)];
        auto best_overlap = focus_overlap(best, d);
        for (std::size_t k = 1; k < m_cfg.topical_candidates; ++k) {
            auto doc = list[recent_index(n)];
            if (auto o = focus_overlap(doc, d); o > best_overlap) {
                best = doc;
                best_overlap = o;
            }
        }
        return best;
    }

    std::optional<std::size_t> pick_topical(std::uint32_t topic, std::size_t limit)
    {
        auto doc = pick(m_topic_docs[topic], limit);
        // Copying a topical document's reference yields preferential attachment.
        if (doc && unit() < 0.5 && !m_doc_refs[*doc].empty()) {
            auto const &refs = m_doc_refs[*doc];
            return refs[uniform(refs.size())];
        }
        return doc;
    }

    std::vector<std::size_t> references(DocDraft const &d, std::size_t year_begin)
    {
        std::vector<std::size_t> refs;
        if (year_begin == 0) {
            return refs;
        }
        auto wanted = std::min<std::size_t>(std::poisson_distribution<std::size_t>(m_cfg.mean_references)(m_rng),
                                            year_begin);
        for (std::size_t attempt = 0; refs.size() < wanted && attempt < wanted * 8; ++attempt) {
            double u = unit();
            std::optional<std::size_t> doc;
            double edge = m_cfg.cite_own_team;
            if (u < edge) {
                doc = pick_social(m_author_docs[d.team[uniform(d.team.size())]], year_begin, d);
            } else if (u < (edge += m_cfg.cite_affiliation)) {
                if (auto aff = m_author_affiliation[d.team.front()]) {
                    doc = pick_social(m_affiliation_docs[*aff], year_begin, d);
                }
            } else if (u < (edge += m_cfg.cite_venue)) {
                if (d.venue) {
                    doc = pick_social(m_venue_docs[*d.venue], year_begin, d);
                }
            } else if (u < (edge += m_cfg.cite_random)) {
                doc = recent_index(year_begin);
            } else if (d.secondary && unit() < m_cfg.secondary_topic_weight) {
                doc = pick_topical(*d.secondary, year_begin);
            } else if (unit() < m_cfg.cite_subtopic) {
                doc = pick_similar(m_subtopic_docs[d.subtopic], year_begin, d);
            } else {
                doc = pick_topical(d.topic, year_begin);
            }
            if (!doc) {
                doc = pick_topical(d.topic, year_begin);
            }
            if (doc && *doc < year_begin && std::find(refs.begin(), refs.end(), *doc) == refs.end()) {
                refs.push_back(*doc);
            }
        }
        return refs;
    }

    void register_document(std::size_t ordinal, DocDraft const &d, std::vector<std::size_t> refs)
    {
        m_topic_docs[d.topic].push_back(ordinal);
        m_subtopic_docs[d.subtopic].push_back(ordinal);
        m_doc_subtopic.push_back(d.subtopic);
        m_doc_focus.push_back(d.focus);
        std::vector<std::size_t> affiliations;
        for (auto a : d.team) {
            m_author_docs[a].push_back(ordinal);
            if (auto aff = m_author_affiliation[a];
                aff && std::find(affiliations.begin(), affiliations.end(), *aff) == affiliations.end()) {
                affiliations.push_back(*aff);
                m_affiliation_docs[*aff].push_back(ordinal);
            }
        }
        if (d.venue) {
            m_venue_docs[*d.venue].push_back(ordinal);
        }
        m_doc_refs.push_back(std::move(refs));
    }

    SynthConfig const &m_cfg;
    Rng m_rng;
    Vocabulary m_vocab;
    std::discrete_distribution<std::size_t> m_general_zipf;
    std::discrete_distribution<std::size_t> m_topic_zipf;
    std::discrete_distribution<std::size_t> m_subtopic_zipf;
    std::discrete_distribution<std::size_t> m_productivity;
    std::vector<double> m_weights;
    std::vector<int> m_debut;
    int m_year = 0;

    std::vector<std::string> m_affiliation_ids;
    std::vector<std::vector<std::uint32_t>> m_affiliation_topics;
    std::vector<std::vector<std::uint32_t>> m_affiliation_subtopics;
    std::vector<std::string> m_venue_ids;
    std::vector<std::uint32_t> m_venue_topic;
    std::vector<std::vector<std::size_t>> m_topic_venues;
    std::vector<std::string> m_author_ids;
    std::vector<std::optional<std::size_t>> m_author_affiliation;
    std::vector<std::vector<std::uint32_t>> m_author_topics;
    std::vector<std::vector<std::uint32_t>> m_author_subtopics;
    std::vector<std::vector<std::size_t>> m_topic_authors;
    std::vector<std::vector<std::size_t>> m_affiliation_authors;

    std::vector<std::vector<std::size_t>> m_topic_docs;
    std::vector<std::vector<std::size_t>> m_subtopic_docs;
    std::vector<std::uint32_t> m_doc_subtopic;
    std::vector<std::vector<std::uint32_t>> m_doc_focus;
    std::vector<std::vector<std::size_t>> m_author_docs;
    std::vector<std::vector<std::size_t>> m_affiliation_docs;
    std::vector<std::vector<std::size_t>> m_venue_docs;
    std::vector<std::vector<std::size_t>> m_doc_refs;
};

} // namespace

void SynthConfig::validate() const
{
    if (n_docs < 2) {
        throw ConfigError("synthetic corpus needs n_docs >= 2");
    }
    if (vocab_size == 0) {
        throw ConfigError("synthetic corpus needs a nonempty vocabulary");
    }
    if (n_topics == 0 || n_authors == 0) {
        throw ConfigError("synthetic corpus needs at least one topic and one author");
    }
    if (vocab_size < n_topics + 1 || (vocab_size - static_cast<std::size_t>(general_vocab_fraction * vocab_size)) < n_topics) {
        throw ConfigError("vocabulary too small for the number of topics");
    }
    if (subtopics_per_topic == 0
        || (vocab_size - static_cast<std::size_t>(general_vocab_fraction * vocab_size)) / n_topics < subtopics_per_topic) {
        throw ConfigError("each subtopic needs at least one word");
    }
    if (social_candidates == 0 || topical_candidates == 0) {
        throw ConfigError("social_candidates and topical_candidates must be at least 1");
    }
    if (productivity_sigma < 0.0 || citation_recency < 0.0) {
        throw ConfigError("productivity_sigma and citation_recency must be non-negative");
    }
    if (year_max < year_min) {
        throw ConfigError("year_max < year_min");
    }
    if (title_min_tokens == 0 || title_max_tokens < title_min_tokens || abstract_max_tokens < abstract_min_tokens) {
        throw ConfigError("bad text length range");
    }
    double mixture = cite_own_team + cite_affiliation + cite_venue + cite_random;
    if (mixture < 0.0 || mixture > 1.0) {
        throw ConfigError("citation mixture weights must sum to at most 1");
    }
}

SyntheticCorpus generate_synthetic(SynthConfig const &config, std::uint64_t seed)
{
    config.validate();
    return Generator(config, seed).run();
}

} // namespace park::corpus
