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
#include <vector>

#include "park/corpus/types.hpp"

namespace park::corpus {

/// Knobs of the synthetic academic corpus. Defaults give a 20k-document collection where
/// lexical, citation and author/affiliation structure all carry relevance signal.
struct SynthConfig {
    std::size_t n_docs = 20000;
    std::size_t n_authors = 15000;
    std::size_t n_venues = 50;
    std::size_t n_affiliations = 200;
    std::size_t n_topics = 25;
    /// Each topic splits into subtopics with their own vocabulary slice.
    std::size_t subtopics_per_topic = 20;
    std::size_t vocab_size = 20000;
    int year_min = 2000;
    int year_max = 2019;
    /// Relative growth of yearly output (docs in year y ~ 1 + growth * (y - year_min)).
    double yearly_growth = 0.1;

    /// Share of the vocabulary that is topic-neutral.
    double general_vocab_fraction = 0.2;
    double zipf_exponent = 1.0;
    std::size_t title_min_tokens = 5;
    std::size_t title_max_tokens = 12;
    std::size_t abstract_min_tokens = 50;
    std::size_t abstract_max_tokens = 150;
    double title_stopword_prob = 0.25;
    double abstract_stopword_prob = 0.3;
    double title_general_prob = 0.15;
    double abstract_general_prob = 0.3;
    double inflection_prob = 0.15;
    /// Every topical word gets this many alternate spellings of the same concept. A document
    /// sticks to one spelling; each token deviates to a random one with spelling_mix_prob.
    std::size_t synonyms_per_word = 1;
    double spelling_mix_prob = 0.2;
    /// Share of topical tokens drawn from the document's subtopic slice.
    double subtopic_vocab_prob = 0.6;
    /// Each document emphasizes a few subtopic words; focus_prob of its topical tokens come from them.
    std::size_t focus_words = 4;
    double focus_prob = 0.3;
    /// Probability an author (or affiliation) writes in its preferred subtopic of a topic.
    double subtopic_affinity_prob = 0.7;

    /// Probability a document mixes in a second topic, and that topic's token share.
    double secondary_topic_prob = 0.5;
    double secondary_topic_weight = 0.25;

    /// Probability an author's topic affinity is drawn from their affiliation's topics.
    double affiliation_topic_prob = 0.8;
    double affiliation_missing_prob = 0.02;
    double same_affiliation_coauthor_prob = 0.5;
    /// Share of authors active from year_min; the rest debut in a uniformly drawn later year.
    double initial_author_fraction = 0.3;
    /// Spread of the lognormal author productivity.
    double productivity_sigma = 1.5;
    double venue_topic_prob = 0.85;
    double no_venue_prob = 0.05;

    double mean_references = 6.0;
    /// Citation age bias: an earlier document at relative position x is drawn with density ~ x^recency.
    double citation_recency = 1.0;
    /// Mixture over citation sources; the remainder goes to same-topic documents.
    double cite_own_team = 0.15;
    double cite_affiliation = 0.3;
    double cite_venue = 0.1;
    double cite_random = 0.05;
    /// Share of topical citations restricted to the citing document's subtopic.
    double cite_subtopic = 0.7;
    /// Subtopic citations draw this many candidates and keep the one sharing the most focus words.
    std::size_t topical_candidates = 8;
    /// Team, affiliation and venue citations draw this many candidates and keep the one
    /// closest in subject to the citing document.
    std::size_t social_candidates = 8;

    /// Throws ConfigError on an unusable configuration.
    void validate() const;
};

/// Generated corpus plus the latent structure used to generate it.
struct SyntheticCorpus {
    Corpus corpus;
    std::vector<Author> authors;
    /// Main topic and global subtopic (topic * subtopics_per_topic + s) per document ordinal.
    std::vector<std::uint32_t> doc_topic;
    std::vector<std::uint32_t> doc_subtopic;
    std::vector<std::vector<std::uint32_t>> author_topics;
};

/// Deterministic for a fixed (config, seed). Documents come out in ascending year order.
[[nodiscard]] SyntheticCorpus generate_synthetic(SynthConfig const &config, std::uint64_t seed);

} // namespace park::corpus
