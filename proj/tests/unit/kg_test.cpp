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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "park/common/error.hpp"
#include "park/common/vector_ops.hpp"
#include "park/corpus/split.hpp"
#include "park/corpus/synth.hpp"
#include "park/dense/encoder.hpp"
#include "park/dense/store.hpp"
#include "park/kg/embed.hpp"
#include "park/kg/graph.hpp"

using namespace park;
using kg::EntityKind;
using kg::RelationType;
using kg::Triple;

namespace {

corpus::Document doc(std::string id, std::vector<std::string> authors, std::optional<std::string> venue,
                     std::vector<std::string> refs = {})
{
    corpus::Document d;
    d.doc_id = std::move(id);
    d.title = "t";
    d.author_ids = std::move(authors);
    d.venue_id = std::move(venue);
    d.year = 2000;
    d.references = std::move(refs);
    return d;
}

std::vector<std::size_t> all_positions(corpus::Corpus const &c)
{
    std::vector<std::size_t> p(c.size());
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool has(std::vector<Triple> const &ts, Triple const &t) { return std::binary_search(ts.begin(), ts.end(), t); }

std::vector<double> random_vector(std::mt19937_64 &rng, std::size_t n)
{
    std::normal_distribution<double> dist(0.0, 0.5);
    std::vector<double> v(n);
    for (auto &x : v) {
        x = dist(rng);
    }
    return v;
}

std::vector<double> unit(std::vector<double> v)
{
    normalize(std::span<double>(v));
    return v;
}

} // namespace

TEST(Catalog, OnlyUserConfiguration)
{
    corpus::Corpus c({doc("d1", {"u1", "u2"}, "v1"), doc("d2", {"u3"}, "v1")});
    std::vector<corpus::Author> authors{{"u1", "x1"}, {"u2", "x2"}, {"u3", "x1"}};
    auto cat = kg::build_catalog(c, authors, {false, false});
    EXPECT_EQ(cat.size(), 5U);
    EXPECT_TRUE(cat.of_kind(EntityKind::Venue).empty());
    EXPECT_TRUE(cat.of_kind(EntityKind::Affiliation).empty());
}

TEST(Catalog, CountsAllKindsAndIsDeterministic)
{
    corpus::Corpus c({doc("d1", {"u1", "u2"}, "v1"), doc("d2", {"u3"}, "v1")});
    std::vector<corpus::Author> authors{{"u3", "x1"}, {"u1", "x2"}, {"u2", "x1"}};
    auto cat = kg::build_catalog(c, authors, {});
    EXPECT_EQ(cat.size(), 8U);
    EXPECT_EQ(cat.at(EntityKind::User, "u1"), 0U);
    EXPECT_EQ(cat.kind(cat.at(EntityKind::Affiliation, "x2")), EntityKind::Affiliation);
    EXPECT_TRUE(kg::build_catalog(c, authors, {}) == cat);
    EXPECT_THROW((void)cat.at(EntityKind::Venue, "nope"), DataError);
}

TEST(BuildKg, WroteAndSymmetricCoAuthor)
{
    corpus::Corpus c({doc("d", {"u1", "u2"}, std::nullopt)});
    std::vector<corpus::Author> authors{{"u1", {}}, {"u2", {}}};
    auto cat = kg::build_catalog(c, authors, {});
    auto ts = kg::build_kg(c, authors, cat, {}, all_positions(c));
    auto u1 = cat.at(EntityKind::User, "u1");
    auto u2 = cat.at(EntityKind::User, "u2");
    auto d = cat.at(EntityKind::Document, "d");
    EXPECT_EQ(ts, (std::vector<Triple>{{u1, RelationType::Wrote, d}, {u1, RelationType::CoAuthor, u2},
                                       {u2, RelationType::Wrote, d}, {u2, RelationType::CoAuthor, u1}}));
}

TEST(BuildKg, CitedVenueDedupAndSelfCitations)
{
    corpus::Corpus c({doc("a", {"u"}, "v"), doc("b", {"w"}, "v"), doc("c", {"u"}, "v", {"a", "b"})});
    std::vector<corpus::Author> authors{{"u", "x"}, {"w", "x"}};
    auto cat = kg::build_catalog(c, authors, {});
    auto ts = kg::build_kg(c, authors, cat, {}, all_positions(c));
    auto u = cat.at(EntityKind::User, "u");
    auto v = cat.at(EntityKind::Venue, "v");
    EXPECT_TRUE(has(ts, {u, RelationType::Cited, cat.at(EntityKind::Document, "b")}));
    // a is u's own paper: excluded from Cited by default.
    EXPECT_FALSE(has(ts, {u, RelationType::Cited, cat.at(EntityKind::Document, "a")}));
    EXPECT_EQ(std::count(ts.begin(), ts.end(), Triple{u, RelationType::InVenue, v}), 1);
    EXPECT_TRUE(has(ts, {u, RelationType::Affiliated, cat.at(EntityKind::Affiliation, "x")}));

    kg::KGConfig with_self;
    with_self.include_self_citations = true;
    auto ts2 = kg::build_kg(c, authors, cat, with_self, all_positions(c));
    EXPECT_TRUE(has(ts2, {u, RelationType::Cited, cat.at(EntityKind::Document, "a")}));
}

TEST(BuildKg, OnlySourceDocumentsContribute)
{
    corpus::Corpus c({doc("a", {"u"}, "v"), doc("b", {"w"}, "v2", {"a"})});
    std::vector<corpus::Author> authors{{"u", {}}, {"w", {}}};
    auto cat = kg::build_catalog(c, authors, {});
    std::vector<std::size_t> only_first{0};
    auto ts = kg::build_kg(c, authors, cat, {}, only_first);
    auto b = cat.at(EntityKind::Document, "b");
    for (auto const &t : ts) {
        EXPECT_NE(t.tail, b);
        EXPECT_NE(t.head, cat.at(EntityKind::User, "w"));
    }
}

TEST(BuildKg, SyntheticInvariants)
{
    auto s = corpus::generate_synthetic(test::small_synth(600), 4);
    auto pos = all_positions(s.corpus);
    kg::KGConfig user_only{false, false};
    kg::KGConfig venue{true, false};
    kg::KGConfig full{};
    auto cat = kg::build_catalog(s.corpus, s.authors, full);
    auto t_user = kg::build_kg(s.corpus, s.authors, cat, user_only, pos);
    auto t_venue = kg::build_kg(s.corpus, s.authors, cat, venue, pos);
    auto t_full = kg::build_kg(s.corpus, s.authors, cat, full, pos);
    EXPECT_NO_THROW(kg::check_kinds(t_full, cat));
    EXPECT_TRUE(std::includes(t_venue.begin(), t_venue.end(), t_user.begin(), t_user.end()));
    EXPECT_TRUE(std::includes(t_full.begin(), t_full.end(), t_venue.begin(), t_venue.end()));
    EXPECT_LT(t_user.size(), t_venue.size());
    EXPECT_LT(t_venue.size(), t_full.size());
    auto stats = kg::kg_stats(t_full, cat);
    EXPECT_EQ(stats.per_relation[static_cast<std::size_t>(RelationType::CoAuthor)] % 2, 0U);
    for (auto const &t : t_full) {
        if (t.relation == RelationType::CoAuthor) {
            EXPECT_NE(t.head, t.tail);
            EXPECT_TRUE(has(t_full, {t.tail, RelationType::CoAuthor, t.head}));
        }
    }
}

TEST(BuildKg, TripleFileRoundTrip)
{
    auto s = corpus::generate_synthetic(test::small_synth(200), 4);
    auto cat = kg::build_catalog(s.corpus, s.authors, {});
    auto ts = kg::build_kg(s.corpus, s.authors, cat, {}, all_positions(s.corpus));
    test::TempDir dir("triples");
    kg::write_triples(ts, cat, dir.path() / "t.tsv");
    EXPECT_EQ(kg::read_triples(dir.path() / "t.tsv", cat), ts);
}

TEST(KgStats, HandTally)
{
    corpus::Corpus c({doc("d", {"u1", "u2"}, "v")});
    std::vector<corpus::Author> authors{{"u1", {}}, {"u2", {}}};
    auto cat = kg::build_catalog(c, authors, {});
    EXPECT_EQ(kg::kg_stats({}, cat).triples, 0U);
    auto ts = kg::build_kg(c, authors, cat, {true, false}, all_positions(c));
    auto st = kg::kg_stats(ts, cat);
    EXPECT_EQ(st.triples, 6U);
    EXPECT_EQ(st.per_relation[static_cast<std::size_t>(RelationType::Wrote)], 2U);
    EXPECT_EQ(st.per_relation[static_cast<std::size_t>(RelationType::CoAuthor)], 2U);
    EXPECT_EQ(st.per_relation[static_cast<std::size_t>(RelationType::InVenue)], 2U);
    EXPECT_FALSE(kg::format_stats(st).empty());
}

TEST(Scores, TransEExamples)
{
    std::vector<double> h{1, 0};
    std::vector<double> r{0, 1};
    std::vector<double> t{0, 0};
    EXPECT_DOUBLE_EQ(kg::transe_score(h, r, t), std::sqrt(2.0));
    std::vector<double> hr{1, 1};
    EXPECT_EQ(kg::transe_score(h, r, hr), 0.0);
    std::mt19937_64 rng(1);
    auto a = random_vector(rng, 64);
    auto b = random_vector(rng, 64);
    auto c = random_vector(rng, 64);
    double s = 0.0;
    for (std::size_t i = 0; i < 64; ++i) {
        s += (a[i] + b[i] - c[i]) * (a[i] + b[i] - c[i]);
    }
    EXPECT_NEAR(kg::transe_score(a, b, c), std::sqrt(s), 1e-12);
}

TEST(Scores, TransHProjection)
{
    std::vector<double> w{0, 0, 1};
    std::vector<double> v{1, 2, 0};
    EXPECT_EQ(kg::transh_project(v, w), v);
    std::vector<double> par{0, 0, 3};
    for (auto x : kg::transh_project(par, w)) {
        EXPECT_NEAR(x, 0.0, 1e-15);
    }
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        auto ww = unit(random_vector(rng, 32));
        auto vv = random_vector(rng, 32);
        auto p = kg::transh_project(vv, ww);
        double d = 0.0;
        for (std::size_t j = 0; j < 32; ++j) {
            d += p[j] * ww[j];
        }
        EXPECT_NEAR(d, 0.0, 1e-10);
    }
    std::vector<double> bad{0, 0, 2};
    EXPECT_THROW((void)kg::transh_project(v, bad), ContractViolation);
}

TEST(Scores, TransHComposition)
{
    std::vector<double> w{0, 0, 1};
    std::vector<double> h{1, 0, 0};
    std::vector<double> d{0, 1, 0};
    std::vector<double> t{1, 1, 0};
    EXPECT_NEAR(kg::transh_score(h, t, w, d), 0.0, 1e-15);
    std::vector<double> zero{0, 0, 0};
    EXPECT_EQ(kg::transh_score(h, h, w, zero), 0.0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto ww = unit(random_vector(rng, 16));
        auto hh = random_vector(rng, 16);
        auto tt = random_vector(rng, 16);
        auto dd = random_vector(rng, 16);
        auto ph = kg::transh_project(hh, ww);
        auto pt = kg::transh_project(tt, ww);
        EXPECT_NEAR(kg::transh_score(hh, tt, ww, dd), kg::transe_score(ph, dd, pt), 1e-12);
    }
}

class MarginGradient : public ::testing::TestWithParam<kg::KGModel> {};

TEST_P(MarginGradient, MatchesFiniteDifferences)
{
    auto model = GetParam();
    bool transh = model == kg::KGModel::TransH;
    std::size_t dim = 10;
    std::size_t per = transh ? 4 : 3;
    std::mt19937_64 rng(transh ? 11 : 12);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x;
        for (std::size_t b = 0; b < 2 * per; ++b) {
            auto v = random_vector(rng, dim);
            if (transh && b % per == 3) {
                v = unit(v);
            }
            x.insert(x.end(), v.begin(), v.end());
        }
        // The two triples share the relation (and normal), as in training.
        std::copy(x.begin() + dim, x.begin() + 2 * dim, x.begin() + (per + 1) * dim);
        if (transh) {
            std::copy(x.begin() + 3 * dim, x.begin() + 4 * dim, x.begin() + (per + 3) * dim);
        }
        auto view = [&](std::size_t k) { return std::span<double const>(x.data() + k * dim, dim); };
        kg::TripleVectors pos{view(0), view(1), view(2), transh ? view(3) : std::span<double const>{}};
        kg::TripleVectors neg{view(per), view(per + 1), view(per + 2), transh ? view(per + 3) : std::span<double const>{}};
        double margin = 0.5;
        auto g = kg::margin_ranking_gradient(model, pos, neg, margin);
        double loss = test::oracle_margin_loss(transh, x, dim, margin);
        EXPECT_NEAR(g.loss, loss, 1e-12);
        if (loss < 1e-3) {
            continue; // inactive hinge or at the kink
        }
        ++checked;
        auto numeric = test::numeric_gradient([&](auto const &y) { return test::oracle_margin_loss(transh, y, dim, margin); }, x);
        std::vector<double> analytic;
        auto append = [&](std::vector<double> const &v) { analytic.insert(analytic.end(), v.begin(), v.end()); };
        append(g.positive.head);
        append(g.positive.relation);
        append(g.positive.tail);
        if (transh) {
            append(g.positive.normal);
        }
        append(g.negative.head);
        append(g.negative.relation);
        append(g.negative.tail);
        if (transh) {
            append(g.negative.normal);
        }
        // The oracle perturbs the positive's and negative's copies of r (and w) separately,
        // which matches reporting the two gradients separately.
        EXPECT_LT(test::relative_error(analytic, numeric), 1e-4) << "trial " << trial;
    }
    EXPECT_GT(checked, 30);
}

INSTANTIATE_TEST_SUITE_P(Models, MarginGradient, ::testing::Values(kg::KGModel::TransE, kg::KGModel::TransH));

TEST(OrthogonalityPenalty, GradientMatchesFiniteDifferences)
{
    std::mt19937_64 rng(9);
    double eps = 1e-3;
    for (int trial = 0; trial < 50; ++trial) {
        auto w = random_vector(rng, 8);
        auto d = random_vector(rng, 8);
        std::vector<double> gw(8, 0.0);
        std::vector<double> gd(8, 0.0);
        double value = kg::orthogonality_penalty(w, d, eps, 1.0, gw, gd);
        auto f = [&](std::vector<double> const &x) {
            std::vector<double> a(x.begin(), x.begin() + 8);
            std::vector<double> b(x.begin() + 8, x.end());
            double wd = 0.0;
            double dd = 0.0;
            for (std::size_t i = 0; i < 8; ++i) {
                wd += a[i] * b[i];
                dd += b[i] * b[i];
            }
            return std::max(wd * wd / dd - eps * eps, 0.0);
        };
        std::vector<double> x = w;
        x.insert(x.end(), d.begin(), d.end());
        EXPECT_NEAR(value, f(x), 1e-12);
        std::vector<double> analytic = gw;
        analytic.insert(analytic.end(), gd.begin(), gd.end());
        EXPECT_LT(test::relative_error(analytic, test::numeric_gradient(f, x)), 1e-4);
    }
}

TEST(NegativeSampling, ExhaustedWhenNoAlternative)
{
    corpus::Corpus c({doc("d", {"u"}, "v")});
    std::vector<corpus::Author> authors{{"u", {}}};
    auto cat = kg::build_catalog(c, authors, {});
    auto ts = kg::build_kg(c, authors, cat, {}, all_positions(c));
    kg::TripleSet known(ts);
    std::mt19937_64 rng(1);
    Triple pos{cat.at(EntityKind::User, "u"), RelationType::InVenue, cat.at(EntityKind::Venue, "v")};
    EXPECT_FALSE(kg::sample_negative(pos, cat, known, rng).ok);
}

TEST(NegativeSampling, TypeConstrainedFilteredAndBalanced)
{
    auto s = corpus::generate_synthetic(test::small_synth(600), 5);
    auto cat = kg::build_catalog(s.corpus, s.authors, {});
    auto ts = kg::build_kg(s.corpus, s.authors, cat, {}, all_positions(s.corpus));
    kg::TripleSet known(ts);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
    std::size_t heads = 0;
    std::size_t total = 0;
    for (int i = 0; i < 10000; ++i) {
        auto const &pos = ts[pick(rng)];
        auto neg = kg::sample_negative(pos, cat, known, rng);
        if (!neg.ok) {
            continue;
        }
        ++total;
        heads += neg.corrupted_head ? 1 : 0;
        EXPECT_FALSE(known.contains(neg.triple));
        EXPECT_EQ(neg.triple.relation, pos.relation);
        EXPECT_EQ(cat.kind(neg.triple.head), kg::head_kind(pos.relation));
        EXPECT_EQ(cat.kind(neg.triple.tail), kg::tail_kind(pos.relation));
        if (neg.corrupted_head) {
            EXPECT_EQ(neg.triple.tail, pos.tail);
        } else {
            EXPECT_EQ(neg.triple.head, pos.head);
        }
    }
    double share = static_cast<double>(heads) / static_cast<double>(total);
    EXPECT_NEAR(share, 0.5, 0.02);
}

namespace {

struct SmallKg {
    corpus::SyntheticCorpus synth;
    kg::EntityCatalog catalog;
    std::vector<Triple> triples;
    dense::DocEmbeddingStore docs;
};

SmallKg small_kg(std::size_t n_docs = 400)
{
    SmallKg k{corpus::generate_synthetic(test::small_synth(n_docs), 8), {}, {}, {}};
    k.catalog = kg::build_catalog(k.synth.corpus, k.synth.authors, {});
    k.triples = kg::build_kg(k.synth.corpus, k.synth.authors, k.catalog, {}, all_positions(k.synth.corpus));
    k.docs = dense::embed_corpus(dense::HashedBowEncoder::initialize({16, 1024}, 3), k.synth.corpus);
    return k;
}

} // namespace

TEST(TrainKg, ZeroEpochsKeepsInitialization)
{
    auto k = small_kg();
    auto emb = kg::initialize_kg(k.catalog, k.synth.corpus, k.docs, kg::KGModel::TransE, 1);
    auto before = emb;
    kg::KGTrainConfig cfg;
    cfg.model = kg::KGModel::TransE;
    cfg.epochs = 0;
    (void)kg::train_kg(emb, k.triples, k.catalog, cfg);
    EXPECT_TRUE(emb == before);
    auto u = kg::entity_vector(emb, k.catalog, EntityKind::User, k.catalog.external_id(0));
    EXPECT_FALSE(u.frozen);
    EXPECT_NEAR(norm(u.row), 1.0, 1e-6);
    auto const &first_doc = k.synth.corpus[0].doc_id;
    auto d = kg::entity_vector(emb, k.catalog, EntityKind::Document, first_doc);
    EXPECT_TRUE(d.frozen);
    EXPECT_TRUE(std::equal(d.row.begin(), d.row.end(), k.docs.row(0).begin()));
    EXPECT_THROW((void)kg::entity_vector(emb, k.catalog, EntityKind::User, "nobody"), DataError);
}

TEST(TrainKg, FrozenRowsAndTransHConstraints)
{
    auto k = small_kg();
    auto emb = kg::initialize_kg(k.catalog, k.synth.corpus, k.docs, kg::KGModel::TransH, 2);
    auto init = emb.entities;
    kg::KGTrainConfig cfg;
    cfg.model = kg::KGModel::TransH;
    cfg.epochs = 5;
    cfg.batch_size = 256;
    cfg.lr = 1e-2;
    std::size_t epochs_seen = 0;
    auto log = kg::train_kg(emb, k.triples, k.catalog, cfg, [&](kg::KGEpochLog const &, kg::KGEmbeddings const &e) {
        ++epochs_seen;
        for (std::size_t r = 0; r < e.normals.rows(); ++r) {
            EXPECT_LT(std::abs(norm(e.normals.row(r)) - 1.0), 1e-6);
        }
        for (std::size_t i = 0; i < e.entities.rows(); ++i) {
            if (e.frozen[i] == 0) {
                EXPECT_LE(norm(e.entities.row(i)), 1.0 + 1e-6);
            }
        }
    });
    EXPECT_EQ(epochs_seen, 5U);
    EXPECT_LT(log.back().mean_loss, log.front().mean_loss);
    bool any_trainable_moved = false;
    for (std::size_t i = 0; i < emb.entities.rows(); ++i) {
        auto a = emb.entities.row(i);
        auto b = init.row(i);
        bool same = std::equal(a.begin(), a.end(), b.begin(), [](float x, float y) {
            return std::bit_cast<std::uint32_t>(x) == std::bit_cast<std::uint32_t>(y);
        });
        if (emb.frozen[i] != 0) {
            EXPECT_TRUE(same) << i;
        } else {
            any_trainable_moved |= !same;
        }
    }
    EXPECT_TRUE(any_trainable_moved);
}

TEST(TrainKg, DeterministicForSeed)
{
    auto k = small_kg(200);
    kg::KGTrainConfig cfg;
    cfg.model = kg::KGModel::TransE;
    cfg.epochs = 3;
    cfg.batch_size = 128;
    auto a = kg::initialize_kg(k.catalog, k.synth.corpus, k.docs, cfg.model, 5);
    auto b = a;
    (void)kg::train_kg(a, k.triples, k.catalog, cfg);
    (void)kg::train_kg(b, k.triples, k.catalog, cfg);
    EXPECT_TRUE(a == b);
}

TEST(TrainKg, DimensionMismatchRejected)
{
    auto k = small_kg(100);
    auto emb = kg::initialize_kg(k.catalog, k.synth.corpus, k.docs, kg::KGModel::TransE, 1);
    dense::DocEmbeddingStore wrong;
    wrong.rows = Matrix<float>(3, 16);
    wrong.empty.assign(3, 0);
    EXPECT_THROW((void)kg::initialize_kg(k.catalog, k.synth.corpus, wrong, kg::KGModel::TransE, 1), Error);
}

TEST(TrainKg, SaveLoadRoundTrip)
{
    auto k = small_kg(100);
    auto emb = kg::initialize_kg(k.catalog, k.synth.corpus, k.docs, kg::KGModel::TransH, 1);
    test::TempDir dir("kgemb");
    kg::save_kg_embeddings(emb, k.catalog, dir.path());
    auto loaded = kg::load_kg_embeddings(dir.path());
    EXPECT_TRUE(loaded.embeddings == emb);
    EXPECT_TRUE(loaded.catalog == k.catalog);
}

TEST(LinkPrediction, PerfectModelRanksFirst)
{
    // Two users, three documents; place each user exactly at its document minus r.
    corpus::Corpus c({doc("a", {"u1"}, std::nullopt), doc("b", {"u2"}, std::nullopt), doc("z", {}, std::nullopt)});
    std::vector<corpus::Author> authors{{"u1", {}}, {"u2", {}}};
    auto cat = kg::build_catalog(c, authors, {false, false});
    auto ts = kg::build_kg(c, authors, cat, {false, false}, all_positions(c));
    kg::KGEmbeddings emb;
    emb.model = kg::KGModel::TransE;
    emb.entities = Matrix<float>(cat.size(), 2, 0.0F);
    emb.relations = Matrix<float>(kg::kRelationTypes, 2, 0.0F);
    emb.frozen.assign(cat.size(), 0);
    auto set = [&](EntityKind kind, std::string const &id, float x, float y) {
        auto row = emb.entities.row(cat.at(kind, id));
        row[0] = x;
        row[1] = y;
    };
    set(EntityKind::Document, "a", 1, 0);
    set(EntityKind::Document, "b", 0, 1);
    set(EntityKind::Document, "z", -1, 0);
    set(EntityKind::User, "u1", 1, 0);
    set(EntityKind::User, "u2", 0, 1);
    kg::TripleSet known(ts);
    std::vector<Triple> targets;
    for (auto const &t : ts) {
        if (t.relation == RelationType::Wrote) {
            targets.push_back(t);
        }
    }
    EXPECT_DOUBLE_EQ(kg::filtered_mean_rank(emb, cat, targets, known), 1.0);
}
