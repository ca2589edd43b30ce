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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   park_acceptance --workdir DIR [--reuse]
//
// Criteria 4-9 and 11 read two end-to-end workdirs (DIR/a and DIR/b) produced by the
// `park` binary with the default config. --reuse keeps existing ones, in which case the
// end-to-end runtime is not re-measured.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "park/common/log.hpp"
#include "park/corpus/io.hpp"
#include "park/corpus/synth.hpp"
#include "park/dense/store.hpp"
#include "park/dense/triplet.hpp"
#include "park/fusion/fusion.hpp"
#include "park/fusion/metrics.hpp"
#include "park/graph/citation.hpp"
#include "park/kg/embed.hpp"
#include "park/kg/graph.hpp"
#include "park/lexical/bm25.hpp"
#include "park/lexical/index.hpp"
#include "park/lexical/tokenize.hpp"
#include "park/pipeline/candidates.hpp"
#include "park/pipeline/config.hpp"

namespace fs = std::filesystem;
using namespace park;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Checker {
  public:
    void fail(std::string message)
    {
        if (m_failures++ < 3) {
            m_messages += (m_messages.empty() ? "" : "; ") + std::move(message);
        }
    }
    void expect(bool ok, std::string const &message)
    {
        if (!ok) {
            fail(message);
        }
    }
    [[nodiscard]] bool ok() const { return m_failures == 0; }
    [[nodiscard]] Outcome outcome(std::string detail) const
    {
        if (ok()) {
            return {true, std::move(detail)};
        }
        return {false, std::to_string(m_failures) + " failure(s): " + m_messages};
    }

  private:
    std::size_t m_failures = 0;
    std::string m_messages;
};

std::string fmt(char const *format, double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), format, value);
    return buffer;
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(fs::path const &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::map<std::string, std::string> read_summary(fs::path const &path)
{
    std::map<std::string, std::string> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq != std::string::npos) {
            out[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }
    return out;
}

double number(std::map<std::string, std::string> const &summary, std::string const &key)
{
    auto it = summary.find(key);
    if (it == summary.end()) {
        throw std::runtime_error("summary lacks " + key);
    }
    return std::stod(it->second);
}

std::vector<double> random_vector(std::mt19937_64 &rng, std::size_t n, double sigma)
{
    std::normal_distribution<double> dist(0.0, sigma);
    std::vector<double> v(n);
    for (auto &x : v) {
        x = dist(rng);
    }
    return v;
}

std::vector<double> unit(std::vector<double> v)
{
    double n = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (auto &x : v) {
        x /= n;
    }
    return v;
}

template <typename A, typename B>
double dot(A const &a, B const &b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    }
    return s;
}

std::vector<std::string> order_by(std::vector<std::string> const &ids, std::vector<double> const &scores)
{
    std::vector<std::size_t> idx(ids.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
        return scores[a] != scores[b] ? scores[a] > scores[b] : ids[a] < ids[b];
    });
    std::vector<std::string> out;
    for (auto i : idx) {
        out.push_back(ids[i]);
    }
    return out;
}

std::vector<std::string> ids_of(std::vector<fusion::Ranked> const &ranked)
{
    std::vector<std::string> out;
    for (auto const &r : ranked) {
        out.push_back(r.doc_id);
    }
    return out;
}

// 1 --------------------------------------------------------------------------------------

Outcome metric_oracles()
{
    Checker c;
    std::mt19937_64 rng(1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        std::uniform_int_distribution<std::size_t> len(1, 200);
        std::size_t pool_size = 250;
        std::vector<std::string> pool;
        for (std::size_t d = 0; d < pool_size; ++d) {
            pool.push_back("d" + std::to_string(d));
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::string> ranking(pool.begin(), pool.begin() + static_cast<long>(len(rng)));
        std::shuffle(pool.begin(), pool.end(), rng);
        std::uniform_int_distribution<std::size_t> nrel(1, 30);
        std::set<std::string> rel(pool.begin(), pool.begin() + static_cast<long>(nrel(rng)));
        double errs[] = {
            std::abs(fusion::map_at_k(ranking, rel, 100) - test::oracle_average_precision(ranking, rel, 100)),
            std::abs(fusion::mrr_at_k(ranking, rel, 10) - test::oracle_reciprocal_rank(ranking, rel, 10)),
            std::abs(fusion::ndcg_at_k(ranking, rel, 10) - test::oracle_ndcg(ranking, rel, 10)),
        };
        for (double e : errs) {
            worst = std::max(worst, e);
            c.expect(e <= 1e-9, "instance " + std::to_string(i) + " differs by " + fmt("%.3g", e));
        }
    }
    return c.outcome("100 instances, max |diff| " + fmt("%.2g", worst));
}

// 2 --------------------------------------------------------------------------------------

Outcome bm25_exactness()
{
    Checker c;
    corpus::SynthConfig cfg;
    cfg.n_docs = 5000;
    cfg.n_authors = 3750;
    auto synth = corpus::generate_synthetic(cfg, 7);
    auto const &corpus = synth.corpus;
    std::vector<std::size_t> positions(corpus.size());
    std::iota(positions.begin(), positions.end(), 0);
    auto index = lexical::InvertedIndex::build(corpus, positions);

    std::vector<std::vector<std::string>> docs;
    for (auto const &d : corpus.documents()) {
        docs.push_back(lexical::analyze(d.title + " " + d.abstract));
    }
    lexical::BM25Params params;
    test::OracleBm25 oracle(docs, params.k1, params.b);

    std::size_t queries = 0;
    double worst = 0.0;
    for (std::size_t pos = 0; pos < corpus.size() && queries < 200; pos += 23) {
        auto q = lexical::analyze(corpus[pos].title);
        if (q.empty()) {
            continue;
        }
        ++queries;
        auto got = lexical::retrieve_topk(index, q, 100);
        auto want = oracle.rank_all(q);
        want.resize(std::min<std::size_t>(want.size(), 100));
        if (got.size() != want.size()) {
            c.fail("query " + std::to_string(pos) + ": " + std::to_string(got.size()) + " vs " +
                   std::to_string(want.size()) + " hits");
            continue;
        }
        for (std::size_t i = 0; i < got.size(); ++i) {
            double e = std::abs(got[i].score - want[i].second);
            worst = std::max(worst, e);
            c.expect(index.position(got[i].doc) == want[i].first && e <= 1e-12,
                     "query " + std::to_string(pos) + " rank " + std::to_string(i + 1));
        }
    }
    c.expect(queries == 200, "only " + std::to_string(queries) + " queries");
    return c.outcome(std::to_string(queries) + " queries over " + std::to_string(corpus.size()) +
                     " docs, max |diff| " + fmt("%.2g", worst));
}

// 3 --------------------------------------------------------------------------------------

Outcome gradient_checks()
{
    Checker c;
    double worst = 0.0;
    auto record = [&](double e, std::string const &what) {
        worst = std::max(worst, e);
        c.expect(e < 1e-4, what + " rel. error " + fmt("%.3g", e));
    };

    std::mt19937_64 rng(3);
    int triplets = 0;
    while (triplets < 100) {
        auto q = random_vector(rng, 8, 1.0);
        auto p = random_vector(rng, 8, 1.0);
        std::vector<std::vector<double>> negs{random_vector(rng, 8, 1.0), random_vector(rng, 8, 1.0),
                                              random_vector(rng, 8, 1.0)};
        bool kink = false;
        for (auto const &n : negs) {
            kink |= std::abs(test::l2_distance(q, p) - test::l2_distance(q, n) + 1.0) < 1e-3;
        }
        if (kink) {
            continue;
        }
        ++triplets;
        std::vector<dense::VectorView> views(negs.begin(), negs.end());
        auto g = dense::triplet_loss_gradient(q, p, views, 1.0);
        record(test::relative_error(g.query, test::numeric_gradient(
                                                 [&](auto const &x) { return test::oracle_triplet(x, p, negs, 1.0); }, q)),
               "triplet query");
        record(test::relative_error(g.positive, test::numeric_gradient(
                                                    [&](auto const &x) { return test::oracle_triplet(q, x, negs, 1.0); }, p)),
               "triplet positive");
        for (std::size_t k = 0; k < negs.size(); ++k) {
            auto f = [&](std::vector<double> const &x) {
                auto copy = negs;
                copy[k] = x;
                return test::oracle_triplet(q, p, copy, 1.0);
            };
            record(test::relative_error(g.negatives[k], test::numeric_gradient(f, negs[k])), "triplet negative");
        }
    }

    for (auto model : {kg::KGModel::TransE, kg::KGModel::TransH}) {
        bool transh = model == kg::KGModel::TransH;
        std::size_t dim = 10;
        std::size_t per = transh ? 4 : 3;
        int checked = 0;
        while (checked < 100) {
            std::vector<double> x;
            for (std::size_t b = 0; b < 2 * per; ++b) {
                auto v = random_vector(rng, dim, 0.5);
                if (transh && b % per == 3) {
                    v = unit(v);
                }
                x.insert(x.end(), v.begin(), v.end());
            }
            std::copy(x.begin() + static_cast<long>(dim), x.begin() + static_cast<long>(2 * dim),
                      x.begin() + static_cast<long>((per + 1) * dim));
            if (transh) {
                std::copy(x.begin() + static_cast<long>(3 * dim), x.begin() + static_cast<long>(4 * dim),
                          x.begin() + static_cast<long>((per + 3) * dim));
            }
            double margin = 0.5;
            double loss = test::oracle_margin_loss(transh, x, dim, margin);
            if (loss < 1e-3) {
                continue;
            }
            ++checked;
            auto view = [&](std::size_t k) { return std::span<double const>(x.data() + k * dim, dim); };
            std::span<double const> none;
            kg::TripleVectors pos{view(0), view(1), view(2), transh ? view(3) : none};
            kg::TripleVectors neg{view(per), view(per + 1), view(per + 2), transh ? view(per + 3) : none};
            auto g = kg::margin_ranking_gradient(model, pos, neg, margin);
            std::vector<double> analytic;
            for (auto const *tg : {&g.positive, &g.negative}) {
                for (auto const *v : {&tg->head, &tg->relation, &tg->tail}) {
                    analytic.insert(analytic.end(), v->begin(), v->end());
                }
                if (transh) {
                    analytic.insert(analytic.end(), tg->normal.begin(), tg->normal.end());
                }
            }
            auto numeric =
                test::numeric_gradient([&](auto const &y) { return test::oracle_margin_loss(transh, y, dim, margin); }, x);
            record(test::relative_error(analytic, numeric), std::string(kg::name(model)));
        }
    }
    return c.outcome("100 triplet + 100 TransE + 100 TransH instances, max rel. error " + fmt("%.2g", worst));
}

// 10 -------------------------------------------------------------------------------------

Outcome pagerank_checks()
{
    Checker c;
    std::size_t n = 6;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> complete;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = 0; v < n; ++v) {
            if (u != v) {
                complete.emplace_back(u, v);
            }
        }
    }
    auto pr = graph::pagerank(graph::CitationGraph(n, complete));
    double worst = 0.0;
    for (double x : pr) {
        worst = std::max(worst, std::abs(x - 1.0 / static_cast<double>(n)));
    }
    c.expect(worst <= 1e-8, "complete graph deviates by " + fmt("%.3g", worst));
    c.expect(std::abs(std::accumulate(pr.begin(), pr.end(), 0.0) - 1.0) <= 1e-8, "complete graph sum");

    auto chain = graph::pagerank(graph::CitationGraph(3, {{0, 1}, {1, 2}}));
    auto oracle = test::oracle_pagerank(3, {{0, 1}, {1, 2}}, 0.85);
    double chain_err = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        chain_err = std::max(chain_err, std::abs(chain[i] - oracle[i]));
    }
    c.expect(chain_err <= 1e-8, "chain deviates by " + fmt("%.3g", chain_err));
    c.expect(std::abs(std::accumulate(chain.begin(), chain.end(), 0.0) - 1.0) <= 1e-8, "chain sum");

    std::mt19937_64 rng(10);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::uniform_int_distribution<std::uint32_t> node(0, 199);
    for (int i = 0; i < 800; ++i) {
        auto u = node(rng);
        auto v = node(rng);
        if (u != v) {
            edges.emplace_back(u, v);
        }
    }
    auto random = graph::pagerank(graph::CitationGraph(200, edges));
    double sum = std::accumulate(random.begin(), random.end(), 0.0);
    c.expect(std::abs(sum - 1.0) <= 1e-8, "random graph sum " + fmt("%.12f", sum));
    return c.outcome("uniform within " + fmt("%.2g", worst) + ", chain within " + fmt("%.2g", chain_err));
}

// End-to-end artifacts ---------------------------------------------------------------------

struct Artifacts {
    fs::path a;
    fs::path b;
    double runtime_a = -1.0;
    bool ok = false;
    std::string error;
};

int run_end_to_end(fs::path const &workdir)
{
    std::string command = std::string(PARK_CLI_PATH) + " -q --threads 1 -w '" + workdir.string() + "' end-to-end";
    return std::system(command.c_str());
}

Artifacts produce(fs::path const &root, bool reuse)
{
    Artifacts art;
    art.a = root / "a";
    art.b = root / "b";
    for (auto const &dir : {art.a, art.b}) {
        if (reuse && fs::exists(dir / "ablate" / "summary.txt")) {
            continue;
        }
        fs::remove_all(dir);
        auto start = Clock::now();
        int status = run_end_to_end(dir);
        if (dir == art.a) {
            art.runtime_a = seconds_since(start);
        }
        if (status != 0) {
            art.error = "end-to-end in " + dir.string() + " exited with " + std::to_string(status);
            return art;
        }
    }
    art.ok = true;
    return art;
}

struct Loaded {
    corpus::Corpus corpus;
    dense::DocEmbeddingStore docs;
    kg::EntityCatalog catalog;
    std::vector<kg::Triple> triples;
};

Loaded load_full_kg(fs::path const &workdir)
{
    Loaded l;
    l.corpus = corpus::load_corpus(workdir / "corpus" / "corpus.jsonl");
    l.docs = dense::load_precomputed_embeddings(workdir / "embed" / "docs.emb", l.corpus.size());
    l.catalog = kg::load_kg_embeddings(workdir / "kgemb" / "full-transh").catalog;
    l.triples = kg::read_triples(workdir / "kg" / "full" / "triples.tsv", l.catalog);
    return l;
}

bool same_bits(std::span<float const> a, std::span<float const> b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](float x, float y) {
               return std::bit_cast<std::uint32_t>(x) == std::bit_cast<std::uint32_t>(y);
           });
}

// 4 --------------------------------------------------------------------------------------

Outcome frozen_documents(fs::path const &workdir)
{
    Checker c;
    auto corpus = corpus::load_corpus(workdir / "corpus" / "corpus.jsonl");
    auto docs = dense::load_precomputed_embeddings(workdir / "embed" / "docs.emb", corpus.size());
    std::size_t models = 0;
    std::size_t rows = 0;
    for (auto const &entry : fs::directory_iterator(workdir / "kgemb")) {
        if (!entry.is_directory()) {
            continue;
        }
        ++models;
        auto loaded = kg::load_kg_embeddings(entry.path());
        auto const &emb = loaded.embeddings;
        for (auto id : loaded.catalog.of_kind(kg::EntityKind::Document)) {
            auto pos = corpus.find(loaded.catalog.external_id(id));
            if (!pos) {
                c.fail(entry.path().filename().string() + ": unknown document " + loaded.catalog.external_id(id));
                continue;
            }
            ++rows;
            c.expect(emb.frozen.at(id) != 0, entry.path().filename().string() + ": row not marked frozen");
            c.expect(same_bits(emb.entities.row(id), docs.row(*pos)),
                     entry.path().filename().string() + ": document " + loaded.catalog.external_id(id) + " changed");
        }
    }
    c.expect(models >= 2, "expected trained models under kgemb/");
    return c.outcome(std::to_string(rows) + " document rows bit-identical across " + std::to_string(models) +
                     " trained models");
}

// 5 --------------------------------------------------------------------------------------

Outcome transh_constraints(Loaded const &l, pipeline::PipelineConfig const &config)
{
    Checker c;
    auto emb = kg::initialize_kg(l.catalog, l.corpus, l.docs, kg::KGModel::TransH, config.seed);
    auto cfg = config.kg_train;
    cfg.model = kg::KGModel::TransH;
    cfg.seed = config.seed;
    cfg.threads = 1;
    std::size_t epochs = 0;
    double worst_norm = 0.0;
    double worst_orth = 0.0;
    (void)kg::train_kg(emb, l.triples, l.catalog, cfg, [&](kg::KGEpochLog const &log, kg::KGEmbeddings const &e) {
        ++epochs;
        for (std::size_t r = 0; r < e.normals.rows(); ++r) {
            auto w = e.normals.row(r);
            std::vector<double> wd(w.begin(), w.end());
            double dev = std::abs(std::sqrt(dot(wd, wd)) - 1.0);
            worst_norm = std::max(worst_norm, dev);
            c.expect(dev < 1e-6, "epoch " + std::to_string(log.epoch) + " relation " + std::to_string(r) + " |w| off by " +
                                     fmt("%.3g", dev));
            for (std::size_t i = 0; i < e.entities.rows(); ++i) {
                auto row = e.entities.row(i);
                std::vector<double> v(row.begin(), row.end());
                double orth = std::abs(dot(kg::transh_project(v, wd), wd));
                worst_orth = std::max(worst_orth, orth);
                if (orth >= 1e-6) {
                    c.fail("epoch " + std::to_string(log.epoch) + " entity " + std::to_string(i) + " projection off by " +
                           fmt("%.3g", orth));
                }
            }
        }
    });
    c.expect(epochs == cfg.epochs, "observer saw " + std::to_string(epochs) + " epochs");
    return c.outcome(std::to_string(epochs) + " epochs, " + std::to_string(emb.normals.rows()) + " normals x " +
                     std::to_string(emb.entities.rows()) + " entities; max | |w|-1 | " + fmt("%.2g", worst_norm) +
                     ", max |<P(v),w>| " + fmt("%.2g", worst_orth));
}

// 6 --------------------------------------------------------------------------------------

Outcome link_prediction(Loaded const &l, pipeline::PipelineConfig const &config)
{
    auto start = Clock::now();
    std::vector<kg::Triple> wrote;
    std::vector<kg::Triple> rest;
    for (auto const &t : l.triples) {
        (t.relation == kg::RelationType::Wrote ? wrote : rest).push_back(t);
    }
    if (wrote.size() <= 500) {
        return {false, "only " + std::to_string(wrote.size()) + " Wrote triples"};
    }
    std::mt19937_64 rng(config.seed);
    std::shuffle(wrote.begin(), wrote.end(), rng);
    std::vector<kg::Triple> held(wrote.begin(), wrote.begin() + 500);
    rest.insert(rest.end(), wrote.begin() + 500, wrote.end());
    std::sort(rest.begin(), rest.end());
    kg::TripleSet known(l.triples);

    auto emb = kg::initialize_kg(l.catalog, l.corpus, l.docs, kg::KGModel::TransE, config.seed);
    double before = kg::filtered_mean_rank(emb, l.catalog, held, known, 1);
    auto cfg = config.kg_train;
    cfg.model = kg::KGModel::TransE;
    cfg.seed = config.seed;
    cfg.threads = 1;
    (void)kg::train_kg(emb, rest, l.catalog, cfg);
    double after = kg::filtered_mean_rank(emb, l.catalog, held, known, 1);
    double elapsed = seconds_since(start);
    bool ok = after <= 0.5 * before && elapsed < 300.0;
    return {ok, "mean rank " + fmt("%.1f", before) + " -> " + fmt("%.1f", after) + " after " +
                    std::to_string(cfg.epochs) + " epochs (ratio " + fmt("%.3f", after / before) + ", limit 0.5), " +
                    fmt("%.0f", elapsed) + " s of 300"};
}

// 7 --------------------------------------------------------------------------------------

Outcome fusion_projection(fs::path const &workdir)
{
    Checker c;
    auto table = pipeline::read_candidates(workdir / "score" / "candidates_test.tsv");
    auto lists = table.lists("");
    for (std::size_t q = 0; q < lists.size(); ++q) {
        auto const &raw = table.queries[q];
        c.expect(ids_of(fusion::rank({1, 0, 0}, lists[q])) == order_by(raw.doc_ids, raw.bm25),
                 raw.query_id + ": (1,0,0) differs from the BM25 ordering");
        c.expect(ids_of(fusion::rank({0, 1, 0}, lists[q])) == order_by(raw.doc_ids, raw.dense),
                 raw.query_id + ": (0,1,0) differs from the dense ordering");
    }

    auto validation = pipeline::read_candidates(workdir / "score" / "candidates_validation.tsv");
    auto qrels = corpus::read_qrels(workdir / "index" / "qrels_validation.txt");
    auto vlists = validation.lists("kg:full-transh");
    auto tuned = fusion::tune_lambdas(vlists, qrels, 0.05);
    double best = -1.0;
    std::size_t points = 0;
    for (auto const &lam : fusion::lambda_grid(0.05)) {
        ++points;
        double total = 0.0;
        std::size_t judged = 0;
        for (auto const &l : vlists) {
            auto it = qrels.find(l.query_id);
            if (it == qrels.end()) {
                continue;
            }
            ++judged;
            total += test::oracle_average_precision(ids_of(fusion::rank(lam, l)), it->second, 100);
        }
        double map = total / static_cast<double>(judged);
        best = std::max(best, map);
        if (lam.bm25 == tuned.best.bm25 && lam.dense == tuned.best.dense && lam.user == tuned.best.user) {
            c.expect(std::abs(map - tuned.best_map) <= 1e-12, "reported MAP of the chosen point does not re-evaluate");
        }
    }
    c.expect(std::abs(best - tuned.best_map) <= 1e-12,
             "tuned MAP " + fmt("%.6f", tuned.best_map) + " is not the grid maximum " + fmt("%.6f", best));
    return c.outcome(std::to_string(lists.size()) + " test queries; tuned " + fmt("%.2f", tuned.best.bm25) + "/" +
                     fmt("%.2f", tuned.best.dense) + "/" + fmt("%.2f", tuned.best.user) + " = max over " +
                     std::to_string(points) + " points (MAP " + fmt("%.4f", best) + ")");
}

// 8 --------------------------------------------------------------------------------------

Outcome system_ordering(Artifacts const &art)
{
    auto s = read_summary(art.a / "eval" / "summary.txt");
    double bm25 = number(s, "BM25.map@100");
    double fused = number(s, "BM25+Dense.map@100");
    double park = number(s, "PARK-H.map@100");
    double p = number(s, "PARK-H.vs.BM25+Dense.p_map");
    double queries = number(s, "PARK-H.queries");
    bool timed = art.runtime_a >= 0.0;
    bool ok = fused > bm25 && park > fused && p < 0.05 && queries >= 100 && (!timed || art.runtime_a < 900.0);
    std::string runtime = timed ? fmt("%.0f", art.runtime_a) + " s of 900" : "runtime not re-measured (--reuse)";
    return {ok, "MAP BM25 " + fmt("%.4f", bm25) + " < BM25+Dense " + fmt("%.4f", fused) + " < PARK-H " +
                    fmt("%.4f", park) + ", p=" + fmt("%.4g", p) + ", " + fmt("%.0f", queries) + " queries, " + runtime};
}

// 9 --------------------------------------------------------------------------------------

Outcome ablation_ordering(fs::path const &workdir)
{
    auto s = read_summary(workdir / "ablate" / "summary.txt");
    double user = number(s, "ablation-user.ndcg@10");
    double venue = number(s, "ablation-venue.ndcg@10");
    double aff = number(s, "ablation-affiliation.ndcg@10");
    bool ok = user <= venue && venue <= aff && aff - user > 0.0;
    return {ok, "NDCG@10 user-only " + fmt("%.4f", user) + " <= +venue " + fmt("%.4f", venue) + " <= +affiliation " +
                    fmt("%.4f", aff) + " (gap " + fmt("%+.4f", aff - user) + ")"};
}

// 11 -------------------------------------------------------------------------------------

Outcome determinism(Artifacts const &art)
{
    Checker c;
    std::vector<fs::path> files;
    for (auto const &entry : fs::directory_iterator(art.a / "eval" / "runs")) {
        files.push_back(fs::relative(entry.path(), art.a));
    }
    std::size_t runs = files.size();
    for (auto const *f : {"eval/report.txt", "eval/summary.txt", "ablate/ablation.txt", "ablate/summary.txt"}) {
        files.emplace_back(f);
    }
    for (auto const &f : files) {
        c.expect(fs::exists(art.b / f), f.string() + " missing in second run");
        c.expect(slurp(art.a / f) == slurp(art.b / f), f.string() + " differs");
    }
    c.expect(runs > 0, "no run files");
    return c.outcome(std::to_string(runs) + " run files and 4 reports byte-identical");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"acceptance checks"};
    fs::path workdir = "acceptance_work";
    bool reuse = false;
    app.add_option("-w,--workdir", workdir, "scratch directory for the end-to-end runs");
    app.add_flag("--reuse", reuse, "keep end-to-end workdirs from a previous invocation");
    CLI11_PARSE(app, argc, argv);
    fs::create_directories(workdir);
    log::set_quiet(true);

    int failures = 0;
    auto report = [&](int id, char const *name, double limit, std::function<Outcome()> const &check) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = check();
        } catch (std::exception const &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double elapsed = seconds_since(start);
        if (limit > 0.0 && elapsed >= limit) {
            o.pass = false;
            o.detail += "; took " + fmt("%.1f", elapsed) + " s, limit " + fmt("%.0f", limit) + " s";
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s  %2d %-28s %7.1fs  %s\n", o.pass ? "PASS" : "FAIL", id, name, elapsed, o.detail.c_str());
        std::fflush(stdout);
    };

    report(1, "metric-oracle-equivalence", 5.0, metric_oracles);
    report(2, "bm25-exactness", 30.0, bm25_exactness);
    report(3, "gradient-checks", 10.0, gradient_checks);
    report(10, "pagerank", 0.0, pagerank_checks);

    auto art = produce(workdir, reuse);
    auto config = pipeline::load_config(std::nullopt);
    auto needs = [&](std::function<Outcome()> const &check) -> std::function<Outcome()> {
        return [&art, check]() -> Outcome {
            if (!art.ok) {
                return {false, art.error};
            }
            return check();
        };
    };
    std::optional<Loaded> loaded;
    auto with_kg = [&](std::function<Outcome(Loaded const &)> const &check) {
        return needs([&, check] {
            if (!loaded) {
                loaded = load_full_kg(art.a);
            }
            return check(*loaded);
        });
    };

    report(4, "frozen-documents", 0.0, needs([&] { return frozen_documents(art.a); }));
    report(5, "transh-constraints", 0.0, with_kg([&](Loaded const &l) { return transh_constraints(l, config); }));
    report(6, "kg-link-prediction", 0.0, with_kg([&](Loaded const &l) { return link_prediction(l, config); }));
    report(7, "fusion-projection", 0.0, needs([&] { return fusion_projection(art.a); }));
    report(8, "system-ordering", 0.0, needs([&] { return system_ordering(art); }));
    report(9, "ablation-ordering", 0.0, needs([&] { return ablation_ordering(art.a); }));
    report(11, "determinism", 0.0, needs([&] { return determinism(art); }));

    std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
