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

#include "park/pipeline/stages.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "park/common/log.hpp"
#include "park/common/parallel.hpp"
#include "park/corpus/io.hpp"
#include "park/corpus/split.hpp"
#include "park/corpus/synth.hpp"
#include "park/dense/store.hpp"
#include "park/dense/trainer.hpp"
#include "park/fusion/report.hpp"
#include "park/graph/citation.hpp"
#include "park/kg/graph.hpp"
#include "park/lexical/pools.hpp"
#include "park/lexical/tokenize.hpp"
#include "park/pipeline/candidates.hpp"
#include "park/pipeline/workdir.hpp"
#include "park/user/models.hpp"

namespace park::pipeline {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using Json = nlohmann::ordered_json;

namespace {

struct CorpusArtifacts {
    corpus::Corpus corpus;
    std::vector<corpus::Author> authors;
};

CorpusArtifacts load_corpus_artifacts(Workdir const &wd)
{
    return {corpus::load_corpus(wd.file(Stage::Corpus, "corpus.jsonl")),
            corpus::load_authors(wd.file(Stage::Corpus, "authors.jsonl"))};
}

struct SplitArtifact {
    int cutoff_year = 0;
    std::vector<std::size_t> train_docs;
    std::vector<std::size_t> validation_sources;
    std::vector<std::size_t> profile_docs;
};

std::vector<std::size_t> positions_of(corpus::Corpus const &corpus, Json const &ids)
{
    std::vector<std::size_t> out;
    out.reserve(ids.size());
    for (auto const &id : ids) {
        auto pos = corpus.find(id.get<std::string>());
        if (!pos) {
            throw DataError("split refers to unknown document " + id.get<std::string>());
        }
        out.push_back(*pos);
    }
    return out;
}

SplitArtifact load_split(Workdir const &wd, corpus::Corpus const &corpus)
{
    auto path = wd.file(Stage::Index, "split.json");
    std::ifstream in(path);
    if (!in) {
        throw MissingArtifact("missing " + path.string() + ": run `index` first");
    }
    auto json = Json::parse(in, nullptr, false);
    if (json.is_discarded()) {
        throw DataError("corrupt split file " + path.string());
    }
    SplitArtifact s;
    s.cutoff_year = json.at("cutoff_year").get<int>();
    s.train_docs = positions_of(corpus, json.at("train_docs"));
    s.validation_sources = positions_of(corpus, json.at("validation_sources"));
    std::set<std::size_t> held(s.validation_sources.begin(), s.validation_sources.end());
    for (auto p : s.train_docs) {
        if (!held.contains(p)) {
            s.profile_docs.push_back(p);
        }
    }
    return s;
}

void write_text(fs::path const &path, std::string const &text)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << text;
}

std::string file_safe(std::string const &name)
{
    std::string out = name;
    for (auto &c : out) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-' || c == '+' || c == '_')) {
            c = '_';
        }
    }
    return out;
}

std::string pool_file(int year) { return "pool_" + std::to_string(year) + ".pkix"; }

std::string kg_channel(KgJob const &job) { return "kg:" + job.key(); }

void finish(Workdir const &wd, PipelineConfig const &config, Stage stage, std::vector<fs::path> const &inputs,
            std::vector<fs::path> const &outputs, Clock::time_point start)
{
    write_manifest(wd, config, stage, inputs, outputs, Clock::now() - start);
    log::info(command_of(stage), ": done in ", std::chrono::duration<double>(Clock::now() - start).count(), " s");
}

std::string variant_name(kg::KGConfig const &c)
{
    if (c.include_venue && c.include_affiliation) {
        return "full";
    }
    if (c.include_venue) {
        return "venue";
    }
    if (c.include_affiliation) {
        return "aff";
    }
    return "user";
}

void save_corpus_stage(Workdir const &wd, PipelineConfig const &config, corpus::Corpus const &corpus,
                       std::vector<corpus::Author> const &authors, std::vector<fs::path> const &inputs,
                       Clock::time_point start)
{
    wd.prepare(Stage::Corpus);
    auto docs = wd.file(Stage::Corpus, "corpus.jsonl");
    auto people = wd.file(Stage::Corpus, "authors.jsonl");
    corpus::save_corpus(corpus, docs);
    corpus::save_authors(authors, people);
    finish(wd, config, Stage::Corpus, inputs, {docs, people}, start);
}

} // namespace

std::vector<KgVariant> kg_variants(PipelineConfig const &config)
{
    std::vector<KgVariant> out;
    auto add = [&](kg::KGConfig c) {
        c.include_self_citations = config.kg.include_self_citations;
        auto name = variant_name(c);
        if (std::ranges::none_of(out, [&](KgVariant const &v) { return v.name == name; })) {
            out.push_back({name, c});
        }
    };
    add(config.kg);
    add({false, false, false});
    add({true, false, false});
    add({true, true, false});
    return out;
}

std::string KgJob::key() const { return variant.name + "-" + std::string(kg::name(model)); }

std::vector<KgJob> kg_jobs(PipelineConfig const &config)
{
    auto variants = kg_variants(config);
    std::vector<KgJob> jobs;
    auto add = [&](KgVariant const &v, kg::KGModel m) {
        KgJob job{v, m};
        if (std::ranges::none_of(jobs, [&](KgJob const &j) { return j.key() == job.key(); })) {
            jobs.push_back(job);
        }
    };
    add(variants.front(), kg::KGModel::TransE);
    add(variants.front(), kg::KGModel::TransH);
    for (auto const &v : variants) {
        if (v.name == "user" || v.name == "venue" || v.name == "full") {
            add(v, config.ablation_model);
        }
    }
    return jobs;
}

std::vector<SystemSpec> systems(PipelineConfig const &config)
{
    using F = SystemSpec::Fusion;
    auto main = variant_name(config.kg);
    auto abl = std::string(kg::name(config.ablation_model));
    return {
        {"BM25", "", F::Fixed, {1.0, 0.0, 0.0}, false},
        {"BM25+Dense", "", F::TwoChannel, {}, false},
        {"Mean", "mean", F::ThreeChannel, {}, false},
        {"Attention", "attention", F::ThreeChannel, {}, false},
        {"SelfCitation", "self_citation", F::ThreeChannel, {}, false},
        {"POP", "pop", F::ThreeChannel, {}, false},
        {"PageRank", "pagerank", F::ThreeChannel, {}, false},
        {"PARK-E", "kg:" + main + "-transe", F::ThreeChannel, {}, false},
        {"PARK-H", "kg:" + main + "-transh", F::ThreeChannel, {}, false},
        {"ablation-user", "kg:user-" + abl, F::ThreeChannel, {}, true},
        {"ablation-venue", "kg:venue-" + abl, F::ThreeChannel, {}, true},
        {"ablation-affiliation", "kg:full-" + abl, F::ThreeChannel, {}, true},
    };
}

void synth(PipelineConfig const &config, RunOptions const &)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    auto generated = corpus::generate_synthetic(config.synth, config.seed);
    log::info("synth: ", generated.corpus.size(), " documents, ", generated.authors.size(), " authors");
    save_corpus_stage(wd, config, generated.corpus, generated.authors, {}, start);
}

void ingest(PipelineConfig const &config, RunOptions const &)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    if (config.corpus_path.empty()) {
        throw ConfigError("ingest needs paths.corpus");
    }
    corpus::LoadReport report;
    auto docs = corpus::load_corpus(config.corpus_path, &report);
    std::vector<corpus::Author> authors;
    std::vector<fs::path> inputs{config.corpus_path};
    if (!config.authors_path.empty()) {
        authors = corpus::load_authors(config.authors_path);
        inputs.push_back(config.authors_path);
    }
    std::set<std::string> listed;
    for (auto const &a : authors) {
        listed.insert(a.author_id);
    }
    std::set<std::string> missing;
    for (auto const &d : docs.documents()) {
        for (auto const &a : d.author_ids) {
            if (!listed.contains(a)) {
                missing.insert(a);
            }
        }
    }
    for (auto const &a : missing) {
        authors.push_back({a, std::nullopt});
    }
    log::info("ingest: ", report.documents, " documents, ", report.self_references_dropped,
              " self-references and ", report.dangling_references_dropped, " dangling references dropped");
    save_corpus_stage(wd, config, docs, authors, inputs, start);
}

void index(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::Corpus, options.force);
    auto [docs, authors] = load_corpus_artifacts(wd);
    int cutoff = config.cutoff_year ? *config.cutoff_year : corpus::percentile_cutoff(docs, config.cutoff_fraction);
    auto split = corpus::chronological_split(docs, {cutoff}, config.sampling, config.seed + 1);

    lexical::RetrievalPools pools(docs);
    std::set<int> years;
    for (auto const *qs : {&split.validation_queries, &split.test_queries}) {
        for (auto const &q : *qs) {
            years.insert(q.year);
        }
    }
    pools.prepare(years);

    auto dir = wd.prepare(Stage::Index);
    std::vector<fs::path> outputs;
    corpus::QrelSet all_qrels;
    std::map<std::string, std::size_t> kept;
    for (auto [name, queries] : {std::pair{"validation", &split.validation_queries},
                                 std::pair{"test", &split.test_queries}}) {
        corpus::QrelReport report;
        auto qrels = corpus::build_qrels(docs, pools, *queries, config.qrels, &report);
        std::erase_if(*queries, [&](corpus::Query const &q) { return !qrels.contains(q.query_id); });
        log::info("index: ", name, " queries ", queries->size(), " (", report.dropped, " without relevant documents)");
        if (queries->empty()) {
            throw DataError(std::string("no ") + name + " queries with relevant documents");
        }
        kept[name] = queries->size();
        auto qpath = dir / (std::string("queries_") + name + ".tsv");
        auto rpath = dir / (std::string("qrels_") + name + ".txt");
        corpus::write_queries(*queries, qpath);
        corpus::write_qrels(qrels, rpath);
        outputs.push_back(qpath);
        outputs.push_back(rpath);
    }
    auto train_path = dir / "queries_train.tsv";
    corpus::write_queries(split.train_queries, train_path);
    outputs.push_back(train_path);

    for (auto const &[year, idx] : pools.all()) {
        if (idx) {
            auto path = dir / pool_file(year);
            idx->save(path);
            outputs.push_back(path);
        }
    }

    Json s;
    s["cutoff_year"] = cutoff;
    auto ids = [&](std::vector<std::size_t> const &positions) {
        Json out = Json::array();
        for (auto p : positions) {
            out.push_back(docs[p].doc_id);
        }
        return out;
    };
    s["train_docs"] = ids(split.train_docs);
    s["validation_sources"] = ids(split.validation_sources);
    s["empty_queries_dropped"] = split.empty_queries_dropped;
    s["queries"] = {{"train", split.train_queries.size()}, {"validation", kept["validation"]}, {"test", kept["test"]}};
    auto split_path = dir / "split.json";
    write_text(split_path, s.dump(1) + "\n");
    outputs.push_back(split_path);
    log::info("index: cutoff year ", cutoff, ", ", split.train_docs.size(), " pre-cutoff documents, ",
              pools.all().size(), " retrieval pools");
    finish(wd, config, Stage::Index, {wd.file(Stage::Corpus, "corpus.jsonl")}, outputs, start);
}

void train_dense(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::Index, options.force);
    auto [docs, authors] = load_corpus_artifacts(wd);
    auto queries = corpus::read_queries(wd.file(Stage::Index, "queries_train.tsv"));

    std::vector<dense::TrainingPair> pairs;
    for (auto const &q : queries) {
        auto src = q.source_doc_id ? docs.find(*q.source_doc_id) : std::nullopt;
        if (!src) {
            continue;
        }
        std::size_t taken = 0;
        for (auto const &ref : docs[*src].references) {
            auto pos = docs.find(ref);
            if (!pos || docs[*pos].year >= q.year) {
                continue;
            }
            if (config.max_pairs_per_query != 0 && taken == config.max_pairs_per_query) {
                break;
            }
            pairs.push_back({q.text, *pos});
            ++taken;
        }
    }
    log::info("train-dense: ", pairs.size(), " training pairs from ", queries.size(), " queries");
    auto encoder = dense::HashedBowEncoder::initialize(config.encoder, config.seed + 2);
    auto logs = dense::train_encoder(encoder, docs, pairs, config.dense_train);

    auto dir = wd.prepare(Stage::TrainDense);
    auto enc_path = dir / "encoder.emb";
    encoder.save(enc_path);
    std::ostringstream log_text;
    log_text << "epoch\tmean_loss\tbatches\n";
    for (auto const &l : logs) {
        log_text << l.epoch << '\t' << l.mean_loss << '\t' << l.batches << '\n';
    }
    auto log_path = dir / "train_log.tsv";
    write_text(log_path, log_text.str());
    finish(wd, config, Stage::TrainDense, {wd.file(Stage::Index, "queries_train.tsv")}, {enc_path, log_path}, start);
}

void embed(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::TrainDense, options.force);
    auto [docs, authors] = load_corpus_artifacts(wd);
    auto encoder = dense::HashedBowEncoder::load(wd.file(Stage::TrainDense, "encoder.emb"));
    auto store = dense::embed_corpus(encoder, docs);
    auto empties = static_cast<std::size_t>(std::ranges::count(store.empty, std::uint8_t{1}));
    if (empties > 0) {
        log::warn("embed: ", empties, " documents have no content tokens and a zero embedding");
    }
    auto path = wd.prepare(Stage::Embed) / "docs.emb";
    dense::save_store(store, path);
    finish(wd, config, Stage::Embed, {wd.file(Stage::TrainDense, "encoder.emb")}, {path}, start);
}

void build_kg(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::Index, options.force);
    auto [docs, authors] = load_corpus_artifacts(wd);
    auto split = load_split(wd, docs);
    std::vector<fs::path> outputs;
    for (auto const &v : kg_variants(config)) {
        auto catalog = kg::build_catalog(docs, authors, v.config);
        auto triples = kg::build_kg(docs, authors, catalog, v.config, split.profile_docs);
        kg::check_kinds(triples, catalog);
        auto dir = wd.prepare(Stage::BuildKg) / v.name;
        fs::create_directories(dir);
        kg::write_triples(triples, catalog, dir / "triples.tsv");
        write_text(dir / "stats.txt", kg::format_stats(kg::kg_stats(triples, catalog)));
        outputs.push_back(dir / "triples.tsv");
        outputs.push_back(dir / "stats.txt");
        log::info("build-kg: ", v.name, ": ", catalog.size(), " entities, ", triples.size(), " triples");
    }
    finish(wd, config, Stage::BuildKg, {wd.file(Stage::Index, "split.json")}, outputs, start);
}

void train_kg(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::BuildKg, options.force);
    require(wd, config, Stage::Embed, options.force);
    auto [docs, authors] = load_corpus_artifacts(wd);
    auto store = dense::load_precomputed_embeddings(wd.file(Stage::Embed, "docs.emb"), docs.size());
    std::vector<fs::path> inputs{wd.file(Stage::Embed, "docs.emb")};
    std::vector<fs::path> outputs;
    for (auto const &job : kg_jobs(config)) {
        auto catalog = kg::build_catalog(docs, authors, job.variant.config);
        auto triple_path = wd.file(Stage::BuildKg, job.variant.name + "/triples.tsv");
        auto triples = kg::read_triples(triple_path, catalog);
        inputs.push_back(triple_path);
        auto emb = kg::initialize_kg(catalog, docs, store, job.model, config.seed + 4);
        auto train_cfg = config.kg_train;
        train_cfg.model = job.model;
        train_cfg.seed = config.seed + 5;
        log::info("train-kg: ", job.key(), " on ", triples.size(), " triples");
        auto logs = kg::train_kg(emb, triples, catalog, train_cfg);
        auto dir = wd.prepare(Stage::TrainKg) / job.key();
        kg::save_kg_embeddings(emb, catalog, dir);
        std::ostringstream log_text;
        log_text << "epoch\tmean_loss\tpairs\tfailed_negatives\n";
        for (auto const &l : logs) {
            log_text << l.epoch << '\t' << l.mean_loss << '\t' << l.pairs << '\t' << l.failed_negatives << '\n';
        }
        write_text(dir / "train_log.tsv", log_text.str());
        for (auto const *f : {"entities.emb", "relations.emb", "manifest.tsv", "train_log.tsv"}) {
            outputs.push_back(dir / f);
        }
        if (job.model == kg::KGModel::TransH) {
            outputs.push_back(dir / "normals.emb");
        }
    }
    finish(wd, config, Stage::TrainKg, inputs, outputs, start);
}

namespace {

struct Scorer {
    corpus::Corpus const &docs;
    dense::HashedBowEncoder const &encoder;
    dense::DocEmbeddingStore const &store;
    user::UserDirectory const &users;
    graph::CitationGraph const &graph;
    std::vector<double> const &pagerank;
    std::vector<user::ParkUserModel> const &kg_models;
    std::map<int, lexical::InvertedIndex> const &pools;
    PipelineConfig const &config;

    QueryCandidates score(corpus::Query const &q, std::size_t channels) const
    {
        QueryCandidates out;
        out.query_id = q.query_id;
        out.user.assign(channels, {});
        auto pool_it = pools.find(q.year);
        if (pool_it == pools.end()) {
            return out;
        }
        auto const &pool = pool_it->second;
        auto tokens = lexical::analyze(q.text);
        auto hits = lexical::retrieve_topk(pool, tokens, config.retrieval_depth, config.bm25);
        auto qvec = encoder.encode(q.text);
        auto const *ctx = users.find(q.user_id);
        std::optional<std::vector<double>> mean_vec;
        std::optional<std::vector<double>> att_vec;
        if (ctx != nullptr) {
            mean_vec = user::mean_user_vector(store, *ctx);
            att_vec = user::attention_user_vector(qvec.vector, store, *ctx);
        }
        std::vector<std::vector<user::UserScore>> kg_scores(kg_models.size());
        for (auto const &h : hits) {
            auto pos = pool.position(h.doc);
            auto const &doc = docs[pos];
            out.doc_ids.push_back(doc.doc_id);
            out.bm25.push_back(h.score);
            out.dense.push_back(dense::dense_score(qvec.vector, store.row(pos)));
            out.user[0].push_back(mean_vec ? user::profile_score(*mean_vec, store, pos) : 0.0);
            out.user[1].push_back(att_vec ? user::profile_score(*att_vec, store, pos) : 0.0);
            out.user[2].push_back(ctx != nullptr ? user::self_citation_score(*ctx, doc.author_ids) : 0.0);
            out.user[3].push_back(static_cast<double>(graph::pop_score(graph, pos)));
            out.user[4].push_back(pagerank[pos]);
            for (std::size_t m = 0; m < kg_models.size(); ++m) {
                kg_scores[m].push_back(kg_models[m].score(q.user_id, doc.author_ids));
            }
        }
        for (std::size_t m = 0; m < kg_models.size(); ++m) {
            out.user[5 + m] = user::apply_floor(kg_scores[m]);
        }
        return out;
    }
};

} // namespace

void score(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::Index, options.force);
    require(wd, config, Stage::Embed, options.force);
    require(wd, config, Stage::TrainKg, options.force);
    auto [docs, authors] = load_corpus_artifacts(wd);
    auto split = load_split(wd, docs);
    auto encoder = dense::HashedBowEncoder::load(wd.file(Stage::TrainDense, "encoder.emb"));
    auto store = dense::load_precomputed_embeddings(wd.file(Stage::Embed, "docs.emb"), docs.size());
    user::UserDirectory users(docs, split.profile_docs);
    graph::CitationGraph citations(docs, split.train_docs);
    auto pr = graph::pagerank(citations, config.pagerank);

    std::vector<fs::path> inputs{wd.file(Stage::Embed, "docs.emb"), wd.file(Stage::TrainDense, "encoder.emb")};
    std::vector<std::string> channels{"mean", "attention", "self_citation", "pop", "pagerank"};
    std::vector<kg::LoadedKG> loaded;
    std::vector<std::vector<kg::Triple>> kg_triples;
    auto jobs = kg_jobs(config);
    loaded.reserve(jobs.size());
    for (auto const &job : jobs) {
        loaded.push_back(kg::load_kg_embeddings(wd.dir(Stage::TrainKg) / job.key()));
        auto triple_path = wd.file(Stage::BuildKg, job.variant.name + "/triples.tsv");
        kg_triples.push_back(kg::read_triples(triple_path, loaded.back().catalog));
        inputs.push_back(wd.dir(Stage::TrainKg) / job.key() / "entities.emb");
        channels.push_back(kg_channel(job));
    }
    std::vector<user::ParkUserModel> models;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        models.emplace_back(loaded[i].embeddings, loaded[i].catalog, kg_triples[i], config.aggregation);
    }

    std::map<int, lexical::InvertedIndex> pools;
    for (auto const &entry : fs::directory_iterator(wd.dir(Stage::Index))) {
        auto name = entry.path().filename().string();
        if (name.starts_with("pool_") && name.ends_with(".pkix")) {
            int year = std::stoi(name.substr(5, name.size() - 10));
            pools.emplace(year, lexical::InvertedIndex::load(entry.path()));
        }
    }

    Scorer scorer{docs, encoder, store, users, citations, pr, models, pools, config};
    auto dir = wd.prepare(Stage::Score);
    std::vector<fs::path> outputs;
    for (auto const *name : {"validation", "test"}) {
        auto qpath = wd.file(Stage::Index, std::string("queries_") + name + ".tsv");
        auto queries = corpus::read_queries(qpath);
        inputs.push_back(qpath);
        CandidateTable table;
        table.channels = channels;
        table.queries.resize(queries.size());
        parallel_for(queries.size(), config.threads, [&](std::size_t lo, std::size_t hi, unsigned) {
            for (std::size_t i = lo; i < hi; ++i) {
                table.queries[i] = scorer.score(queries[i], channels.size());
            }
        });
        std::size_t unknown = 0;
        for (auto const &q : queries) {
            if (!models.empty() && !models.front().known(q.user_id)) {
                ++unknown;
            }
        }
        if (unknown > 0) {
            log::warn("score: ", unknown, " ", name, " queries come from users unknown to the knowledge graph");
        }
        std::erase_if(table.queries, [](QueryCandidates const &q) { return q.doc_ids.empty(); });
        auto path = dir / (std::string("candidates_") + name + ".tsv");
        write_candidates(table, path);
        outputs.push_back(path);
        log::info("score: ", name, ": ", table.queries.size(), " queries with candidates");
    }
    auto pr_path = dir / "pagerank.tsv";
    graph::dump_scores(docs, pr, pr_path);
    outputs.push_back(pr_path);
    finish(wd, config, Stage::Score, inputs, outputs, start);
}

namespace {

struct TunedSystem {
    SystemSpec spec;
    fusion::Lambdas lambdas;
    double validation_map = 0.0;
};

std::vector<TunedSystem> read_lambdas(Workdir const &wd, PipelineConfig const &config)
{
    auto path = wd.file(Stage::Tune, "lambdas.tsv");
    std::ifstream in(path);
    if (!in) {
        throw MissingArtifact("missing " + path.string() + ": run `tune` first");
    }
    std::map<std::string, TunedSystem> by_name;
    std::string line;
    std::getline(in, line);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream f(line);
        std::string name;
        TunedSystem t;
        if (!(f >> name >> t.lambdas.bm25 >> t.lambdas.dense >> t.lambdas.user >> t.validation_map)) {
            throw ParseError("bad lambda line", line_no);
        }
        by_name[name] = t;
    }
    std::vector<TunedSystem> out;
    for (auto const &spec : systems(config)) {
        auto it = by_name.find(spec.name);
        if (it == by_name.end()) {
            throw MissingArtifact("no tuned lambdas for system " + spec.name + ": run `tune` first");
        }
        it->second.spec = spec;
        out.push_back(it->second);
    }
    return out;
}

fusion::Evaluation evaluate_system(TunedSystem const &s, CandidateTable const &table, corpus::QrelSet const &qrels,
                                   PipelineConfig const &config, fusion::Run *run_out = nullptr)
{
    auto lists = table.lists(s.spec.channel);
    auto run = fusion::fused_run(s.lambdas, lists, s.spec.name);
    auto e = fusion::evaluate(run, qrels, config.depths);
    if (run_out != nullptr) {
        *run_out = std::move(run);
    }
    return e;
}

std::string dataset_name(PipelineConfig const &config)
{
    return config.corpus_path.empty() ? std::string("synthetic") : config.corpus_path.stem().string();
}

} // namespace

void tune(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::Score, options.force);
    auto cand_path = wd.file(Stage::Score, "candidates_validation.tsv");
    auto qrel_path = wd.file(Stage::Index, "qrels_validation.txt");
    auto table = read_candidates(cand_path);
    auto qrels = corpus::read_qrels(qrel_path);
    auto dir = wd.prepare(Stage::Tune);
    std::ostringstream out;
    out << "system\tlambda_bm25\tlambda_dense\tlambda_user\tvalidation_map\n";
    std::vector<fs::path> outputs;
    char line[256];
    for (auto const &spec : systems(config)) {
        auto lists = table.lists(spec.channel);
        fusion::Lambdas best = spec.fixed;
        double map = 0.0;
        if (spec.fusion == SystemSpec::Fusion::Fixed) {
            map = fusion::evaluate(fusion::fused_run(spec.fixed, lists, spec.name), qrels).map;
        } else {
            auto r = fusion::tune_lambdas(lists, qrels, config.lambda_step,
                                          spec.fusion == SystemSpec::Fusion::TwoChannel);
            best = r.best;
            map = r.best_map;
            auto grid_path = dir / ("grid_" + file_safe(spec.name) + ".tsv");
            write_text(grid_path, fusion::format_grid(r));
            outputs.push_back(grid_path);
        }
        std::snprintf(line, sizeof line, "%s\t%.17g\t%.17g\t%.17g\t%.17g\n", spec.name.c_str(), best.bm25, best.dense,
                      best.user, map);
        out << line;
        log::info("tune: ", spec.name, " lambdas ", best.bm25, "/", best.dense, "/", best.user, " validation MAP ",
                  map);
    }
    auto path = dir / "lambdas.tsv";
    write_text(path, out.str());
    outputs.insert(outputs.begin(), path);
    finish(wd, config, Stage::Tune, {cand_path, qrel_path}, outputs, start);
}

void eval(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::Score, options.force);
    require(wd, config, Stage::Tune, options.force);
    auto tuned = read_lambdas(wd, config);
    auto cand_path = wd.file(Stage::Score, "candidates_test.tsv");
    auto qrel_path = wd.file(Stage::Index, "qrels_test.txt");
    auto table = read_candidates(cand_path);
    auto qrels = corpus::read_qrels(qrel_path);
    auto dir = wd.prepare(Stage::Eval);
    fs::create_directories(dir / "runs");
    std::vector<fs::path> outputs;
    std::vector<fusion::SystemResult> results;
    std::map<std::string, std::size_t> position;
    for (auto const &t : tuned) {
        fusion::Run run;
        auto e = evaluate_system(t, table, qrels, config, &run);
        auto run_path = dir / "runs" / (file_safe(t.spec.name) + ".run");
        fusion::write_run(run, run_path);
        outputs.push_back(run_path);
        if (!t.spec.ablation) {
            position[t.spec.name] = results.size();
            results.push_back({t.spec.name, std::move(e), t.lambdas});
        }
    }
    std::vector<fusion::Comparison> comparisons;
    auto seed = config.seed + 6;
    auto const &reference = results[position.at("BM25+Dense")];
    comparisons.push_back(fusion::compare(reference, results[position.at("BM25")], config.permutations, seed));
    for (auto const &r : results) {
        if (r.name != "BM25" && r.name != "BM25+Dense") {
            comparisons.push_back(fusion::compare(r, reference, config.permutations, seed));
        }
    }
    auto report = dir / "report.txt";
    auto summary = dir / "summary.txt";
    write_text(report, "Retrieval results (" + dataset_name(config) + ", test queries)\n"
                           + fusion::format_report(results, comparisons));
    write_text(summary, fusion::format_summary(results, comparisons));
    outputs.push_back(report);
    outputs.push_back(summary);
    if (!log::quiet()) {
        std::cout << fusion::format_report(results, comparisons);
    }
    finish(wd, config, Stage::Eval, {cand_path, qrel_path, wd.file(Stage::Tune, "lambdas.tsv")}, outputs, start);
}

void ablate(PipelineConfig const &config, RunOptions const &options)
{
    auto start = Clock::now();
    Workdir wd(config.workdir);
    require(wd, config, Stage::Score, options.force);
    require(wd, config, Stage::Tune, options.force);
    auto tuned = read_lambdas(wd, config);
    auto cand_path = wd.file(Stage::Score, "candidates_test.tsv");
    auto qrel_path = wd.file(Stage::Index, "qrels_test.txt");
    auto table = read_candidates(cand_path);
    auto qrels = corpus::read_qrels(qrel_path);
    static std::map<std::string, std::string> const labels{{"ablation-user", "Only User"},
                                                           {"ablation-venue", "+ Venue"},
                                                           {"ablation-affiliation", "+ Affiliation"},
                                                           {"BM25+Dense", "no KG (BM25+Dense)"}};
    std::vector<fusion::SystemResult> rows;
    std::vector<fusion::SystemResult> keyed;
    for (auto const *name : {"ablation-user", "ablation-venue", "ablation-affiliation", "BM25+Dense"}) {
        auto it = std::ranges::find_if(tuned, [&](TunedSystem const &t) { return t.spec.name == name; });
        auto e = evaluate_system(*it, table, qrels, config);
        rows.push_back({labels.at(name), e, it->lambdas});
        keyed.push_back({name, std::move(e), it->lambdas});
    }
    auto dir = wd.prepare(Stage::Ablate);
    auto path = dir / "ablation.txt";
    auto summary = dir / "summary.txt";
    write_text(path, fusion::format_ablation(rows, dataset_name(config)));
    write_text(summary, fusion::format_summary(keyed, {}));
    if (!log::quiet()) {
        std::cout << fusion::format_ablation(rows, dataset_name(config));
    }
    finish(wd, config, Stage::Ablate, {cand_path, qrel_path, wd.file(Stage::Tune, "lambdas.tsv")}, {path, summary},
           start);
}

void end_to_end(PipelineConfig const &config, RunOptions const &options)
{
    if (config.corpus_path.empty()) {
        synth(config, options);
    } else {
        ingest(config, options);
    }
    index(config, options);
    train_dense(config, options);
    embed(config, options);
    build_kg(config, options);
    train_kg(config, options);
    score(config, options);
    tune(config, options);
    eval(config, options);
    ablate(config, options);
}

} // namespace park::pipeline
