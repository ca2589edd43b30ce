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

#include "park/corpus/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "park/common/error.hpp"
#include "park/common/log.hpp"

namespace park::corpus {

namespace {

using nlohmann::ordered_json;

std::ifstream open_in(std::filesystem::path const &path)
{
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    return in;
}

std::ofstream open_out(std::filesystem::path const &path)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    return out;
}

bool blank(std::string const &line)
{
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<std::string> string_list(ordered_json const &j, char const *field)
{
    std::vector<std::string> out;
    if (!j.contains(field) || j[field].is_null()) {
        return out;
    }
    for (auto const &item : j[field]) {
        out.push_back(item.get<std::string>());
    }
    return out;
}

Document parse_document(ordered_json const &j)
{
    Document d;
    d.doc_id = j.at("doc_id").get<std::string>();
    d.title = j.value("title", std::string{});
    d.abstract = j.value("abstract", std::string{});
    d.author_ids = string_list(j, "author_ids");
    if (j.contains("venue_id") && !j["venue_id"].is_null()) {
        d.venue_id = j["venue_id"].get<std::string>();
    }
    d.year = j.at("year").get<int>();
    d.references = string_list(j, "references");
    return d;
}

} // namespace

Corpus load_corpus(std::filesystem::path const &path, LoadReport *report)
{
    auto in = open_in(path);
    std::vector<Document> documents;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) {
            continue;
        }
        try {
            documents.push_back(parse_document(ordered_json::parse(line)));
        } catch (nlohmann::json::exception const &e) {
            throw ParseError(path.string() + ": malformed document record: " + e.what(), line_no);
        }
    }

    std::unordered_set<std::string> ids;
    for (auto const &d : documents) {
        if (!ids.insert(d.doc_id).second) {
            throw DataError(path.string() + ": duplicate doc_id '" + d.doc_id + "'");
        }
    }

    LoadReport local;
    for (auto &d : documents) {
        std::vector<std::string> kept;
        std::unordered_set<std::string> seen;
        for (auto &ref : d.references) {
            if (ref == d.doc_id) {
                ++local.self_references_dropped;
            } else if (ids.count(ref) == 0) {
                ++local.dangling_references_dropped;
            } else if (seen.insert(ref).second) {
                kept.push_back(std::move(ref));
            }
        }
        d.references = std::move(kept);
    }
    local.documents = documents.size();
    if (local.self_references_dropped + local.dangling_references_dropped > 0) {
        log::warn(path.string(), ": dropped ", local.self_references_dropped, " self-references and ",
                  local.dangling_references_dropped, " dangling references");
    }
    if (report != nullptr) {
        *report = local;
    }
    return Corpus(std::move(documents));
}

void save_corpus(Corpus const &corpus, std::filesystem::path const &path)
{
    auto out = open_out(path);
    for (auto const &d : corpus.documents()) {
        ordered_json j;
        j["doc_id"] = d.doc_id;
        j["title"] = d.title;
        j["abstract"] = d.abstract;
        j["author_ids"] = d.author_ids;
        j["venue_id"] = d.venue_id ? ordered_json(*d.venue_id) : ordered_json(nullptr);
        j["year"] = d.year;
        j["references"] = d.references;
        out << j.dump() << '\n';
    }
}

std::vector<Author> load_authors(std::filesystem::path const &path)
{
    auto in = open_in(path);
    std::vector<Author> authors;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) {
            continue;
        }
        Author a;
        try {
            auto j = ordered_json::parse(line);
            a.author_id = j.at("author_id").get<std::string>();
            if (j.contains("affiliation_id")) {
                auto const &aff = j["affiliation_id"];
                if (aff.is_string()) {
                    a.affiliation_id = aff.get<std::string>();
                } else if (aff.is_array() && !aff.empty()) {
                    a.affiliation_id = aff.front().get<std::string>();
                }
            }
        } catch (nlohmann::json::exception const &e) {
            throw ParseError(path.string() + ": malformed author record: " + e.what(), line_no);
        }
        if (!ids.insert(a.author_id).second) {
            throw DataError(path.string() + ": duplicate author_id '" + a.author_id + "'");
        }
        authors.push_back(std::move(a));
    }
    return authors;
}

void save_authors(std::vector<Author> const &authors, std::filesystem::path const &path)
{
    auto out = open_out(path);
    for (auto const &a : authors) {
        ordered_json j;
        j["author_id"] = a.author_id;
        j["affiliation_id"] = a.affiliation_id ? ordered_json(*a.affiliation_id) : ordered_json(nullptr);
        out << j.dump() << '\n';
    }
}

void write_qrels(QrelSet const &qrels, std::filesystem::path const &path)
{
    auto out = open_out(path);
    for (auto const &[qid, docs] : qrels) {
        for (auto const &doc : docs) {
            out << qid << " 0 " << doc << " 1\n";
        }
    }
}

QrelSet read_qrels(std::filesystem::path const &path)
{
    auto in = open_in(path);
    QrelSet qrels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) {
            continue;
        }
        std::istringstream fields(line);
        std::string qid;
        std::string iteration;
        std::string doc;
        int relevance = 0;
        if (!(fields >> qid >> iteration >> doc >> relevance) || (relevance != 0 && relevance != 1)) {
            throw ParseError(path.string() + ": malformed qrels line", line_no);
        }
        if (relevance == 1) {
            qrels[qid].insert(doc);
        }
    }
    return qrels;
}

void write_queries(std::vector<Query> const &queries, std::filesystem::path const &path)
{
    auto out = open_out(path);
    for (auto const &q : queries) {
        out << q.query_id << '\t' << q.user_id << '\t' << q.year << '\t' << q.source_doc_id.value_or("-")
            << '\t' << q.text << '\n';
    }
}

std::vector<Query> read_queries(std::filesystem::path const &path)
{
    auto in = open_in(path);
    std::vector<Query> queries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (int i = 0; i < 4; ++i) {
            auto tab = line.find('\t', start);
            if (tab == std::string::npos) {
                throw ParseError(path.string() + ": expected 5 tab-separated fields", line_no);
            }
            fields.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        fields.push_back(line.substr(start));
        Query q;
        q.query_id = fields[0];
        q.user_id = fields[1];
        try {
            q.year = std::stoi(fields[2]);
        } catch (std::exception const &) {
            throw ParseError(path.string() + ": bad year field", line_no);
        }
        if (fields[3] != "-") {
            q.source_doc_id = fields[3];
        }
        q.text = fields[4];
        queries.push_back(std::move(q));
    }
    return queries;
}

} // namespace park::corpus
