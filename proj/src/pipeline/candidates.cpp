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

#include "park/pipeline/candidates.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "park/common/error.hpp"

namespace park::pipeline {

std::size_t CandidateTable::channel_index(std::string const &name) const
{
    for (std::size_t i = 0; i < channels.size(); ++i) {
        if (channels[i] == name) {
            return i;
        }
    }
    throw DataError("candidate table has no channel '" + name + "'");
}

std::vector<fusion::CandidateList> CandidateTable::lists(std::string const &channel) const
{
    std::optional<std::size_t> c;
    if (!channel.empty()) {
        c = channel_index(channel);
    }
    std::vector<fusion::CandidateList> out;
    out.reserve(queries.size());
    for (auto const &q : queries) {
        fusion::CandidateList l{q.query_id, q.doc_ids, q.bm25, q.dense,
                                c ? q.user[*c] : std::vector<double>(q.doc_ids.size(), 0.0)};
        out.push_back(fusion::normalized(l));
    }
    return out;
}

void write_candidates(CandidateTable const &table, std::filesystem::path const &path)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << "query_id\tdoc_id\tbm25\tdense";
    for (auto const &c : table.channels) {
        out << '\t' << c;
    }
    out << '\n';
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "\t%.17g", v);
        out << buf;
    };
    for (auto const &q : table.queries) {
        expects(q.user.size() == table.channels.size(), "candidate row channel count mismatch");
        for (std::size_t i = 0; i < q.doc_ids.size(); ++i) {
            out << q.query_id << '\t' << q.doc_ids[i];
            put(q.bm25[i]);
            put(q.dense[i]);
            for (auto const &col : q.user) {
                put(col[i]);
            }
            out << '\n';
        }
    }
}

CandidateTable read_candidates(std::filesystem::path const &path)
{
    std::ifstream in(path);
    if (!in) {
        throw MissingArtifact("missing candidate file " + path.string() + ": run `score` first");
    }
    CandidateTable table;
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw ParseError("empty candidate file", 1);
    }
    {
        std::istringstream header(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(header, field, '\t')) {
            fields.push_back(field);
        }
        if (fields.size() < 4 || fields[0] != "query_id" || fields[1] != "doc_id" || fields[2] != "bm25"
            || fields[3] != "dense") {
            throw ParseError("bad candidate header", 1);
        }
        table.channels.assign(fields.begin() + 4, fields.end());
    }
    auto columns = table.channels.size() + 4;
    std::vector<std::string_view> parts;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        parts.clear();
        std::string_view rest(line);
        while (true) {
            auto tab = rest.find('\t');
            parts.push_back(rest.substr(0, tab));
            if (tab == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(tab + 1);
        }
        if (parts.size() != columns) {
            throw ParseError("expected " + std::to_string(columns) + " columns", line_no);
        }
        auto number = [&](std::string_view s) {
            double v = 0.0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || p != s.data() + s.size()) {
                throw ParseError("bad score '" + std::string(s) + "'", line_no);
            }
            return v;
        };
        if (table.queries.empty() || table.queries.back().query_id != parts[0]) {
            table.queries.push_back({std::string(parts[0]), {}, {}, {}, std::vector<std::vector<double>>(columns - 4)});
        }
        auto &q = table.queries.back();
        q.doc_ids.emplace_back(parts[1]);
        q.bm25.push_back(number(parts[2]));
        q.dense.push_back(number(parts[3]));
        for (std::size_t c = 4; c < columns; ++c) {
            q.user[c - 4].push_back(number(parts[c]));
        }
    }
    return table;
}

} // namespace park::pipeline
