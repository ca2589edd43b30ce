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

#include "park/fusion/run.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "park/common/error.hpp"

namespace park::fusion {

void check_run(Run const &run)
{
    for (auto const &[qid, entries] : run.queries) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            expects(entries[i].rank == i + 1, "run ranks must be contiguous from 1");
            expects(i == 0 || entries[i].score <= entries[i - 1].score, "run scores must not increase with rank");
        }
    }
}

void write_run(Run const &run, std::filesystem::path const &path)
{
    check_run(run);
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    char score[32];
    for (auto const &[qid, entries] : run.queries) {
        for (auto const &e : entries) {
            std::snprintf(score, sizeof score, "%.6g", e.score);
            out << qid << " Q0 " << e.doc_id << ' ' << e.rank << ' ' << score << ' ' << run.tag << '\n';
        }
    }
}

Run read_run(std::filesystem::path const &path)
{
    std::ifstream in(path);
    if (!in) {
        throw MissingArtifact("missing run file " + path.string());
    }
    Run run;
    run.tag.clear();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::string qid;
        std::string q0;
        std::string doc;
        std::string rank_text;
        std::string score_text;
        std::string tag;
        std::string extra;
        if (!(fields >> qid >> q0 >> doc >> rank_text >> score_text >> tag) || (fields >> extra)) {
            throw ParseError("expected 6 whitespace-separated columns", line_no);
        }
        RunEntry e{doc, 0, 0.0};
        auto [rp, rec] = std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), e.rank);
        if (rec != std::errc{} || rp != rank_text.data() + rank_text.size() || e.rank == 0) {
            throw ParseError("bad rank '" + rank_text + "'", line_no);
        }
        auto [sp, sec] = std::from_chars(score_text.data(), score_text.data() + score_text.size(), e.score);
        if (sec != std::errc{} || sp != score_text.data() + score_text.size()) {
            throw ParseError("bad score '" + score_text + "'", line_no);
        }
        if (run.tag.empty()) {
            run.tag = tag;
        }
        run.queries[qid].push_back(std::move(e));
    }
    for (auto &[qid, entries] : run.queries) {
        std::ranges::stable_sort(entries, {}, &RunEntry::rank);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].rank != i + 1) {
                throw DataError(path.string() + ": ranks of query " + qid + " are not contiguous from 1");
            }
        }
    }
    return run;
}

std::vector<std::string> ranking_of(std::vector<RunEntry> const &entries)
{
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (auto const &e : entries) {
        out.push_back(e.doc_id);
    }
    return out;
}

} // namespace park::fusion
