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

#include "park/fusion/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "park/common/error.hpp"
#include "park/fusion/significance.hpp"

namespace park::fusion {

Comparison compare(SystemResult const &system, SystemResult const &baseline, std::size_t permutations,
                   std::uint64_t seed)
{
    auto const &a = system.eval.per_query;
    auto const &b = baseline.eval.per_query;
    expects(a.size() == b.size(), "compared systems were evaluated on different query sets");
    for (std::size_t i = 0; i < a.size(); ++i) {
        expects(a[i].query_id == b[i].query_id, "compared systems were evaluated on different query sets");
    }
    Comparison c{system.name, baseline.name, 1.0, 1.0, 1.0};
    c.p_map = paired_randomization_test(column(system.eval, &QueryMetrics::map),
                                        column(baseline.eval, &QueryMetrics::map), permutations, seed);
    c.p_mrr = paired_randomization_test(column(system.eval, &QueryMetrics::mrr),
                                        column(baseline.eval, &QueryMetrics::mrr), permutations, seed);
    c.p_ndcg = paired_randomization_test(column(system.eval, &QueryMetrics::ndcg),
                                         column(baseline.eval, &QueryMetrics::ndcg), permutations, seed);
    return c;
}

namespace {

std::string fmt(char const *pattern, double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

std::size_t name_width(std::span<SystemResult const> systems, std::size_t floor)
{
    std::size_t w = floor;
    for (auto const &s : systems) {
        w = std::max(w, s.name.size());
    }
    return w;
}

std::string pad(std::string s, std::size_t width)
{
    s.resize(std::max(width, s.size()), ' ');
    return s;
}

std::string lambda_text(std::optional<Lambdas> const &l)
{
    if (!l) {
        return "-";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f/%.2f/%.2f", l->bm25, l->dense, l->user);
    return buf;
}

} // namespace

std::string format_report(std::span<SystemResult const> systems, std::span<Comparison const> comparisons)
{
    std::ostringstream out;
    auto w = name_width(systems, 6);
    out << pad("system", w) << "  MAP@100  MRR@10   NDCG@10  queries  lambdas(bm25/dense/user)\n";
    for (auto const &s : systems) {
        out << pad(s.name, w) << "  " << fmt("%.4f", s.eval.map) << "   " << fmt("%.4f", s.eval.mrr) << "   "
            << fmt("%.4f", s.eval.ndcg) << "   " << pad(std::to_string(s.eval.per_query.size()), 7) << "  "
            << lambda_text(s.lambdas) << '\n';
    }
    if (!comparisons.empty()) {
        out << "\npaired randomization test (two-sided)\n";
        for (auto const &c : comparisons) {
            out << c.system << " vs " << c.baseline << ": p(MAP)=" << fmt("%.4f", c.p_map)
                << " p(MRR)=" << fmt("%.4f", c.p_mrr) << " p(NDCG)=" << fmt("%.4f", c.p_ndcg) << '\n';
        }
    }
    return out.str();
}

std::string format_summary(std::span<SystemResult const> systems, std::span<Comparison const> comparisons)
{
    std::ostringstream out;
    for (auto const &s : systems) {
        out << s.name << ".map@100=" << fmt("%.10g", s.eval.map) << '\n'
            << s.name << ".mrr@10=" << fmt("%.10g", s.eval.mrr) << '\n'
            << s.name << ".ndcg@10=" << fmt("%.10g", s.eval.ndcg) << '\n'
            << s.name << ".queries=" << s.eval.per_query.size() << '\n';
        if (s.lambdas) {
            out << s.name << ".lambdas=" << lambda_text(s.lambdas) << '\n';
        }
    }
    for (auto const &c : comparisons) {
        auto key = c.system + ".vs." + c.baseline;
        out << key << ".p_map=" << fmt("%.6g", c.p_map) << '\n'
            << key << ".p_mrr=" << fmt("%.6g", c.p_mrr) << '\n'
            << key << ".p_ndcg=" << fmt("%.6g", c.p_ndcg) << '\n';
    }
    return out.str();
}

std::string format_ablation(std::span<SystemResult const> rows, std::string const &dataset)
{
    std::ostringstream out;
    auto w = name_width(rows, 13);
    out << "Ablation study results (" << dataset << ")\n";
    out << pad("configuration", w) << "  MAP@100  MRR@10   NDCG@10\n";
    for (auto const &r : rows) {
        out << pad(r.name, w) << "  " << fmt("%.4f", r.eval.map) << "   " << fmt("%.4f", r.eval.mrr) << "   "
            << fmt("%.4f", r.eval.ndcg) << '\n';
    }
    return out.str();
}

} // namespace park::fusion
