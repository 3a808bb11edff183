/*
   Copyright 2026 The spetses Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// spetses command-line front end.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spetses/spetses.hpp"

namespace {

using namespace spetses;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
    std::string group;
    std::string p_text;
    std::string claim = "all";
    bool json = false;
    bool with_reprs = false;
    int model_bound = kDefaultModelBound;
    long long reflection_bound = kDefaultReflectionBound;
};

/// "7" or "1..21"; a range keeps only values coprime to h, a single value must be coprime.
std::vector<long long> parse_p(const GroupSpec& g, const std::string& text) {
    if (text.empty()) return default_p_values(g);
    const int h = invariants(g).coxeter_number;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InvalidArgument("invalid p '" + text + "': expected an integer or a..b");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long long p = number(text);
        require_coprime(g, p);
        return {p};
    }
    const long long a = number(text.substr(0, dots));
    const long long b = number(text.substr(dots + 2));
    if (a < 1 || b < a) throw InvalidArgument("invalid p range '" + text + "'");
    std::vector<long long> ps;
    for (long long p = a; p <= b; ++p)
        if (std::gcd(p, static_cast<long long>(h)) == 1) ps.push_back(p);
    if (ps.empty()) throw InvalidArgument("p range '" + text + "' has no value coprime to h = " + std::to_string(h));
    return ps;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        std::cout << line << '\n';
    }
}

int cmd_chars(const GroupSpec& g, const CliConfig& cfg) {
    const auto table = char_table(g);
    bool ok = true;
    std::vector<Cyclotomic> reprs_c;
    if (cfg.with_reprs)
        for (const auto& d : *table) {
            reprs_c.push_back(Cyclotomic(invariants(g).num_reflections) -
                              reflection_character_sum(d.label, cfg.model_bound, cfg.reflection_bound));
            if (reprs_c.back() != Cyclotomic(d.a + d.A)) ok = false;
        }
    if (cfg.json) {
        Json out = Json::array();
        for (std::size_t i = 0; i < table->size(); ++i) {
            Json rec = to_json((*table)[i]);
            if (cfg.with_reprs) rec["a+A_reprs"] = to_json(reprs_c[i]);
            out.push_back(rec);
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::vector<std::vector<std::string>> rows{{"label", "dim", "a", "A", "b", "B", "h", "c", "Feg", "Deg", "Schur"}};
        if (cfg.with_reprs) rows[0].push_back("|R|-c(reprs)");
        for (std::size_t i = 0; i < table->size(); ++i) {
            const auto& d = (*table)[i];
            rows.push_back({d.label.to_string(), d.dim.get_str(), std::to_string(d.a), std::to_string(d.A),
                            std::to_string(d.b), std::to_string(d.B), std::to_string(d.h_char),
                            std::to_string(d.content_c), d.feg.to_string(), d.deg.to_string(), d.schur.to_string()});
            if (cfg.with_reprs) rows.back().push_back(reprs_c[i].to_string());
        }
        print_table(rows);
    }
    if (!ok) std::cerr << "verification failed: a + A differs from |R| - c(chi) computed from matrices\n";
    return ok ? kExitOk : kExitFail;
}

int cmd_symbols(const GroupSpec& g, const CliConfig& cfg) {
    Json out = Json::array();
    std::vector<std::vector<std::string>> rows{{"label", "symbol"}};
    for (const auto& lab : all_labels(g)) {
        const std::string s = symbol_of(lab).to_string();
        out.push_back({{"label", lab.to_string()}, {"symbol", s}});
        rows.push_back({lab.to_string(), s});
    }
    if (cfg.json)
        std::cout << out.dump(2) << '\n';
    else
        print_table(rows);
    return kExitOk;
}

std::string join_labels(const std::vector<CharLabel>& labs) {
    std::string s;
    for (const auto& l : labs) s += (s.empty() ? "" : " ") + l.to_string();
    return s;
}

int cmd_families(const GroupSpec& g, const CliConfig& cfg) {
    Json out = Json::array();
    std::size_t k = 0;
    for (const auto& f : families(g)) {
        Json members = Json::array();
        for (const auto& l : f.members) members.push_back(l.to_string());
        out.push_back({{"entries", f.entries}, {"members", members}});
        if (!cfg.json) std::cout << "family " << k++ << ": " << join_labels(f.members) << '\n';
    }
    if (cfg.json) std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_fourier(const GroupSpec& g, const CliConfig& cfg) {
    const auto mats = pairing_matrices(g);
    const auto t1 = verify_T1(g);
    const auto props = check_pairing_properties(g);
    const bool t1_ok = std::all_of(t1.begin(), t1.end(), [](const auto& r) { return r.equal; });
    const bool ok = t1_ok && props.symmetric && props.support_ok && props.rep_independent && props.shift_independent;
    if (cfg.json) {
        Json fams = Json::array();
        for (const auto& pm : mats) {
            Json members = Json::array();
            for (const auto& l : pm.family.members) members.push_back(l.to_string());
            Json matrix = Json::array();
            for (const auto& row : pm.entries) {
                Json r = Json::array();
                for (const auto& v : row) r.push_back(to_json(v));
                matrix.push_back(r);
            }
            fams.push_back({{"members", members}, {"matrix", matrix}});
        }
        Json reports = Json::array();
        for (const auto& r : t1) reports.push_back(to_json(r));
        std::cout << Json{{"group", g.name()}, {"families", fams}, {"T1", reports}, {"T2", props.symmetric},
                          {"T3", props.support_ok}, {"failures", props.failures}}
                         .dump(2)
                  << '\n';
    } else {
        for (const auto& pm : mats) {
            if (pm.family.members.size() == 1) continue;
            std::cout << "family " << join_labels(pm.family.members) << '\n';
            std::vector<std::vector<std::string>> rows;
            for (const auto& row : pm.entries) {
                std::vector<std::string> r;
                for (const auto& v : row) r.push_back(v.to_string());
                rows.push_back(r);
            }
            print_table(rows);
        }
        std::cout << "T1 " << (t1_ok ? "pass" : "FAIL") << " (" << t1.size() << " labels)\n"
                  << "T2 " << (props.symmetric ? "pass" : "FAIL") << '\n'
                  << "T3 " << (props.support_ok ? "pass" : "FAIL") << '\n';
        for (const auto& f : props.failures) std::cout << "  " << f << '\n';
    }
    if (!ok) std::cerr << "verification failed: Fourier pairing properties\n";
    return ok ? kExitOk : kExitFail;
}

int cmd_catalan(const GroupSpec& g, const CliConfig& cfg) {
    const auto ps = parse_p(g, cfg.p_text);
    if (cfg.json) {
        Json out = Json::array();
        for (long long p : ps)
            out.push_back({{"group", g.name()}, {"p", p}, {"catalan", catalan(g, p).get_str()}, {"q_catalan", to_json(q_catalan(g, p))}});
        std::cout << out.dump(2) << '\n';
    } else if (ps.size() == 1) {
        std::cout << catalan(g, ps[0]).get_str() << '\n';
    } else {
        for (long long p : ps) std::cout << "p=" << p << "  " << catalan(g, p).get_str() << '\n';
    }
    return kExitOk;
}

int cmd_trace(const GroupSpec& g, const CliConfig& cfg) {
    const auto ps = parse_p(g, cfg.p_text);
    Json out = Json::array();
    for (long long p : ps) {
        const LaurentPoly t = trace_sum(g, p);
        if (cfg.json)
            out.push_back({{"group", g.name()}, {"p", p}, {"trace", to_json(t)}});
        else
            std::cout << "p=" << p << "  " << t.to_string() << '\n';
    }
    if (cfg.json) std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const GroupSpec& g, const CliConfig& cfg) {
    const auto ps = parse_p(g, cfg.p_text);
    const std::string& c = cfg.claim;
    if (c == "swap" && g.kind() != GroupKind::Gm1n) throw InvalidArgument("verify swap needs a group G(m,1,n)");
    std::vector<VerificationReport> reports;
    for (long long p : ps) {
        if (c == "main" || c == "all") reports.push_back(verify_main(g, p));
        if (c == "vanishing" || c == "all") reports.push_back(verify_vanishing(g, p));
        if (c == "parking" || c == "all") reports.push_back(verify_parking(g, p));
        if (c == "swap" || (c == "all" && g.kind() == GroupKind::Gm1n)) reports.push_back(verify_transform_swap(g, p));
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.equal; });
    if (cfg.json) {
        Json out = Json::array();
        for (const auto& r : reports) out.push_back(to_json(r));
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(1) << r.ms;
            std::cout << (r.equal ? "PASS " : "FAIL ") << r.claim << ' ' << r.group << " p=" << r.p << " (" << ms.str() << " ms)";
            if (!r.equal && r.witness) std::cout << "  " << *r.witness;
            std::cout << '\n';
        }
    }
    if (!ok) std::cerr << "verification failed: " << std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.equal; })
                       << " of " << reports.size() << " checks differ\n";
    return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"Exact invariants of the imprimitive spetses G(m,1,n) and G(m,m,n)"};
    app.require_subcommand(1, 1);

    auto add_common = [&](CLI::App* sub, bool with_p) {
        sub->add_option("--group,-g", cfg.group, "G(m,1,n), G(m,m,n) or A<k>")->required();
        if (with_p) sub->add_option("--p", cfg.p_text, "integer or range a..b (default: coprime p in [1,3h])");
        sub->add_flag("--json", cfg.json, "emit JSON");
        sub->add_option("--model-bound", cfg.model_bound, "largest matrix model dimension")->check(CLI::PositiveNumber);
        sub->add_option("--reflection-bound", cfg.reflection_bound, "largest group order for element scans")->check(CLI::PositiveNumber);
    };
    auto* chars = app.add_subcommand("chars", "character table with fake and generic degrees");
    add_common(chars, false);
    chars->add_flag("--with-reprs", cfg.with_reprs, "recompute |R| - c(chi) from explicit matrices");
    add_common(app.add_subcommand("symbols", "symbol of every character"), false);
    add_common(app.add_subcommand("families", "families of characters"), false);
    add_common(app.add_subcommand("fourier", "Fourier pairing matrices and T1/T2/T3"), false);
    add_common(app.add_subcommand("catalan", "rational Catalan numbers"), true);
    add_common(app.add_subcommand("trace", "trace sums as polynomials in q"), true);
    auto* verify = app.add_subcommand("verify", "exact verification reports");
    verify->add_option("claim", cfg.claim, "main|vanishing|parking|swap|all")
        ->check(CLI::IsMember({"main", "vanishing", "parking", "swap", "all"}));
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const GroupSpec g = GroupSpec::parse(cfg.group);
        const std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "chars") return cmd_chars(g, cfg);
        if (cmd == "symbols") return cmd_symbols(g, cfg);
        if (cmd == "families") return cmd_families(g, cfg);
        if (cmd == "fourier") return cmd_fourier(g, cfg);
        if (cmd == "catalan") return cmd_catalan(g, cfg);
        if (cmd == "trace") return cmd_trace(g, cfg);
        return cmd_verify(g, cfg);
    } catch (const InvalidGroup& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise it with --model-bound or --reflection-bound)\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kExitFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
}
