// Command-line front end: load a graph (named family or file), compute
// generators / splittings / verification reports, print text or JSON.
//
// Exit codes: 0 ok, 2 parse error, 3 budget exceeded ("unknown"),
// 4 a supplied claim was refuted (bad pair, disagreement).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/fibers.hpp"
#include "toric/graph.hpp"
#include "toric/oracle.hpp"
#include "toric/splitting.hpp"
#include "toric/walks.hpp"

using json = nlohmann::ordered_json;
using namespace toric;

namespace {

struct GraphSource {
    std::string family_spec;
    std::string input_file;
};

Graph load_graph(const GraphSource& src) {
    if (!src.family_spec.empty()) {
        auto colon = src.family_spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--family expects NAME:P1[,P2]");
        std::string name = src.family_spec.substr(0, colon);
        std::vector<int> params;
        std::stringstream ps(src.family_spec.substr(colon + 1));
        std::string tok;
        while (std::getline(ps, tok, ',')) params.push_back(std::stoi(tok));
        return family(name, params);
    }
    if (!src.input_file.empty()) {
        std::ifstream in(src.input_file);
        if (!in) throw std::invalid_argument("cannot open " + src.input_file);
        return read_graph_text(in);
    }
    throw std::invalid_argument("no graph given: use --family or --input");
}

std::vector<int> parse_edge_list(const Graph& g, const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int e = g.edge_by_label(tok);
        if (e < 0) {
            try {
                e = std::stoi(tok) - 1;  // 1-based edge ids
            } catch (...) {
                e = -1;
            }
        }
        if (e < 0 || static_cast<std::size_t>(e) >= g.universe_size())
            throw std::invalid_argument("unknown edge: " + tok);
        out.push_back(e);
    }
    return out;
}

json graph_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = json::array();
    j["labels"] = json::array();
    for (int i : g.active_edges()) {
        j["edges"].push_back({g.edge(i).u, g.edge(i).v});
        j["labels"].push_back(g.edge(i).label);
    }
    return j;
}

json system_json(const Graph& g, const MinimalSystem& s) {
    json j;
    j["binomials"] = json::array();
    for (const Binomial& b : s.binomials) j["binomials"].push_back(b.to_string(g));
    j["fibers"] = json::array();
    for (const FiberSelection& fs : s.per_fiber) {
        json f;
        f["degree"] = fs.degree;
        f["component_sizes"] = fs.component_sizes;
        f["chosen"] = json::array();
        for (const Binomial& b : fs.chosen) f["chosen"].push_back(b.to_string(g));
        j["fibers"].push_back(f);
    }
    return j;
}

std::vector<std::string> edge_labels(const Graph& g, EdgeMask m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < g.universe_size(); ++i)
        if ((m >> i) & 1u) out.push_back(g.edge(static_cast<int>(i)).label);
    return out;
}

json report_json(const Graph& g, const SplittingReport& rep) {
    json s;
    s["g1_missing"] = edge_labels(g, g.alive_mask() & ~rep.g1.alive_mask());
    s["g2_missing"] = edge_labels(g, g.alive_mask() & ~rep.g2.alive_mask());
    s["is_splitting"] = rep.is_splitting;
    if (rep.edge_witness) {
        json w;
        w["edge"] = g.edge(rep.edge_witness->edge).label;
        w["S"] = json::array();
        for (const Binomial& b : rep.edge_witness->system.binomials)
            w["S"].push_back(b.to_string(g));
        s["edge_splitting"] = w;
    } else {
        s["edge_splitting"] = nullptr;
    }
    s["minimal"] = rep.is_minimal;
    s["reduced"] = rep.is_reduced;
    s["mu"] = {rep.mu_g1, rep.mu_g2, rep.mu_g};
    json j;
    j["splitting"] = s;
    return j;
}

int cmd_generators(const Graph& g, bool as_json, const Budget& budget) {
    IdealEngine eng(g, budget);
    const IdealProfile& prof = eng.profile();
    auto indisp = eng.indispensable_binomials(g.alive_mask());
    if (as_json) {
        json j;
        j["graph"] = graph_json(g);
        j["mu"] = prof.mu;
        j["minimal_system"] = system_json(g, prof.canonical);
        j["indispensable"] = json::array();
        for (const Binomial& b : indisp) j["indispensable"].push_back(b.to_string(g));
        j["minimal_system_count"] = prof.system_count.to_string();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: " << (g.display_name.empty() ? "input" : g.display_name) << " ("
              << g.vertex_count() << " vertices, " << g.edge_count() << " edges)\n";
    std::cout << "mu = " << prof.mu << "\n";
    std::cout << "canonical minimal system:\n";
    for (const Binomial& b : prof.canonical.binomials) std::cout << "  " << b.to_string(g) << "\n";
    std::cout << "indispensable binomials: " << indisp.size() << "\n";
    for (const Binomial& b : indisp) std::cout << "  " << b.to_string(g) << "\n";
    std::cout << "minimal systems: " << prof.system_count.to_string() << "\n";
    return 0;
}

int cmd_split(const Graph& g, bool as_json, bool enumerate, const std::string& g1_remove,
              const std::string& g2_remove, const Budget& budget) {
    if (!g1_remove.empty() || !g2_remove.empty()) {
        Graph g1 = delete_edges(g, parse_edge_list(g, g1_remove));
        Graph g2 = delete_edges(g, parse_edge_list(g, g2_remove));
        SplittingReport rep = check_splitting(g, g1, g2, budget);
        if (as_json)
            std::cout << report_json(g, rep).dump(2) << "\n";
        else {
            std::cout << (rep.is_splitting ? "splitting" : "not a splitting") << "\n";
            if (rep.is_splitting)
                std::cout << "  minimal: " << (rep.is_minimal ? "yes" : "no")
                          << ", reduced: " << (rep.is_reduced ? "yes" : "no")
                          << ", edge splitting: " << (rep.is_edge_splitting ? "yes" : "no")
                          << "\n  mu: " << rep.mu_g1 << " + " << rep.mu_g2 << " vs " << rep.mu_g
                          << "\n";
        }
        return rep.is_splitting ? 0 : 4;
    }
    if (enumerate) {
        std::vector<SplittingReport> all = enumerate_splittings(g, budget);
        std::size_t nmin = 0, nred = 0;
        for (const auto& r : all) {
            nmin += r.is_minimal;
            nred += r.is_reduced;
        }
        if (as_json) {
            json j;
            j["count"] = all.size();
            j["minimal"] = nmin;
            j["reduced"] = nred;
            j["splittings"] = json::array();
            for (const auto& r : all) j["splittings"].push_back(report_json(g, r));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << all.size() << " splittings, " << nmin << " minimal, " << nred
                      << " reduced\n";
            for (const auto& r : all) {
                std::cout << "  { removed:";
                for (const auto& l : edge_labels(g, g.alive_mask() & ~r.g1.alive_mask()))
                    std::cout << " " << l;
                std::cout << " | removed:";
                for (const auto& l : edge_labels(g, g.alive_mask() & ~r.g2.alive_mask()))
                    std::cout << " " << l;
                std::cout << " } minimal=" << r.is_minimal << " reduced=" << r.is_reduced << "\n";
            }
        }
        return 0;
    }
    auto witness = is_edge_splittable(g, budget);
    if (as_json) {
        json j;
        j["splittable"] = witness.has_value();
        if (witness) {
            j["edge"] = g.edge(witness->edge).label;
            j["walk_subgraph"] = edge_labels(g, witness->walk_subgraph.alive_mask());
            j["S"] = json::array();
            for (const Binomial& b : witness->system.binomials)
                j["S"].push_back(b.to_string(g));
        }
        std::cout << j.dump(2) << "\n";
    } else if (witness) {
        std::cout << "subgraph splittable: yes\n";
        std::cout << "  edge: " << g.edge(witness->edge).label << "\n  walk subgraph:";
        for (const auto& l : edge_labels(g, witness->walk_subgraph.alive_mask()))
            std::cout << " " << l;
        std::cout << "\n";
    } else {
        std::cout << "not subgraph splittable\n";
    }
    return 0;
}

int verify_family(const Graph& g, const Budget& budget) {
    int bad = 0;
    OracleReport rep = oracle_check(g, budget);
    auto line = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "  ok   " : "  FAIL ") << name << "\n";
        if (!ok) ++bad;
    };
    std::cout << "verify " << (g.display_name.empty() ? "input" : g.display_name) << ":\n";
    line("minimal binomials (walks vs fibers)", rep.agree_minimal);
    line("indispensable binomials (walks vs fibers)", rep.agree_indispensable);
    line("mu (engine vs scan)", rep.agree_mu);
    line("splittability (edge search vs exhaustive)", rep.agree_splittable);
    return bad;
}

int cmd_verify(const std::string& corpus, const GraphSource& src, const Budget& budget) {
    if (!corpus.empty()) {
        if (corpus != "small") throw std::invalid_argument("unknown corpus: " + corpus);
        int bad = 0;
        // all connected graphs on up to 5 vertices, one per isomorphism class
        for (int n = 2; n <= 5; ++n) {
            std::vector<std::pair<int, int>> all;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
            const std::size_t m = all.size();
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                // connected?
                std::vector<std::pair<int, int>> edges;
                for (std::size_t i = 0; i < m; ++i)
                    if ((mask >> i) & 1u) edges.push_back(all[i]);
                if (edges.size() < static_cast<std::size_t>(n) - 1) continue;
                Graph g(n, edges);
                // connectivity: single DFS
                std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
                std::vector<int> stack{1};
                seen[1] = 1;
                int cnt = 1;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (auto [a, b] : edges) {
                        int w = a == v ? b : b == v ? a : 0;
                        if (w && !seen[static_cast<std::size_t>(w)]) {
                            seen[static_cast<std::size_t>(w)] = 1;
                            ++cnt;
                            stack.push_back(w);
                        }
                    }
                }
                if (cnt != n) continue;
                // canonical representative: least mask under vertex relabelling
                for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
                bool least = true;
                do {
                    std::uint32_t pm = 0;
                    for (std::size_t i = 0; i < m; ++i) {
                        if (!((mask >> i) & 1u)) continue;
                        int u = perm[static_cast<std::size_t>(all[i].first - 1)];
                        int v = perm[static_cast<std::size_t>(all[i].second - 1)];
                        if (u > v) std::swap(u, v);
                        for (std::size_t k = 0; k < m; ++k)
                            if (all[k].first == u && all[k].second == v) {
                                pm |= 1u << k;
                                break;
                            }
                    }
                    if (pm < mask) {
                        least = false;
                        break;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (!least) continue;
                bad += verify_family(g, budget);
            }
        }
        return bad ? 4 : 0;
    }
    Graph g = load_graph(src);
    return verify_family(g, budget) ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric ideals of graphs: generators, fibers and splittings"};
    app.require_subcommand(1);

    GraphSource src;
    bool as_json = false, enumerate = false;
    std::string g1_remove, g2_remove, corpus;
    long long budget_n = 0;

    auto add_common = [&](CLI::App* cmd, bool graph_required) {
        cmd->add_option("--family", src.family_spec, "named family, NAME:P1[,P2]");
        cmd->add_option("--input", src.input_file, "graph file (text format)");
        cmd->add_flag("--json", as_json, "machine-readable output");
        cmd->add_option("--budget", budget_n, "override enumeration caps");
        (void)graph_required;
    };

    CLI::App* gen = app.add_subcommand("generators", "minimal generating set and counts");
    add_common(gen, true);

    CLI::App* split = app.add_subcommand("split", "splittability analysis");
    add_common(split, true);
    split->add_flag("--enumerate", enumerate, "list all splittings");
    split->add_option("--g1-remove", g1_remove, "edges removed from g to form g1");
    split->add_option("--g2-remove", g2_remove, "edges removed from g to form g2");

    CLI::App* verify = app.add_subcommand("verify", "oracle agreement checks");
    add_common(verify, false);
    verify->add_option("--corpus", corpus, "corpus name (small)");

    CLI11_PARSE(app, argc, argv);

    Budget budget = Budget::from_env();
    if (budget_n > 0) budget = Budget::scaled(static_cast<std::size_t>(budget_n));

    try {
        if (gen->parsed()) return cmd_generators(load_graph(src), as_json, budget);
        if (split->parsed())
            return cmd_split(load_graph(src), as_json, enumerate, g1_remove, g2_remove, budget);
        if (verify->parsed()) return cmd_verify(corpus, src, budget);
    } catch (const budget_error& e) {
        std::cerr << "unknown: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
