// Command-line front end: parse graphs, run rotor walks, compute exact
// invariants, verify the orbit/Picard identities, export DOT.
//
// Exit codes: 0 success (all checks pass), 1 check failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rotorkit/algebra.hpp"
#include "rotorkit/digraph.hpp"
#include "rotorkit/divisors.hpp"
#include "rotorkit/errors.hpp"
#include "rotorkit/generate.hpp"
#include "rotorkit/rotor.hpp"
#include "rotorkit/verify.hpp"

using nlohmann::json;
using namespace rotorkit;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Digraph load_graph(const std::string& path) { return parse_digraph(read_file(path)); }

json strings_json(const std::vector<Int>& xs) {
    json arr = json::array();
    for (const auto& x : xs) arr.push_back(x.get_str());
    return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_invariants(const std::string& path) {
    Digraph d = load_graph(path);
    const int n = d.vertex_count();

    std::vector<Int> counts;
    for (int v = 0; v < n; ++v) counts.push_back(arborescence_count(d, v));
    PeriodVector period = period_vector(d);
    PicardSummary picard = picard_summary(d);

    json j;
    j["n"] = n;
    j["m"] = d.edge_count();
    j["per"] = strings_json(period);
    j["arborescences"] = strings_json(counts);
    j["pham_index"] = pham_index(d).get_str();
    j["picard_invariant_factors"] = strings_json(picard.invariant_factors);
    j["picard_order"] = picard.order.get_str();
    j["orbit_length"] = period_length(d).get_str();
    j["orbit_count"] = picard.order.get_str();
    emit(j);
    return 0;
}

std::string rotors_csv(const ChipRotorState& s) {
    std::string out;
    for (std::size_t i = 0; i < s.rotors.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.rotors[i]);
    }
    return out;
}

int cmd_simulate(const std::string& path, int chip, const std::string& rotors, std::int64_t steps,
                 bool until_return, bool dot, std::size_t cap) {
    Digraph d = load_graph(path);
    ChipRotorState s{chip, parse_rotor_indices(rotors)};
    validate_state(d, s);

    if (until_return && !is_unicycle(d, s))
        throw std::invalid_argument(
            "start state is not a unicycle, so the walk never returns to it "
            "(recurrent chip-and-rotor states of a strongly connected digraph "
            "are exactly the unicycles)");

    ChipRotorState cur = s;
    std::int64_t t = 0;
    if (!dot) std::cout << t << ' ' << cur.chip << ' ' << rotors_csv(cur) << '\n';
    while (until_return ? true : t < steps) {
        if (std::size_t(t) >= cap) throw CapExceeded("walk exceeds cap of " + std::to_string(cap));
        cur = step(d, cur);
        ++t;
        if (!dot) std::cout << t << ' ' << cur.chip << ' ' << rotors_csv(cur) << '\n';
        if (until_return && cur == s) break;
    }

    if (dot) {
        std::cout << to_dot(d, cur);
        return 0;
    }
    if (until_return) {
        OrbitSummary summary = run_period(d, s, cap);
        std::cout << "length " << summary.length << '\n';
        std::cout << "visits";
        for (auto v : summary.visits) std::cout << ' ' << v;
        std::cout << "\nturns";
        for (auto v : summary.turns) std::cout << ' ' << v;
        std::cout << '\n';
        for (int v = 0; v < d.vertex_count(); ++v) {
            std::cout << "edge_flow " << v << ':';
            for (auto f : summary.edge_flow[std::size_t(v)]) std::cout << ' ' << f;
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_orbits(const std::string& path, std::size_t cap) {
    Digraph d = load_graph(path);
    auto orbits = orbit_partition(d, cap);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        std::cout << "orbit " << i << " size " << orbits[i].size() << " rep "
                  << format_state(orbits[i].front()) << '\n';
    std::cout << "orbit-count " << orbits.size() << '\n';

    PeriodVector period = period_vector(d);
    bool ok = true;
    for (int w = 0; w < d.vertex_count(); ++w) {
        Int count = arborescence_count(d, w);
        Int ratio = count / period[std::size_t(w)];
        bool match = count % period[std::size_t(w)] == 0 && ratio == Int(orbits.size());
        ok = ok && match;
        std::cout << "cross-check w=" << w << " arborescences=" << count.get_str() << " period="
                  << period[std::size_t(w)].get_str() << " ratio=" << ratio.get_str()
                  << (match ? " OK" : " MISMATCH") << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_verify(const std::vector<std::string>& paths, bool fixtures,
               const std::vector<std::uint64_t>& random_spec, bool as_json, std::size_t cap) {
    std::vector<CorpusEntry> corpus;
    for (const auto& path : paths) corpus.push_back({path, load_graph(path)});
    if (fixtures)
        for (auto name : fixture_names()) corpus.push_back({std::string(name), fixture(name)});
    if (!random_spec.empty()) {
        int n = int(random_spec[0]);
        int count = int(random_spec[1]);
        std::uint64_t seed = random_spec[2];
        for (int i = 0; i < count; ++i) {
            std::ostringstream id;
            id << "random(n=" << n << ",extra=" << i % 5 << ",seed=" << seed + std::uint64_t(i) << ")";
            corpus.push_back({id.str(), random_digraph(n, i % 5, seed + std::uint64_t(i))});
        }
    }
    if (corpus.empty()) throw std::invalid_argument("nothing to verify: pass files, --fixtures or --random");

    std::vector<CheckResult> all;
    for (const auto& entry : corpus) {
        auto results = run_all_checks(entry.graph, entry.id, cap);
        all.insert(all.end(), results.begin(), results.end());
    }

    int failed = 0;
    for (const auto& r : all)
        if (!r.pass) ++failed;

    if (as_json) {
        json j;
        j["summary"] = {{"total", all.size()}, {"passed", all.size() - std::size_t(failed)}, {"failed", failed}};
        if (!random_spec.empty())
            j["random"] = {{"n", random_spec[0]}, {"count", random_spec[1]}, {"seed", random_spec[2]}};
        json results = json::array();
        for (const auto& r : all) {
            json item;
            item["check"] = r.check;
            item["graph"] = r.graph_id;
            item["pass"] = r.pass;
            item["details"] = r.details;
            item["counterexamples"] = r.counterexamples;
            results.push_back(item);
        }
        j["results"] = results;
        emit(j);
    } else {
        for (const auto& r : all) {
            std::cout << format_report_line(r) << '\n';
            for (const auto& c : r.counterexamples) std::cout << "  counterexample: " << c << '\n';
        }
        std::cout << (failed ? "FAILED " : "OK ") << (all.size() - std::size_t(failed)) << '/' << all.size()
                  << " checks\n";
    }
    return failed ? 1 : 0;
}

int cmd_divisor(const std::string& path, const std::string& divisor_str, int root, bool reduced,
                bool canonical, const std::string& equiv_str, std::size_t cap) {
    (void)cap;
    Digraph d = load_graph(path);
    Divisor x = parse_divisor(divisor_str, d.vertex_count());

    json j;
    j["divisor"] = strings_json(x);
    if (reduced) {
        j["root"] = root;
        j["w_reduced"] = is_w_reduced(d, x, root);
    } else if (canonical) {
        j["canonical"] = strings_json(canonical_form(d, x));
    } else {
        Divisor y = parse_divisor(equiv_str, d.vertex_count());
        j["other"] = strings_json(y);
        EquivalenceResult result = equivalent(d, x, y);
        j["equivalent"] = result.equivalent;
        j["witness"] = result.witness ? strings_json(*result.witness) : json();
    }
    emit(j);
    return 0;
}

int cmd_gen(const std::string& fixture_name, int cycle_n, const std::vector<std::uint64_t>& random_spec,
            const std::string& out_path) {
    int sources = int(!fixture_name.empty()) + int(cycle_n > 0) + int(!random_spec.empty());
    if (sources != 1)
        throw std::invalid_argument("choose exactly one of --fixture, --cycle, --random");

    std::string text;
    if (!fixture_name.empty()) {
        text = serialize_digraph(fixture(fixture_name));
    } else if (cycle_n > 0) {
        text = serialize_digraph(directed_cycle(cycle_n));
    } else {
        text = "# random n=" + std::to_string(random_spec[0]) + " extra=" + std::to_string(random_spec[1]) +
               " seed=" + std::to_string(random_spec[2]) + "\n" +
               serialize_digraph(random_digraph(int(random_spec[0]), int(random_spec[1]), random_spec[2]));
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotor-routing walks and exact divisor algebra on strongly connected multidigraphs"};
    app.require_subcommand(1);
    std::size_t cap = kDefaultCap;
    app.add_option("--cap", cap, "state enumeration cap")->capture_default_str();

    std::string graph_path, rotors_str, divisor_str, equiv_str, fixture_name, out_path;
    int chip = 0, root = 0, cycle_n = 0;
    std::int64_t steps = 0;
    bool until_return = false, dot = false, fixtures = false, as_json = false;
    bool reduced = false, canonical = false;
    std::vector<std::string> verify_paths;
    std::vector<std::uint64_t> random_spec;

    auto* invariants = app.add_subcommand("invariants", "exact invariants of a graph as JSON");
    invariants->add_option("graph", graph_path, "graph file")->required();

    auto* simulate = app.add_subcommand("simulate", "trace the rotor-router walk");
    simulate->add_option("graph", graph_path, "graph file")->required();
    simulate->add_option("--chip", chip, "start vertex of the chip")->required();
    simulate->add_option("--rotors", rotors_str, "start rotor indices i0,i1,...")->required();
    auto* steps_opt = simulate->add_option("--steps", steps, "number of steps to walk");
    auto* until_opt = simulate->add_flag("--until-return", until_return, "walk one full period");
    steps_opt->excludes(until_opt);
    simulate->add_flag("--dot", dot, "emit DOT of the final state instead of a trace");

    auto* orbits = app.add_subcommand("orbits", "list all unicycle orbits");
    orbits->add_option("graph", graph_path, "graph file")->required();

    auto* verify = app.add_subcommand("verify", "run every identity check");
    verify->add_option("graphs", verify_paths, "graph files");
    verify->add_flag("--fixtures", fixtures, "check the built-in fixture graphs");
    verify->add_option("--random", random_spec, "N COUNT SEED: check COUNT random graphs on N vertices")
        ->expected(3);
    verify->add_flag("--json", as_json, "machine-readable report");

    auto* divisor = app.add_subcommand("divisor", "reduced / canonical / equivalence queries");
    divisor->add_option("graph", graph_path, "graph file")->required();
    divisor->add_option("--divisor", divisor_str, "divisor values \"a0 a1 ...\"")->required();
    divisor->add_option("--root", root, "root vertex for --reduced");
    auto* reduced_opt = divisor->add_flag("--reduced", reduced, "test w-reducedness at --root");
    auto* canonical_opt = divisor->add_flag("--canonical", canonical, "canonical class label");
    auto* equiv_opt = divisor->add_option("--equiv", equiv_str, "test equivalence against this divisor");
    reduced_opt->excludes(canonical_opt)->excludes(equiv_opt);
    canonical_opt->excludes(equiv_opt);

    auto* gen = app.add_subcommand("gen", "write a graph file");
    gen->add_option("--fixture", fixture_name, "fixture name G1..G4");
    gen->add_option("--cycle", cycle_n, "directed cycle on N vertices");
    gen->add_option("--random", random_spec, "N EXTRA SEED: random strongly connected graph")->expected(3);
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*invariants) return cmd_invariants(graph_path);
        if (*simulate) {
            if (!*steps_opt && !*until_opt)
                throw std::invalid_argument("pass --steps K or --until-return");
            return cmd_simulate(graph_path, chip, rotors_str, steps, until_return, dot, cap);
        }
        if (*orbits) return cmd_orbits(graph_path, cap);
        if (*verify) return cmd_verify(verify_paths, fixtures, random_spec, as_json, cap);
        if (*divisor) {
            if (!reduced && !canonical && equiv_str.empty())
                throw std::invalid_argument("pass one of --reduced, --canonical or --equiv");
            return cmd_divisor(graph_path, divisor_str, root, reduced, canonical, equiv_str, cap);
        }
        if (*gen) return cmd_gen(fixture_name, cycle_n, random_spec, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
