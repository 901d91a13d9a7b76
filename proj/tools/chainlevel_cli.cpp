// Command-line front end: level analysis, theorem verification, sequence
// listings, and the named example posets.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chainlevel/canonical.hpp"
#include "chainlevel/examples.hpp"
#include "chainlevel/generator.hpp"
#include "chainlevel/json_io.hpp"
#include "chainlevel/level.hpp"
#include "chainlevel/oracle.hpp"
#include "chainlevel/symbolic.hpp"

using namespace chainlevel;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

struct CommonOpts {
    bool json = false;
    long long budget = 50'000'000;
    int threads = 1;
    int max_elements = 16;
};

Poset load_poset(const std::string& file, const CommonOpts& opts) {
    std::ifstream in(file);
    if (!in) throw error("cannot open " + file);
    json j = json::parse(in); // throws json::parse_error on bad input
    Poset p = poset_from_json(j, opts.max_elements);
    for (const auto& [a, b] : p.removed_redundant_covers())
        std::cerr << "warning: cover (" << a << ", " << b
                  << ") is transitively implied and was dropped\n";
    return p;
}

std::string degrees_str(const DegreeSpectrum& sp) {
    std::string s = "{";
    for (size_t i = 0; i < sp.degrees.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(sp.degrees[i]);
    }
    return s + "}";
}

int cmd_analyze(const std::string& file, bool verify, const CommonOpts& opts) {
    Poset p = load_poset(file, opts);
    json out;
    out["levels"] = json::array();
    bool all_ok = true;
    for (PolytopeKind pk : {PolytopeKind::chain, PolytopeKind::order})
        for (IdealVariant iv : {IdealVariant::canonical, IdealVariant::anticanonical}) {
            LevelReport rep = is_level(p, pk, iv);
            if (!opts.json) std::cout << level_verdict_line(p, rep) << "\n";
            out["levels"].push_back(level_report_to_json(p, rep));
        }
    SpectrumOptions sopts;
    sopts.budget = opts.budget;
    sopts.threads = opts.threads;
    for (Epsilon eps : {eps_plus, eps_minus}) {
        DegreeSpectrum sp = degree_spectrum(p, eps, SpectrumMethod::formula, sopts);
        std::string tag = eps.value == 1 ? "canonical" : "anticanonical";
        if (!opts.json)
            std::cout << tag << " generator degrees: [" << sp.d0 << ", " << sp.dmax
                      << "] = " << degrees_str(sp) << "\n";
        out["spectrum_" + tag] = spectrum_to_json(p, sp);
        if (verify) {
            DegreeSpectrum bf = degree_spectrum(p, eps, SpectrumMethod::bruteforce, sopts);
            bool same = bf.degrees == sp.degrees;
            all_ok = all_ok && same;
            if (!opts.json)
                std::cout << tag << " brute-force degrees: " << degrees_str(bf)
                          << (same ? " (matches)" : " (MISMATCH)") << "\n";
            out["spectrum_" + tag + "_bruteforce"] = spectrum_to_json(p, bf);
        }
    }
    if (opts.json) std::cout << out.dump(2) << "\n";
    return all_ok ? exit_ok : exit_check_failed;
}

int cmd_verify(const std::string& file, int power_n, long long degree_cap, long long entry_cap,
               long long hilbert_n, const CommonOpts& opts) {
    Poset p = load_poset(file, opts);
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };
    if (power_n > 0) {
        for (Epsilon eps : {eps_plus, eps_minus}) {
            PowerReport rep = verify_power_equality(p, eps, power_n, degree_cap, entry_cap,
                                                    opts.budget);
            report("power-equality eps=" + std::to_string(eps.value) +
                       " n=" + std::to_string(power_n) + " (" + std::to_string(rep.checked) +
                       " maps)",
                   rep.passed());
        }
    }
    if (hilbert_n >= 0) {
        HilbertReport rep = hilbert_compare(p, hilbert_n, opts.budget);
        report("hilbert-equality n<=" + std::to_string(hilbert_n), rep.equal);
    }
    // three-way generator agreement over the candidate boxes of both ideals
    SpectrumOptions sopts;
    sopts.budget = opts.budget;
    sopts.threads = opts.threads;
    for (Epsilon eps : {eps_plus, eps_minus}) {
        long long checked = 0;
        bool agree = true;
        long long d0 = p.qdist(eps.value, ExtElem::bottom(), ExtElem::top());
        long long dm = dmax(p, eps, CondVariant::Nprime);
        for (long long d = d0; d <= dm && agree; ++d) {
            detail::BoxWalker walker(p, eps.value, d, opts.budget);
            bool exhausted = false;
            walker.run(
                [&](const std::vector<int>& vals) {
                    WeightMap xi{vals, d};
                    ++checked;
                    bool a = is_generator_antichain(p, eps, xi).is_generator;
                    bool b = is_generator_decomposition(p, eps, xi).is_generator;
                    bool c = generator_witness_sequence(p, eps, xi).is_generator;
                    if (a != b || b != c) {
                        agree = false;
                        return true;
                    }
                    return false;
                },
                exhausted);
            if (!exhausted && agree)
                throw box_too_large("generator agreement sweep exceeded the budget");
        }
        report("generator-test-agreement eps=" + std::to_string(eps.value) + " (" +
                   std::to_string(checked) + " maps)",
               agree);
        DegreeSpectrum sf = degree_spectrum(p, eps, SpectrumMethod::formula, sopts);
        DegreeSpectrum sb = degree_spectrum(p, eps, SpectrumMethod::bruteforce, sopts);
        report("degree-interval eps=" + std::to_string(eps.value), sf.degrees == sb.degrees);
    }
    ImplicationReport imp = check_implication(p);
    report("level-implication", imp.holds());
    return all_ok ? exit_ok : exit_check_failed;
}

int cmd_sequences(const std::string& file, int eps_v, const std::string& variant,
                  bool reduced_only, bool trace, const CommonOpts& opts) {
    Poset p = load_poset(file, opts);
    Epsilon eps(eps_v);
    CondVariant var;
    if (variant == "N")
        var = CondVariant::N;
    else if (variant == "Nprime")
        var = CondVariant::Nprime;
    else
        throw param_out_of_range("variant must be N or Nprime");
    json arr = json::array();
    for_each_sequence(p, eps, var, reduced_only, [&](const ZigzagSequence& s) {
        long long q = q_value(p, eps, s);
        if (opts.json) {
            json item = sequence_to_json(p, s);
            item["q"] = q;
            if (trace && reduced_only && var == CondVariant::Nprime) {
                ConstructionTrace tr = build_generator_traced(p, eps, s);
                json jt;
                jt["xi0"] = json::object();
                for (int i = 0; i < p.size(); ++i) jt["xi0"][p.name(i)] = tr.xi0[i];
                jt["steps"] = json::array();
                for (const auto& st : tr.steps)
                    jt["steps"].push_back({{"k", st.k},
                                           {"element", p.name(st.element)},
                                           {"from", st.old_value},
                                           {"to", st.new_value}});
                jt["generator"] = weightmap_to_json(p, tr.xi_final);
                json chains = json::array();
                for (const auto& c : tr.witness_chains) {
                    json jc = json::array();
                    for (int z : c) jc.push_back(p.name(z));
                    chains.push_back(jc);
                }
                jt["chains"] = chains;
                item["trace"] = jt;
            }
            arr.push_back(item);
        } else {
            std::cout << sequence_to_string(p, s) << "  q^(" << eps.value << ") = " << q << "\n";
        }
        return true;
    });
    if (opts.json) std::cout << arr.dump(2) << "\n";
    return exit_ok;
}

int cmd_examples(const std::string& name, int n, int m1, int m2) {
    Poset p = [&] {
        if (name == "chain2") return examples::chain2();
        if (name == "p1") return examples::p1();
        if (name == "grid6") return examples::grid6();
        if (name == "shared7") return examples::shared7();
        if (name == "level") return examples::level_example(n, m1, m2);
        if (name == "antican") return examples::antican_example(n);
        throw param_out_of_range("unknown example: " + name);
    }();
    std::cout << poset_to_json(p).dump(2) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level analysis of Ehrhart rings of chain polytopes"};
    app.require_subcommand(1);
    CommonOpts opts;
    app.add_flag("--json", opts.json, "emit JSON instead of text");
    app.add_option("--budget", opts.budget, "enumeration budget (operations)");
    app.add_option("--threads", opts.threads, "worker threads for degree slices");
    app.add_option("--max-elements", opts.max_elements, "poset size cap (default 16)");

    std::string file;
    bool verify_flag = false;
    auto* analyze = app.add_subcommand("analyze", "level verdicts and generator degrees");
    analyze->add_option("file", file, "poset json")->required();
    analyze->add_flag("--verify", verify_flag, "cross-check degrees by brute force");

    int power_n = 0;
    long long degree_cap = 10, entry_cap = 6, hilbert_n = -1;
    auto* verify = app.add_subcommand("verify", "theorem checks on one poset");
    verify->add_option("file", file, "poset json")->required();
    verify->add_option("--power", power_n, "check symbolic power equality for this n");
    verify->add_option("--degree-cap", degree_cap, "degree cap for the power check");
    verify->add_option("--entry-cap", entry_cap, "entry cap for the power check");
    verify->add_option("--hilbert", hilbert_n, "compare Ehrhart counts up to this dilation");

    int eps_v = 1;
    std::string variant = "Nprime";
    bool reduced_only = false, trace = false;
    auto* sequences = app.add_subcommand("sequences", "list condition sequences");
    sequences->add_option("file", file, "poset json")->required();
    sequences->add_option("--eps", eps_v, "+1 or -1");
    sequences->add_option("--variant", variant, "N or Nprime");
    sequences->add_flag("--reduced-only", reduced_only, "only q^eps-reduced sequences");
    sequences->add_flag("--trace", trace, "emit generator construction traces (json)");

    std::string ex_name;
    int ex_n = 0, ex_m1 = 0, ex_m2 = 0;
    auto* examples_cmd = app.add_subcommand("examples", "emit a named example poset");
    examples_cmd->add_option("name", ex_name, "chain2|p1|grid6|shared7|level|antican")
        ->required();
    examples_cmd->add_option("--n", ex_n, "size parameter");
    examples_cmd->add_option("--m1", ex_m1, "level example m1");
    examples_cmd->add_option("--m2", ex_m2, "level example m2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(file, verify_flag, opts);
        if (*verify) return cmd_verify(file, power_n, degree_cap, entry_cap, hilbert_n, opts);
        if (*sequences) return cmd_sequences(file, eps_v, variant, reduced_only, trace, opts);
        if (*examples_cmd) return cmd_examples(ex_name, ex_n, ex_m1, ex_m2);
    } catch (const box_too_large& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const graph_too_large& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const json::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
