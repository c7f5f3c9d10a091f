#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "extenso/bounds.hpp"
#include "extenso/entropy.hpp"
#include "extenso/extension_count.hpp"
#include "extenso/extremal_search.hpp"
#include "extenso/json_io.hpp"
#include "extenso/poset.hpp"
#include "extenso/random_orders.hpp"

using nlohmann::json;
using namespace extenso;

namespace {

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw RangeError("cannot open output file: " + output_path);
    out << text;
}

void emit_json(const json& j, const std::string& output_path) {
    emit(j.dump(2) + "\n", output_path);
}

std::string witness_id(uint64_t enc) {
    std::ostringstream s;
    s << "w" << std::hex << enc;
    return s.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"poset linear-extension analytics"};
    app.require_subcommand(1);

    std::string input, output, format = "json", delta_str;
    int n = 0, k = 2, t = 0, jobs = 0;
    int64_t trials = 0, samples = 0;
    uint64_t seed = 0;
    double tol = 1e-6;

    auto add_io = [&](CLI::App* cmd, bool need_input) {
        if (need_input) cmd->add_option("--input", input, "input JSON file")->required();
        cmd->add_option("--output", output, "output file (default stdout)");
    };

    auto* c_count = app.add_subcommand("count", "exact number of linear extensions");
    add_io(c_count, true);

    auto* c_bounds = app.add_subcommand("bounds", "all applicable formula bounds for a poset");
    add_io(c_bounds, true);
    c_bounds->add_option("--format", format, "json or csv");

    auto* c_entropy = app.add_subcommand("entropy", "graph entropy sandwich for a poset");
    add_io(c_entropy, true);
    c_entropy->add_option("--tol", tol, "entropy solver tolerance (bits)");

    auto* c_volume = app.add_subcommand("volume", "Monte Carlo n!*vol(clique polytope)");
    add_io(c_volume, true);
    c_volume->add_option("--samples", samples, "sample count (>= 10^4)")->required();
    c_volume->add_option("--seed", seed, "RNG seed")->required();

    auto* c_rint = app.add_subcommand("random-interval", "sample a random interval order");
    add_io(c_rint, false);
    c_rint->add_option("--n", n, "number of intervals")->required();
    c_rint->add_option("--seed", seed, "RNG seed")->required();

    auto* c_rkdim = app.add_subcommand("random-kdim", "sample a random k-dimensional order");
    add_io(c_rkdim, false);
    c_rkdim->add_option("--n", n, "number of points")->required();
    c_rkdim->add_option("--k", k, "number of linear orders")->required();
    c_rkdim->add_option("--seed", seed, "RNG seed")->required();

    auto* c_conc = app.add_subcommand("concentration", "comparable-pair concentration experiment");
    add_io(c_conc, false);
    c_conc->add_option("--n", n, "number of intervals per trial")->required();
    c_conc->add_option("--trials", trials, "number of trials (>= 30)")->required();
    c_conc->add_option("--seed", seed, "RNG seed")->required();
    c_conc->add_option("--format", format, "json (aggregate) or csv (per trial)");
    c_conc->add_option("--jobs", jobs, "thread count (output is jobs-independent)");

    auto* c_dyadic = app.add_subcommand("dyadic-bound", "dyadic antichain lower bound for intervals");
    add_io(c_dyadic, true);

    auto* c_table = app.add_subcommand("table", "exhaustive extremal table f+/f- by m");
    add_io(c_table, false);
    c_table->add_option("--n", n, "ground set size")->required();
    c_table->add_option("--format", format, "json or csv");
    c_table->add_option("--jobs", jobs, "thread count (output is jobs-independent)");

    auto* c_conj = app.add_subcommand("conjectures", "balanced-example extremality checks");
    add_io(c_conj, false);
    c_conj->add_option("--n", n, "ground set size")->required();
    c_conj->add_option("--k", k, "number of balanced parts")->required();
    c_conj->add_option("--jobs", jobs, "thread count (output is jobs-independent)");

    auto* c_constr = app.add_subcommand("constructions", "witness families at scale, log space");
    add_io(c_constr, false);
    c_constr->add_option("--n", n, "ground set size")->required();
    c_constr->add_option("--delta", delta_str, "density as reduced fraction p/q")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_count->parsed()) {
            Poset p = load_poset(input);
            emit_json(json{{"e", count_extensions(p).get_str()}}, output);
        } else if (c_bounds->parsed()) {
            BoundsReport r = bounds_report(load_poset(input));
            if (format == "csv")
                emit(bounds_report_to_csv(r), output);
            else
                emit_json(bounds_report_to_json(r), output);
        } else if (c_entropy->parsed()) {
            emit_json(sandwich_to_json(entropy_sandwich(load_poset(input), tol)), output);
        } else if (c_volume->parsed()) {
            VolumeEstimate v = chain_volume_mc(load_poset(input), samples, seed);
            emit_json(json{{"estimate", v.estimate},
                           {"stderr", v.stderr_},
                           {"hits", v.hits},
                           {"samples", v.samples}},
                      output);
        } else if (c_rint->parsed()) {
            auto [p, f] = sample_interval_poset(n, seed);
            json j;
            j["intervals"] = intervals_to_json(f)["intervals"];
            j["poset"] = poset_to_json(p);
            j["comp"] = p.comp_count();
            j["max_antichain"] = max_antichain_size(p);
            emit_json(j, output);
        } else if (c_rkdim->parsed()) {
            emit_json(poset_to_json(sample_kdim_poset(n, k, seed)), output);
        } else if (c_conc->parsed()) {
            if (format == "csv") {
                std::ostringstream csv;
                csv << "trial,Z,A_n,dyadic_bound_log2\n";
                for (int64_t tr = 0; tr < trials; ++tr) {
                    auto [p, f] = concentration_trial(n, seed, tr);
                    DyadicBound d = dyadic_lower_bound(f);
                    signed long exp2v;
                    double mant = mpz_get_d_2exp(&exp2v, d.factorial_product.get_mpz_t());
                    csv << tr << "," << p.comp_count() << "," << max_antichain_size(p) << ","
                        << (std::log2(mant) + double(exp2v)) << "\n";
                }
                emit(csv.str(), output);
            } else {
                ConcentrationStats st = comp_concentration_experiment(n, trials, seed);
                json j{{"n", st.n},          {"trials", st.trials},
                       {"expected_z", st.expected_z}, {"mean_z", st.mean_z},
                       {"sd_z", st.sd_z}};
                json tails = json::array();
                for (size_t i = 0; i < st.thresholds.size(); ++i)
                    tails.push_back({{"a", st.thresholds[i]},
                                     {"fraction", st.tail_fraction[i]},
                                     {"bound", st.tail_bound[i]}});
                j["tails"] = std::move(tails);
                emit_json(j, output);
            }
        } else if (c_dyadic->parsed()) {
            IntervalFamily f = load_intervals(input);
            DyadicBound d = dyadic_lower_bound(f);
            json groups = json::array();
            for (const auto& g : d.groups)
                groups.push_back({{"i", g.i}, {"j", g.j}, {"members", g.members}});
            json j{{"groups", std::move(groups)},
                   {"factorial_product", d.factorial_product.get_str()},
                   {"refined_log2", d.refined_log2}};
            emit_json(j, output);
        } else if (c_table->parsed()) {
            ExtremalTable table = extremal_table(n, jobs);
            if (format == "csv") {
                std::ostringstream csv;
                csv << "n,m,f_plus,f_minus,witness_plus_id,witness_minus_id\n";
                for (const auto& rec : table.records)
                    csv << table.n << "," << rec.m << "," << rec.f_plus_at_least_m.get_str() << ","
                        << rec.f_minus_at_most_m.get_str() << "," << witness_id(rec.plus_witness)
                        << "," << witness_id(rec.minus_witness) << "\n";
                emit(csv.str(), output);
            } else {
                json recs = json::array();
                json witnesses = json::object();
                for (const auto& rec : table.records) {
                    recs.push_back({{"m", rec.m},
                                    {"f_plus", rec.f_plus_at_least_m.get_str()},
                                    {"f_minus", rec.f_minus_at_most_m.get_str()},
                                    {"witness_plus_id", witness_id(rec.plus_witness)},
                                    {"witness_minus_id", witness_id(rec.minus_witness)}});
                    for (uint64_t enc : {rec.plus_witness, rec.minus_witness})
                        witnesses[witness_id(enc)] = poset_to_json(decode_small_poset(n, enc));
                }
                emit_json(json{{"n", table.n},
                               {"total_posets", table.total_posets},
                               {"records", std::move(recs)},
                               {"witnesses", std::move(witnesses)}},
                          output);
            }
        } else if (c_conj->parsed()) {
            auto to_json = [&](const ConjectureReport& r) {
                json j{{"n", r.n},
                       {"k", r.k},
                       {"family", r.family},
                       {"comp_threshold", r.comp_threshold},
                       {"construction_e", r.construction_e.get_str()},
                       {"verdict", r.pass ? "PASS" : "FAIL"}};
                if (r.counterexample) {
                    j["counterexample"] = poset_to_json(decode_small_poset(r.n, *r.counterexample));
                    j["counterexample_e"] = r.counterexample_e.get_str();
                    j["counterexample_comp"] = r.counterexample_comp;
                }
                return j;
            };
            json j{{"antichain", to_json(check_conjecture_antichain(n, k, jobs))},
                   {"chain", to_json(check_conjecture_chain(n, k, jobs))}};
            emit_json(j, output);
        } else if (c_constr->parsed()) {
            Density delta = Density::parse(delta_str);
            json fams = json::array();
            bool all_ok = true;
            for (const auto& c : construction_bounds_check(n, delta)) {
                fams.push_back({{"family", c.family},
                                {"params", c.params},
                                {"comp", c.comp},
                                {"comp_threshold", c.comp_threshold},
                                {"comp_ok", c.comp_ok},
                                {"log2_e", c.log2_e},
                                {"log2_bound", c.log2_bound},
                                {"bound_ok", c.bound_ok}});
                all_ok = all_ok && c.comp_ok && c.bound_ok;
            }
            emit_json(json{{"n", n}, {"delta", delta.str()}, {"families", std::move(fams)},
                           {"all_ok", all_ok}},
                      output);
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
