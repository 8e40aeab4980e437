#include "circ/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "circ/serialize.hpp"

namespace circ::cli {

using nlohmann::json;

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty() || v < 0)
        throw std::invalid_argument("bad value '" + value + "' for " + key);
    return static_cast<T>(v);
}

void validate(const RunConfig& c) {
    if (c.oracle_cutoff < 2) throw std::invalid_argument("oracle_cutoff must be at least 2");
    if (c.workers < 1) throw std::invalid_argument("workers must be at least 1");
    if (c.output_format != "json" && c.output_format != "csv" && c.output_format != "text")
        throw std::invalid_argument("output_format must be json, csv or text");
}

struct Invocation {
    RunConfig config;
    std::ostream& out;
    std::ostream& err;
    EngineCache engines;

    Invocation(RunConfig c, std::ostream& o, std::ostream& e)
        : config(std::move(c)), out(o), err(e), engines(config.solving_set_cache_limit) {}

    SweepOptions sweep() { return {config.workers, &engines}; }
    bool json_out() const { return config.output_format == "json"; }
    bool csv_out() const { return config.output_format == "csv"; }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string report_text(const ClassificationReport& r) {
    std::string line = "n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) + " " + std::string(to_string(r.mode)) +
                       " property=" + yes_no(r.property_holds) +
                       " predicate=" + (r.predicate_value ? yes_no(*r.predicate_value) : "n/a") +
                       " agree=" + yes_no(r.agreement);
    if (r.failing_valency) line += " failing_valency=" + std::to_string(*r.failing_valency);
    if (!r.counterexamples.empty()) {
        line += " counterexamples=";
        for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
            if (i) line += ";";
            line += r.counterexamples[i].set.to_string() + "~" + r.counterexamples[i].witness.to_string();
        }
    }
    return line;
}

void emit_reports(Invocation& inv, const std::vector<ClassificationReport>& reports) {
    if (inv.json_out()) {
        json rows = json::array();
        for (const auto& r : reports) rows.push_back(to_json(r));
        inv.out << rows.dump(2) << "\n";
    } else if (inv.csv_out()) {
        inv.out << csv_header() << "\n";
        for (const auto& r : reports) inv.out << to_csv_row(r) << "\n";
    } else {
        for (const auto& r : reports) inv.out << report_text(r) << "\n";
    }
}

int finish_reports(Invocation& inv, const std::vector<ClassificationReport>& reports, const std::string& dump_path) {
    emit_reports(inv, reports);
    json bad = json::array();
    for (const auto& r : reports)
        if (!r.agreement) bad.push_back(to_json(r));
    if (bad.empty()) return exit_ok;
    std::ofstream(dump_path) << bad.dump(2) << "\n";
    inv.err << "disagreement between exhaustive sweep and closed form; dump written to " << dump_path << "\n";
    return exit_disagreement;
}

int cmd_key(Invocation& inv, Int n, const std::string& set_text, Mode mode, bool close, bool partition) {
    const ConnectionSet s = ConnectionSet::parse(n, set_text, mode, close);
    const Key k = inv.engines.get(n).key_of_set(s);
    if (inv.json_out()) {
        json j{{"n", n}, {"set", to_json(s)}, {"key", to_json(k)}};
        if (partition) j["partition"] = to_json(key_partition(k));
        inv.out << j.dump() << "\n";
    } else if (inv.csv_out()) {
        inv.out << "n,set,key" << (partition ? ",partition" : "") << "\n";
        inv.out << n << ",\"" << s.to_string() << "\",\"" << k.to_string() << "\"";
        if (partition) inv.out << ",\"" << key_partition(k).to_string() << "\"";
        inv.out << "\n";
    } else {
        inv.out << k.to_string() << "\n";
        if (partition) inv.out << "partition: " << key_partition(k).to_string() << "\n";
    }
    return exit_ok;
}

int cmd_iso(Invocation& inv, Int n, const std::string& s_text, const std::string& t_text, Mode mode, bool close,
            bool oracle) {
    const ConnectionSet s = ConnectionSet::parse(n, s_text, mode, close);
    const ConnectionSet t = ConnectionSet::parse(n, t_text, mode, close);
    if (s.empty() || t.empty()) throw std::invalid_argument("key of the empty set is undefined");
    const IsoVerdict v = inv.engines.get(n).muzychuk_isomorphic(s, t);
    json j = to_json(v);
    j["n"] = n;
    j["s"] = to_json(s);
    j["t"] = to_json(t);
    std::optional<OracleResult> brute;
    if (oracle) {
        brute = brute_force_isomorphic(CayleyDigraph(s), CayleyDigraph(t), inv.config.oracle_cutoff);
        j["oracle"] = brute->isomorphic;
        j["agree"] = brute->isomorphic == v.isomorphic;
    }
    if (inv.json_out()) {
        inv.out << j.dump() << "\n";
    } else if (inv.csv_out()) {
        inv.out << "n,s,t,isomorphic,reason,multiplier" << (oracle ? ",oracle,agree" : "") << "\n";
        inv.out << n << ",\"" << s.to_string() << "\",\"" << t.to_string() << "\"," << yes_no(v.isomorphic) << ","
                << to_string(v.reason) << ",\""
                << (v.witness_multiplier ? v.witness_multiplier->multiplier().to_string() : "") << "\"";
        if (oracle) inv.out << "," << yes_no(brute->isomorphic) << "," << yes_no(brute->isomorphic == v.isomorphic);
        inv.out << "\n";
    } else {
        inv.out << (v.isomorphic ? "isomorphic" : "not isomorphic") << " (" << to_string(v.reason) << ")";
        if (v.witness_multiplier) inv.out << " multiplier " << v.witness_multiplier->multiplier().to_string();
        if (v.reason == IsoReason::key_mismatch) inv.out << " keys " << v.key_s.to_string() << " vs " << v.key_t.to_string();
        inv.out << "\n";
        if (oracle)
            inv.out << "oracle: " << (brute->isomorphic ? "isomorphic" : "not isomorphic")
                    << (brute->isomorphic == v.isomorphic ? " (agree)" : " (DISAGREE)") << "\n";
    }
    return brute && brute->isomorphic != v.isomorphic ? exit_disagreement : exit_ok;
}

int cmd_ci(Invocation& inv, Int n, const std::string& set_text, Mode mode, bool close) {
    const ConnectionSet s = ConnectionSet::parse(n, set_text, mode, close);
    const CiVerdict v = decide_ci(s, inv.engines);
    if (inv.json_out()) {
        json j = to_json(v);
        j["n"] = n;
        j["set"] = to_json(s);
        j["mode"] = to_string(mode);
        inv.out << j.dump() << "\n";
    } else if (inv.csv_out()) {
        inv.out << "n,set,mode,ci,fast_path,witness\n";
        inv.out << n << ",\"" << s.to_string() << "\"," << to_string(mode) << "," << yes_no(v.is_ci) << ","
                << to_string(v.fast_path) << ",\"" << (v.witness ? v.witness->to_string() : "") << "\"\n";
    } else {
        if (v.is_ci)
            inv.out << "CI (fast path " << to_string(v.fast_path) << ")\n";
        else
            inv.out << "non-CI, witness " << v.witness->to_string() << " (fast path " << to_string(v.fast_path) << ")\n";
    }
    return exit_ok;
}

int cmd_witness(Invocation& inv, Int n, Mode mode) {
    json rows = json::array();
    bool all_confirmed = true;
    std::vector<std::pair<WitnessFamily, CiVerdict>> results;
    for (auto& family : witnesses(n, mode)) {
        CiVerdict v = is_ci_reduced(family.set, inv.engines);
        all_confirmed = all_confirmed && !v.is_ci;
        results.emplace_back(std::move(family), std::move(v));
    }
    if (inv.json_out()) {
        for (const auto& [family, v] : results)
            rows.push_back({{"family", family.name},
                            {"set", to_json(family.set)},
                            {"non_ci_confirmed", !v.is_ci},
                            {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}});
        inv.out << json{{"n", n}, {"mode", to_string(mode)}, {"families", rows}}.dump(2) << "\n";
    } else if (inv.csv_out()) {
        inv.out << "n,mode,family,set,non_ci_confirmed,witness\n";
        for (const auto& [family, v] : results)
            inv.out << n << "," << to_string(mode) << ",\"" << family.name << "\",\"" << family.set.to_string() << "\","
                    << yes_no(!v.is_ci) << ",\"" << (v.witness ? v.witness->to_string() : "") << "\"\n";
    } else {
        if (results.empty()) inv.out << "no witness family applies to Z_" << n << " (" << to_string(mode) << ")\n";
        for (const auto& [family, v] : results)
            inv.out << family.name << ": " << family.set.to_string()
                    << (v.is_ci ? ": NOT confirmed non-CI" : ": non-CI confirmed, isomorphic to " + v.witness->to_string())
                    << "\n";
    }
    return all_confirmed ? exit_ok : exit_disagreement;
}

// Random same-size pairs checked against the oracle for every n up to the cutoff.
int oracle_samples(Invocation& inv, Int n_max, Mode mode, std::size_t samples) {
    std::mt19937_64 rng(inv.config.seed);
    std::size_t disagreements = 0, checked = 0;
    for (Int n = 3; n <= std::min(n_max, inv.config.oracle_cutoff); ++n) {
        std::vector<ConnectionSet> pool;
        for (Int m = 1; m < n; ++m)
            for (auto& s : orbit_representatives(n, m, mode)) pool.push_back(std::move(s));
        if (pool.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (std::size_t i = 0; i < samples; ++i) {
            const ConnectionSet& s = pool[pick(rng)];
            std::vector<const ConnectionSet*> same;
            for (const auto& t : pool)
                if (t.size() == s.size()) same.push_back(&t);
            std::uniform_int_distribution<std::size_t> pick_t(0, same.size() - 1);
            const ConnectionSet& t = *same[pick_t(rng)];
            const bool muz = inv.engines.get(n).muzychuk_isomorphic(s, t).isomorphic;
            const bool brute = brute_force_isomorphic(CayleyDigraph(s), CayleyDigraph(t), inv.config.oracle_cutoff).isomorphic;
            ++checked;
            if (muz != brute) {
                ++disagreements;
                inv.err << "oracle disagreement in Z_" << n << ": " << s.to_string() << " vs " << t.to_string() << "\n";
            }
        }
    }
    inv.err << "oracle cross-check: " << checked << " pairs, " << disagreements << " disagreements (seed "
            << inv.config.seed << ")\n";
    return disagreements == 0 ? exit_ok : exit_disagreement;
}

}  // namespace

RunConfig parse_config(const std::string& text, RunConfig base) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line without '=': " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "oracle_cutoff")
            base.oracle_cutoff = parse_number<Int>(key, value);
        else if (key == "solving_set_cache_limit")
            base.solving_set_cache_limit = parse_number<std::size_t>(key, value);
        else if (key == "workers")
            base.workers = parse_number<unsigned>(key, value);
        else if (key == "output_format")
            base.output_format = value;
        else if (key == "seed")
            base.seed = parse_number<std::uint64_t>(key, value);
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
    validate(base);
    return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Circulant isomorphism and CI classification engine", "circ"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string format;
    unsigned workers = 0;
    Int oracle_cutoff = 0;
    std::uint64_t seed = 0;
    app.add_option("--config", config_path, "key=value config file");
    auto* format_opt = app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    auto* workers_opt = app.add_option("--workers", workers, "worker threads for sweeps")->check(CLI::PositiveNumber);
    auto* cutoff_opt = app.add_option("--oracle-cutoff", oracle_cutoff, "largest n the brute-force oracle accepts");
    auto* seed_opt = app.add_option("--seed", seed, "seed for sampled oracle checks");

    Int n = 0, m = 0, n_max = 0, m_max = 0;
    std::string set_a, set_b, mode_text = "digraph", dump_path = "circ-disagreements.json";
    bool close = false, partition = false, oracle = false;
    std::size_t samples = 0;

    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", mode_text, "digraph | graph")->check(CLI::IsMember({"digraph", "graph"}));
    };
    auto add_close = [&](CLI::App* sub) {
        sub->add_flag("--close-inverses", close, "add -s for every listed s");
    };

    auto* key = app.add_subcommand("key", "key of a connection set");
    key->add_option("n", n)->required();
    key->add_option("set", set_a, "comma-separated residues")->required();
    key->add_flag("--partition", partition, "also print the key partition");
    add_mode(key);
    add_close(key);

    auto* iso = app.add_subcommand("iso", "decide Cay(Z_n,S) ~ Cay(Z_n,T)");
    iso->add_option("n", n)->required();
    iso->add_option("s", set_a)->required();
    iso->add_option("t", set_b)->required();
    iso->add_flag("--oracle", oracle, "cross-check with the brute-force oracle");
    add_mode(iso);
    add_close(iso);

    auto* ci = app.add_subcommand("ci", "CI test of a connection set");
    ci->add_option("n", n)->required();
    ci->add_option("set", set_a)->required();
    add_mode(ci);
    add_close(ci);

    auto* classify = app.add_subcommand("classify", "is Z_n an m-DCI / m-CI group");
    classify->add_option("n", n)->required();
    classify->add_option("m", m)->required();
    classify->add_option("--dump", dump_path, "where disagreements are written");
    add_mode(classify);

    auto* verify = app.add_subcommand("verify", "sweep every (n, m) cell against the closed form");
    verify->add_option("--n-max", n_max)->required();
    verify->add_option("--m-max", m_max)->required();
    verify->add_option("--dump", dump_path, "where disagreements are written");
    verify->add_option("--oracle-samples", samples, "random pairs per n cross-checked against the oracle");
    add_mode(verify);

    auto* witness = app.add_subcommand("witness", "known non-CI constructions for Z_n");
    witness->add_option("n", n)->required();
    add_mode(witness);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) {
            std::ifstream file(config_path);
            if (!file) throw std::invalid_argument("cannot read config file " + config_path);
            std::stringstream buffer;
            buffer << file.rdbuf();
            config = parse_config(buffer.str());
        }
        if (const char* env = std::getenv("CIRC_WORKERS"); env && *env)
            config.workers = parse_number<unsigned>("CIRC_WORKERS", env);
        if (format_opt->count()) config.output_format = format;
        if (workers_opt->count()) config.workers = workers;
        if (cutoff_opt->count()) config.oracle_cutoff = oracle_cutoff;
        if (seed_opt->count()) config.seed = seed;
        validate(config);

        Invocation inv(config, out, err);
        const Mode mode = parse_mode(mode_text);
        if (n != 0 && n < 2) throw std::invalid_argument("modulus must be at least 2");

        if (*key) return cmd_key(inv, n, set_a, mode, close, partition);
        if (*iso) return cmd_iso(inv, n, set_a, set_b, mode, close, oracle);
        if (*ci) return cmd_ci(inv, n, set_a, mode, close);
        if (*classify) {
            if (m < 1) throw std::invalid_argument("valency must be positive");
            return finish_reports(inv, {is_m_group(n, m, mode, inv.sweep())}, dump_path);
        }
        if (*verify) {
            if (n_max < 2 || m_max < 1) throw std::invalid_argument("--n-max must be >= 2 and --m-max >= 1");
            int code = finish_reports(inv, verify_theorems(n_max, m_max, mode, inv.sweep()), dump_path);
            if (samples > 0 && oracle_samples(inv, n_max, mode, samples) != exit_ok) code = exit_disagreement;
            return code;
        }
        if (*witness) return cmd_witness(inv, n, mode);
    } catch (const OracleCutoffExceeded& e) {
        err << e.what() << "\n";
        return exit_refusal;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_usage;
}

}  // namespace circ::cli
