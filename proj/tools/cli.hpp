#ifndef POWERHAM_TOOLS_CLI_HPP
#define POWERHAM_TOOLS_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powerham/powerham.hpp"

namespace powerham::cli {

inline constexpr std::uint64_t default_seed = 1;

enum Exit { ok = 0, failure = 1, usage = 2 };

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::uint64_t env_seed() {
    if (const char* s = std::getenv("POWERHAM_SEED")) {
        try {
            return std::stoull(s);
        }
        catch (const std::exception&) {
            throw UsageError("POWERHAM_SEED must be a non-negative integer");
        }
    }
    return default_seed;
}

inline std::string read_all(const std::string& path, std::istream& stdin_stream) {
    std::ostringstream buf;
    if (path == "-") {
        buf << stdin_stream.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw UsageError("cannot read '" + path + "'");
    }
    buf << file.rdbuf();
    return buf.str();
}

inline void write_all(const std::string& path, const std::string& text, std::ostream& stdout_stream) {
    if (path == "-") {
        stdout_stream << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw UsageError("cannot write '" + path + "'");
    }
    file << text;
}

inline Graph load_graph(const std::string& path, std::istream& in) {
    return from_text(read_all(path, in));
}

inline Rational rational_arg(const std::string& text, const char* what) {
    try {
        return parse_rational(text);
    }
    catch (const InputError&) {
        throw UsageError(std::string("bad value for ") + what + ": '" + text + "'");
    }
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream s(text);
    while (std::getline(s, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

// One set per line, whitespace-separated vertex ids; '#' starts a comment line.
inline std::vector<VertexSet> parse_sets(const std::string& text, std::size_t n) {
    std::vector<VertexSet> sets;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        VertexSet s(n);
        std::istringstream fields(line);
        long long v = 0;
        while (fields >> v) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                throw InputError("hitting set vertex " + std::to_string(v) + " out of range");
            }
            s.set(static_cast<Vertex>(v));
        }
        if (!fields.eof()) {
            throw InputError("malformed hitting set line: " + line);
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

/*
 * Sweep grammar: semicolon-separated key=list pairs, lists comma-separated.
 * Keys: n, p, k, seeds (count, seeds 0..count-1). Example:
 *     n=40,60;p=3/4;k=1,2;seeds=5
 */
struct Sweep {
    std::vector<std::size_t> n{40};
    std::vector<Rational> p{Rational(3, 4)};
    std::vector<std::size_t> k{2};
    std::size_t seeds = 5;
};

inline Sweep parse_sweep(const std::string& spec) {
    Sweep sweep;
    for (const auto& part : split(spec, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) {
            throw UsageError("sweep entry '" + part + "' lacks '='");
        }
        std::string key = part.substr(0, eq);
        auto values = split(part.substr(eq + 1), ',');
        if (values.empty()) {
            throw UsageError("sweep entry '" + part + "' has no values");
        }
        try {
            if (key == "n") {
                sweep.n.clear();
                for (auto& v : values) {
                    sweep.n.push_back(std::stoul(v));
                }
            }
            else if (key == "p") {
                sweep.p.clear();
                for (auto& v : values) {
                    sweep.p.push_back(parse_rational(v));
                }
            }
            else if (key == "k") {
                sweep.k.clear();
                for (auto& v : values) {
                    sweep.k.push_back(std::stoul(v));
                }
            }
            else if (key == "seeds") {
                sweep.seeds = std::stoul(values.front());
            }
            else {
                throw UsageError("unknown sweep key '" + key + "'");
            }
        }
        catch (const std::logic_error&) {
            throw UsageError("bad sweep value in '" + part + "'");
        }
        catch (const InputError&) {
            throw UsageError("bad sweep value in '" + part + "'");
        }
    }
    return sweep;
}

inline std::string rational_or_dash(const std::optional<Rational>& r) {
    return r ? to_string(*r) : "-";
}

inline void print_report_summary(const StageReport& report, std::ostream& err) {
    for (const auto& attempt : report.attempts) {
        err << "attempt " << attempt.attempt << ": " << (attempt.ok ? "ok" : "failed at " + attempt.failed_stage);
        if (!attempt.message.empty()) {
            err << " (" << attempt.message << ")";
        }
        err << '\n';
        for (const auto& st : attempt.stages) {
            err << "  " << st.name << (st.ok ? "" : " [failed]");
            for (const auto& [key, value] : st.counts) {
                err << ' ' << key << '=' << value;
            }
            err << '\n';
        }
    }
}

inline int run(std::vector<std::string> args, Io io) {
    CLI::App app{"k-th powers of Hamiltonian cycles in dense inseparable graphs"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    // generate
    auto* gen = app.add_subcommand("generate", "emit a graph from a named family");
    std::string family = "gnp";
    std::size_t gen_n = 0;
    std::string gen_mu = "1/2", gen_p = "1/2", gen_parts;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_out = "-";
    gen->add_option("--family", family, "two_cliques|multipartite|gnp|random_bipartite|clique_complement");
    gen->add_option("--n", gen_n, "number of vertices");
    gen->add_option("--mu", gen_mu, "overlap / inseparability parameter");
    gen->add_option("--p", gen_p, "edge probability");
    gen->add_option("--parts", gen_parts, "comma-separated part sizes");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--output", gen_out, "output path or '-'");

    // check
    auto* chk = app.add_subcommand("check", "measure denseness, inseparability, robust matchability");
    std::string chk_in = "-";
    std::optional<std::string> dense, robust;
    bool insep = false, exact = false, heuristic = false;
    std::size_t budget = 2000;
    std::optional<std::uint64_t> chk_seed;
    chk->add_option("input", chk_in, "graph file or '-'");
    chk->add_option("--dense", dense, "d: report the minimal rho");
    chk->add_flag("--insep", insep, "report mu*");
    chk->add_option("--robust", robust, "RHO,D: robust matchability");
    auto* exact_flag = chk->add_flag("--exact", exact, "exhaustive subset scan");
    chk->add_flag("--heuristic", heuristic, "local search bounds")->excludes(exact_flag);
    chk->add_option("--budget", budget, "heuristic budget");
    chk->add_option("--seed", chk_seed, "heuristic seed");

    // find
    auto* fnd = app.add_subcommand("find", "run the absorption pipeline");
    std::string fnd_in = "-", fnd_out = "-";
    std::size_t fnd_k = 2;
    std::optional<std::string> zeta, reservoir, stop, hitting, report_path;
    std::optional<std::size_t> retries;
    std::optional<std::uint64_t> fnd_seed;
    std::string mode = "practical";
    bool timings = false;
    fnd->add_option("input", fnd_in, "graph file or '-'");
    fnd->add_option("-k", fnd_k, "power");
    fnd->add_option("--zeta", zeta, "connectable threshold fraction");
    fnd->add_option("--reservoir", reservoir, "reservoir fraction");
    fnd->add_option("--stop", stop, "cover stop fraction");
    fnd->add_option("--retries", retries, "extra reseeded attempts");
    fnd->add_option("--seed", fnd_seed, "pipeline seed");
    fnd->add_option("--hitting-sets", hitting, "file with one vertex set per line");
    fnd->add_option("--mode", mode, "practical|paper");
    fnd->add_option("--report", report_path, "write the stage report JSON here");
    fnd->add_flag("--timings", timings, "include stage timings in the report");
    fnd->add_option("-o,--output", fnd_out, "certificate output path or '-'");

    // verify
    auto* ver = app.add_subcommand("verify", "check a certificate");
    std::string ver_in = "-", cert_path;
    std::optional<std::size_t> ver_k;
    ver->add_option("input", ver_in, "graph file or '-'");
    ver->add_option("-k", ver_k, "power (defaults to the certificate's)");
    ver->add_option("--certificate", cert_path, "certificate JSON")->required();

    // oracle
    auto* ora = app.add_subcommand("oracle", "exhaustive search (n <= 14)");
    std::string ora_in = "-";
    std::size_t ora_k = 2;
    ora->add_option("input", ora_in, "graph file or '-'");
    ora->add_option("-k", ora_k, "power");

    // constants
    auto* con = app.add_subcommand("constants", "exact constants of the absorption proof");
    std::string con_mu = "1/2", con_d = "1/2";
    std::size_t con_k = 2;
    std::optional<std::string> con_zeta;
    con->add_option("--mu", con_mu, "inseparability");
    con->add_option("--d", con_d, "density");
    con->add_option("-k", con_k, "power");
    con->add_option("--zeta", con_zeta, "connectable fraction for the connecting constants");

    // bench
    auto* ben = app.add_subcommand("bench", "pipeline sweep over seeded random graphs");
    std::string sweep_spec = "n=40;p=3/4;k=2;seeds=5", bench_out = "-";
    ben->add_option("--sweep", sweep_spec, "n=..;p=..;k=..;seeds=..");
    ben->add_option("--out", bench_out, "CSV path or '-'");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    }
    catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return ok;
    }
    catch (const CLI::CallForAllHelp&) {
        io.out << app.help("", CLI::AppFormatMode::All);
        return ok;
    }
    catch (const CLI::ParseError& e) {
        io.err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (*gen) {
            GenSpec spec;
            spec.family = parse_family(family);
            spec.n = gen_n;
            spec.mu = rational_arg(gen_mu, "--mu");
            spec.p = rational_arg(gen_p, "--p");
            spec.seed = gen_seed ? *gen_seed : env_seed();
            for (const auto& part : split(gen_parts, ',')) {
                try {
                    spec.parts.push_back(std::stoul(part));
                }
                catch (const std::logic_error&) {
                    throw UsageError("bad part size '" + part + "'");
                }
            }
            if (spec.family == Family::multipartite) {
                spec.n = 0;
                for (auto s : spec.parts) {
                    spec.n += s;
                }
            }
            Graph g = generate(spec);
            std::string text = "# " + to_json(spec).dump() + "\n" + to_text(g);
            write_all(gen_out, text, io.out);
            if (gen_out != "-") {
                write_all(gen_out + ".json", to_json(spec).dump(2) + "\n", io.out);
            }
            return ok;
        }
        if (*chk) {
            Graph g = load_graph(chk_in, io.in);
            std::uint64_t seed = chk_seed ? *chk_seed : env_seed();
            bool use_exact = exact || (!heuristic && g.size() <= max_exact_scan);
            Json result = Json::object();
            if (dense) {
                Rational d = rational_arg(*dense, "--dense");
                result["dense"] = to_json(use_exact ? denseness_exact(g, d) : denseness_heuristic(g, d, budget, seed));
            }
            if (insep) {
                result["insep"] = to_json(use_exact ? inseparable_exact(g) : inseparable_heuristic(g, budget, seed));
            }
            if (robust) {
                auto parts = split(*robust, ',');
                if (parts.size() != 2) {
                    throw UsageError("--robust expects RHO,D");
                }
                if (heuristic) {
                    throw UsageError("robust matchability has only an exact check");
                }
                result["robust"] = to_json(robustly_matchable_exact(g, rational_arg(parts[0], "--robust"),
                                                                     rational_arg(parts[1], "--robust")));
            }
            if (result.empty()) {
                throw UsageError("check needs at least one of --dense, --insep, --robust");
            }
            if (json) {
                io.out << result.dump(2) << '\n';
            }
            else {
                if (result.contains("dense")) {
                    io.out << "dense d=" << result["dense"]["d"].get<std::string>()
                           << " rho*=" << result["dense"]["rho_star"].get<std::string>() << " ("
                           << result["dense"]["mode"].get<std::string>() << ")\n";
                }
                if (result.contains("insep")) {
                    io.out << "insep mu*=" << result["insep"]["mu_star"].get<std::string>() << " ("
                           << result["insep"]["mode"].get<std::string>() << ")\n";
                }
                if (result.contains("robust")) {
                    io.out << "robust " << (result["robust"]["matchable"].get<bool>() ? "yes" : "no") << '\n';
                }
            }
            return ok;
        }
        if (*fnd) {
            Graph g = load_graph(fnd_in, io.in);
            PipelineConfig cfg;
            cfg.k = fnd_k;
            cfg.seed = fnd_seed ? *fnd_seed : env_seed();
            if (zeta) {
                cfg.zeta = rational_arg(*zeta, "--zeta");
            }
            if (reservoir) {
                cfg.reservoir_fraction = rational_arg(*reservoir, "--reservoir");
            }
            if (stop) {
                cfg.stop_fraction = rational_arg(*stop, "--stop");
            }
            if (retries) {
                cfg.retries = *retries;
            }
            if (mode == "paper") {
                cfg.mode = PipelineMode::paper_constants;
            }
            else if (mode != "practical") {
                throw UsageError("--mode must be practical or paper");
            }
            PipelineResult result;
            if (hitting) {
                auto sets = parse_sets(read_all(*hitting, io.in), g.size());
                result = find_with_hitting_sets(g, cfg, sets);
            }
            else {
                result = find_hamiltonian_power(g, cfg);
            }
            Json report = to_json(result.report, timings);
            if (report_path) {
                write_all(*report_path, report.dump(2) + "\n", io.out);
            }
            if (json) {
                Json full{{"certificate", result.certificate ? to_json(*result.certificate) : Json(nullptr)},
                          {"report", report}};
                if (hitting) {
                    full["set_tallies"] = result.set_tallies;
                }
                write_all(fnd_out, full.dump(2) + "\n", io.out);
            }
            else if (result.certificate) {
                write_all(fnd_out, to_json(*result.certificate).dump() + "\n", io.out);
                if (hitting) {
                    io.err << "set tallies:";
                    for (auto t : result.set_tallies) {
                        io.err << ' ' << t;
                    }
                    io.err << '\n';
                }
            }
            if (!result.certificate) {
                if (!json) {
                    print_report_summary(result.report, io.err);
                }
                io.err << "no certificate: failed at " << result.report.failed_stage << " ("
                       << result.report.message << ")\n";
                return failure;
            }
            return ok;
        }
        if (*ver) {
            Graph g = load_graph(ver_in, io.in);
            Json j;
            try {
                j = Json::parse(read_all(cert_path, io.in));
            }
            catch (const nlohmann::json::parse_error& e) {
                throw InputError(std::string("certificate is not JSON: ") + e.what());
            }
            Certificate cert = certificate_from_json(j.contains("certificate") ? j["certificate"] : j);
            if (ver_k) {
                cert.k = *ver_k;
            }
            Verdict verdict = verify(g, cert);
            if (json) {
                Json out{{"valid", verdict.ok}};
                out["violation"] = verdict.violation
                                       ? Json::array({verdict.violation->first, verdict.violation->second})
                                       : Json(nullptr);
                io.out << out.dump() << '\n';
            }
            else if (verdict.ok) {
                io.out << "valid\n";
            }
            else {
                io.out << "invalid: " << verdict.violation->first << ' ' << verdict.violation->second
                       << " not adjacent\n";
            }
            return verdict.ok ? ok : failure;
        }
        if (*ora) {
            Graph g = load_graph(ora_in, io.in);
            auto cert = brute_force_oracle(g, ora_k);
            if (!cert) {
                io.out << (json ? "null" : "none") << '\n';
                return failure;
            }
            io.out << to_json(*cert).dump() << '\n';
            return ok;
        }
        if (*con) {
            Rational mu = rational_arg(con_mu, "--mu");
            Rational d = rational_arg(con_d, "--d");
            if (con_k == 0) {
                throw UsageError("-k must be >= 1");
            }
            auto path = path_lemma_constants(d, con_k);
            Rational z = con_zeta ? rational_arg(*con_zeta, "--zeta") : path.zeta;
            auto connecting = connecting_constants(d, mu, z, con_k);
            auto main = main_constants(d, mu, con_k);
            if (json) {
                Json out{{"path_lemma", Json{{"rho", to_string(path.rho)}, {"zeta", to_string(path.zeta)}}},
                         {"walks", Json{{"L", connecting.walk.L}, {"c", to_string(connecting.walk.c)}}},
                         {"connecting", to_json(connecting)},
                         {"main", to_json(main)}};
                out["connecting"]["zeta"] = to_string(z);
                io.out << out.dump(2) << '\n';
            }
            else {
                io.out << "path lemma:   rho = " << to_string(path.rho) << "\n"
                       << "              zeta = " << to_string(path.zeta) << "\n"
                       << "walks:        L = " << connecting.walk.L << "\n"
                       << "              c = " << to_string(connecting.walk.c) << "\n"
                       << "connecting:   zeta = " << to_string(z) << "\n"
                       << "              xi_0 = " << connecting.xi[0].str() << "\n"
                       << "              xi = " << connecting.xi_final.str() << "\n"
                       << "              rho = " << connecting.rho.str() << "\n"
                       << "              M = " << connecting.M << "\n"
                       << "absorbing:    zeta = " << to_string(main.absorbing.zeta) << "\n"
                       << "              alpha = " << to_string(main.absorbing.alpha) << "\n"
                       << "              M = " << main.absorbing.inner.M << "\n"
                       << "main:         zeta_C = " << to_string(main.zeta_connect) << "\n"
                       << "              rho = " << main.rho.str() << "\n"
                       << "              reservoir p = " << to_string(main.reservoir_p) << "\n"
                       << "              log2 n0 = " << main.log2_n0 << "\n";
            }
            return ok;
        }
        if (*ben) {
            Sweep sweep = parse_sweep(sweep_spec);
            static const char* stage_names[] = {"absorbing_path", "reservoir", "cover", "connect", "absorb"};
            std::ostringstream csv;
            csv << "n,p,k,seed,success,attempts,failed_stage";
            for (auto* name : stage_names) {
                csv << ',' << name << "_ms";
            }
            csv << '\n';
            for (auto n : sweep.n) {
                for (const auto& p : sweep.p) {
                    for (auto k : sweep.k) {
                        for (std::size_t s = 0; s < sweep.seeds; ++s) {
                            Graph g = gnp(n, p, s);
                            PipelineConfig cfg;
                            cfg.k = k;
                            cfg.seed = s;
                            auto result = find_hamiltonian_power(g, cfg);
                            std::map<std::string, double> ms;
                            for (const auto& attempt : result.report.attempts) {
                                for (const auto& st : attempt.stages) {
                                    ms[st.name] += st.millis;
                                }
                            }
                            csv << n << ',' << to_string(p) << ',' << k << ',' << s << ','
                                << (result.certificate ? 1 : 0) << ',' << result.report.attempts.size() << ','
                                << result.report.failed_stage;
                            for (auto* name : stage_names) {
                                csv << ',' << ms[name];
                            }
                            csv << '\n';
                        }
                    }
                }
            }
            write_all(bench_out, csv.str(), io.out);
            return ok;
        }
    }
    catch (const UsageError& e) {
        io.err << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const InputError& e) {
        io.err << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const ConfigError& e) {
        io.err << "error: " << e.what() << '\n';
        return failure;
    }
    catch (const SizeError& e) {
        io.err << "error: " << e.what() << '\n';
        return usage;
    }
    catch (const Error& e) {
        io.err << "error: " << e.what() << '\n';
        return failure;
    }
    return usage;
}

}

#endif /* POWERHAM_TOOLS_CLI_HPP */
