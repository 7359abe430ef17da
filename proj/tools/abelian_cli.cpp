#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abelian/construct.hpp"
#include "abelian/io.hpp"
#include "abelian/oracle.hpp"
#include "abelian/parse.hpp"
#include "abelian/tables.hpp"

using namespace abelian;

namespace {

struct RunConfig {
    int p = 2, m = 1;
    std::vector<int> dims;
    std::string bounds = "bch";
    std::size_t orbit_cap = 20;
    int cap_k = -1;
    int threads = 0;
    std::string format = "json";
    std::uint64_t seed = 1;
    bool timestamp = true;

    json to_json() const {
        return json{{"p", p},         {"m", m},         {"dims", dims},     {"bounds", bounds}, {"orbit_cap", orbit_cap},
                    {"cap_k", cap_k}, {"threads", threads}, {"format", format}, {"seed", seed}};
    }

    void validate() const {
        if (format != "json" && format != "csv" && format != "text")
            throw std::invalid_argument("format must be json, csv or text");
        if (threads < 0) throw std::invalid_argument("threads must be non-negative");
        if (orbit_cap == 0) throw std::invalid_argument("orbit_cap must be positive");
        if (cap_k == 0 || cap_k < -1) throw std::invalid_argument("cap_k must be positive");
        for (int r : dims)
            if (r < 1) throw std::invalid_argument("dims must be positive");
        BoundSet::from_names(bounds);
        if (!dims.empty()) make_context(p, m, dims);
    }
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

void apply_config_file(RunConfig& c, const json& j) {
    try {
        if (j.contains("p")) c.p = j.at("p").get<int>();
        if (j.contains("m")) c.m = j.at("m").get<int>();
        if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<int>>();
        if (j.contains("bounds")) c.bounds = j.at("bounds").get<std::string>();
        if (j.contains("orbit_cap")) c.orbit_cap = j.at("orbit_cap").get<std::size_t>();
        if (j.contains("cap_k")) c.cap_k = j.at("cap_k").get<int>();
        if (j.contains("threads")) c.threads = j.at("threads").get<int>();
        if (j.contains("format")) c.format = j.at("format").get<std::string>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("timestamp")) c.timestamp = j.at("timestamp").get<bool>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad config field: ") + e.what());
    }
}

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const json& v) {
    std::string s = scalar_text(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

void print_text(std::ostream& os, const json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) print_text(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        return;
    }
    os << prefix << ": " << scalar_text(j) << "\n";
}

void emit(const RunConfig& c, const std::string& command, const json& result, const std::vector<std::string>& csv_columns = {},
          const json& csv_rows = json()) {
    json rec{{"command", command}, {"config", c.to_json()}, {"result", result}};
    if (c.timestamp) rec["timestamp"] = utc_now();
    if (c.format == "json") {
        std::cout << rec.dump(2) << "\n";
    } else if (c.format == "text") {
        print_text(std::cout, rec, "");
    } else if (!csv_columns.empty()) {
        for (std::size_t i = 0; i < csv_columns.size(); ++i) std::cout << (i ? "," : "") << csv_columns[i];
        std::cout << "\n";
        for (const auto& row : csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_cell(row[i]);
            std::cout << "\n";
        }
    } else {
        // one row of the scalar result fields
        std::vector<std::string> keys;
        for (auto it = result.begin(); it != result.end(); ++it)
            if (!it.value().is_structured()) keys.push_back(it.key());
        for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
        std::cout << "\n";
        for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << csv_cell(result.at(keys[i]));
        std::cout << "\n";
    }
}

std::vector<MultiIndex> parse_reps(const std::string& text) {
    // "0,3;1,3" or "3"
    std::vector<MultiIndex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_int_list(item));
    return out;
}

struct CodeInput {
    std::string file, reps, roots;
    void add(CLI::App* sub) {
        sub->add_option("--code", file, "code JSON file");
        sub->add_option("--defining", reps, "defining-set orbit representatives, e.g. \"0,3;1,3\"");
        sub->add_option("--roots", roots, "root exponents u_k, e.g. \"1,1\"");
    }
    AbelianCode load(const RunConfig& c) const {
        if (!file.empty()) return code_from_json(read_json_file(file));
        if (c.dims.empty()) throw std::invalid_argument("a code needs --code or --dims with --defining");
        RootSelection rs;
        if (!roots.empty()) rs.u = parse_int_list(roots);
        return AbelianCode::make(c.p, c.m, c.dims, parse_reps(reps), rs);
    }
};

struct MatrixInput {
    std::string file, poly, support;
    CodeInput code;
    void add(CLI::App* sub) {
        sub->add_option("--matrix", file, "matrix JSON file");
        sub->add_option("--poly", poly, "support of a polynomial over L (uses --dims)");
        sub->add_option("--support", support, "support orbit representatives (uses --dims)");
        code.add(sub);
    }
    SupportHypermatrix load(const RunConfig& c) const {
        if (!file.empty()) return matrix_from_json(read_json_file(file));
        if (!poly.empty() || !support.empty()) {
            if (c.dims.empty()) throw std::invalid_argument("--poly and --support need --dims");
            const auto ctx = make_context(c.p, c.m, c.dims);
            if (!poly.empty()) return SupportHypermatrix::of(parse_poly(ctx, c.dims, poly), ctx->q());
            return SupportHypermatrix(c.dims, ctx->q(), orbits_from_reps(parse_reps(support), ctx->q(), c.dims).mask());
        }
        return afforded(code.load(c).defining_set());
    }
};

json involved_json(const std::vector<InvolvedPair>& v) {
    json out = json::array();
    for (const auto& pr : v) out.push_back(json{{"axis", pr.axis}, {"level", pr.level}});
    return out;
}

json report_json(const ApparentReport& r) {
    return json{{"value", r.value}, {"omega", r.omega}, {"epsilon", r.epsilon}, {"delta", r.delta}, {"involved", involved_json(r.involved)}};
}

int thread_default() {
    if (const char* e = std::getenv("ABELIAN_THREADS")) {
        try {
            return std::stoi(e);
        } catch (const std::exception&) {
            throw std::invalid_argument("ABELIAN_THREADS is not an integer");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian code toolkit: apparent distance, B-mad, true-distance constructions"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string config_file, dims_text, p_text, bounds_text, format_text;
    int m_opt = 0, threads_opt = -1, cap_k_opt = 0;
    std::size_t orbit_cap_opt = 0;
    std::uint64_t seed_opt = 0;
    bool no_timestamp = false;
    auto* o_config = app.add_option("--config", config_file, "RunConfig JSON file");
    auto* o_p = app.add_option("--p", p_text, "characteristic");
    auto* o_m = app.add_option("--m", m_opt, "q = p^m");
    auto* o_dims = app.add_option("--dims", dims_text, "lengths r_1,...,r_s");
    auto* o_bounds = app.add_option("--bounds", bounds_text, "ds-bounds, e.g. bch,ht");
    auto* o_orbit_cap = app.add_option("--orbit-cap", orbit_cap_opt, "limit for exhaustive orbit-subset searches");
    auto* o_cap_k = app.add_option("--cap", cap_k_opt, "largest dimension the oracle enumerates");
    auto* o_threads = app.add_option("--threads", threads_opt, "worker threads (default $ABELIAN_THREADS, else hardware)");
    auto* o_format = app.add_option("--format", format_text, "json, csv or text");
    auto* o_seed = app.add_option("--seed", seed_opt, "random seed");
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field");
    (void)o_config;

    // orbit
    auto* s_orbit = app.add_subcommand("orbit", "q-orbit of an index");
    std::uint64_t orbit_q = 0;
    int orbit_n = 0;
    std::string orbit_rep;
    s_orbit->add_option("--q", orbit_q, "q (default p^m)");
    s_orbit->add_option("--n", orbit_n, "length for a single axis (default --dims)");
    s_orbit->add_option("--rep", orbit_rep, "index, e.g. 3 or 1,3")->required();

    // bound
    auto* s_bound = app.add_subcommand("bound", "ds-bounds of a subset of Z_n");
    int bound_n = 0;
    std::string bound_set;
    s_bound->add_option("--n", bound_n, "n")->required();
    s_bound->add_option("--set", bound_set, "members, e.g. 1,2,3,5")->required();

    // apparent / bmad
    auto* s_app = app.add_subcommand("apparent", "apparent distance of a support matrix");
    MatrixInput app_in;
    app_in.add(s_app);
    auto* s_bmad = app.add_subcommand("bmad", "B-mad with trace");
    MatrixInput bmad_in;
    bmad_in.add(s_bmad);
    bool bmad_brute = false;
    s_bmad->add_flag("--check", bmad_brute, "also run the exhaustive submatrix search");

    // code-info
    auto* s_info = app.add_subcommand("code-info", "dimension and apparent distance of a code");
    CodeInput info_in;
    info_in.add(s_info);

    // construct
    auto* s_con = app.add_subcommand("construct", "true-distance code from divisors a, b");
    std::string con_a, con_b;
    int con_h1 = -1, con_h2 = -1;
    bool con_prune = false, con_bch = false;
    s_con->add_option("--a", con_a, "a(X1), e.g. 1+X")->required();
    s_con->add_option("--b", con_b, "b(X2)")->required();
    s_con->add_option("--h1", con_h1, "shift for a (default: least rational)");
    s_con->add_option("--h2", con_h2, "shift for b (default: least rational)");
    s_con->add_flag("--prune", con_prune, "also prune the defining set");
    s_con->add_flag("--bch", con_bch, "also build the containing bivariate BCH code");

    // verify
    auto* s_ver = app.add_subcommand("verify", "prove the true minimum distance via apparent distance");
    CodeInput ver_in;
    ver_in.add(s_ver);

    // bch
    auto* s_bch = app.add_subcommand("bch", "build or recognize a bivariate BCH code");
    std::string bch_gamma, bch_delta, bch_b;
    CodeInput bch_in;
    s_bch->add_option("--gamma", bch_gamma, "axes, e.g. 1,2");
    s_bch->add_option("--delta", bch_delta, "designed distances");
    s_bch->add_option("--b", bch_b, "starting exponents");
    bch_in.add(s_bch);

    // mindist
    auto* s_md = app.add_subcommand("mindist", "brute-force minimum distance");
    CodeInput md_in;
    md_in.add(s_md);
    int md_trials = 0;
    s_md->add_option("--sample", md_trials, "also report a random-sampling upper bound over this many trials");

    // table
    auto* s_tab = app.add_subcommand("table", "regenerate a table and diff against the bundled values");
    int tab_which = 0;
    s_tab->add_option("--which", tab_which, "1, 2, 3 or 4")->required();

    std::string command;
    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            throw std::invalid_argument(std::string("usage: ") + e.what());
        }
        command = app.get_subcommands().front()->get_name();

        cfg.threads = thread_default();
        if (!config_file.empty()) apply_config_file(cfg, read_json_file(config_file));
        if (o_p->count()) cfg.p = std::stoi(p_text);
        if (o_m->count()) cfg.m = m_opt;
        if (o_dims->count()) cfg.dims = parse_int_list(dims_text);
        if (o_bounds->count()) cfg.bounds = bounds_text;
        if (o_orbit_cap->count()) cfg.orbit_cap = orbit_cap_opt;
        if (o_cap_k->count()) cfg.cap_k = cap_k_opt;
        if (o_threads->count()) cfg.threads = threads_opt;
        if (o_format->count()) cfg.format = format_text;
        if (o_seed->count()) cfg.seed = seed_opt;
        if (no_timestamp) cfg.timestamp = false;
        cfg.validate();
        const BoundSet B = BoundSet::from_names(cfg.bounds);

        if (command == "orbit") {
            std::uint64_t q = orbit_q;
            if (!q) {
                q = 1;
                for (int i = 0; i < cfg.m; ++i) q *= static_cast<std::uint64_t>(cfg.p);
            }
            const std::vector<int> dims = orbit_n ? std::vector<int>{orbit_n} : cfg.dims;
            if (dims.empty()) throw std::invalid_argument("orbit needs --n or --dims");
            for (int r : dims)
                if (std::gcd(static_cast<std::uint64_t>(r), q) != 1)
                    throw std::invalid_argument("non-semisimple: gcd(q, " + std::to_string(r) + ") != 1");
            const auto rep = parse_int_list(orbit_rep);
            if (!Box(dims).contains(rep)) throw std::invalid_argument("index out of range");
            const auto seq = orbit_sequence(rep, q, dims);
            json orbit = json::array();
            for (const auto& a : seq) orbit.push_back(dims.size() == 1 ? json(a[0]) : json(a));
            emit(cfg, command, json{{"q", q}, {"dims", dims}, {"orbit", orbit}, {"size", seq.size()}});
        } else if (command == "bound") {
            if (bound_n < 1) throw std::invalid_argument("n must be positive");
            auto members = parse_int_list(bound_set);
            for (int& x : members) x = ((x % bound_n) + bound_n) % bound_n;
            const IndexMask N = mask_of(bound_n, members);
            json per = json::object();
            per["bch"] = bch_optimal(bound_n, N);
            for (const auto& name : B.names())
                if (name == "ht") per["ht"] = ht_optimal(bound_n, N);
            emit(cfg, command, json{{"n", bound_n}, {"set", members}, {"bounds", per}, {"value", B.eval(bound_n, N)}});
        } else if (command == "apparent") {
            const auto M = app_in.load(cfg);
            json res;
            if (M.rank() == 1) {
                res = json{{"value", M.is_zero() ? 0 : vec_apparent(M, B)}};
            } else {
                res = report_json(hyper_apparent(M, B));
            }
            res["matrix"] = to_json(M);
            emit(cfg, command, res);
        } else if (command == "bmad") {
            const auto M = bmad_in.load(cfg);
            const auto tr = bmad(M, B);
            json res{{"result", tr.result}, {"l_prime", tr.l_prime}, {"early_stop", tr.early_stop}, {"trace", to_json(tr)}};
            if (bmad_brute) res["exhaustive"] = bmad_bruteforce(M, B, cfg.orbit_cap);
            emit(cfg, command, res);
        } else if (command == "code-info") {
            const auto C = info_in.load(cfg);
            const auto best = code_apparent(C, B);
            json res{{"code", to_json(C)},
                     {"length", C.defining_set().box().size()},
                     {"dimension", dimension(C)},
                     {"apparent_at_roots", code_apparent_at(C, B)},
                     {"apparent", best.value},
                     {"apparent_best_roots", best.best.u},
                     {"root_classes_scanned", best.scanned}};
            if (C.dims().size() == 2 && dimension(C) > 0 && is_cp_matrix(afforded(C.defining_set()))) {
                const auto pc = product_apparent_check(C, B);
                res["product"] = json{{"delta1", pc.delta1}, {"delta2", pc.delta2}, {"bmad", pc.bmad},
                                      {"product_holds", pc.product_holds}};
            }
            emit(cfg, command, res);
        } else if (command == "construct") {
            if (cfg.dims.size() != 2) throw std::invalid_argument("construct needs --dims r1,r2");
            const auto ctx = make_context(cfg.p, cfg.m, cfg.dims);
            const auto a = parse_poly(ctx, {cfg.dims[0]}, con_a), b = parse_poly(ctx, {cfg.dims[1]}, con_b);
            std::optional<int> h1, h2;
            if (con_h1 >= 0) h1 = con_h1;
            if (con_h2 >= 0) h2 = con_h2;
            const auto con = construct_true_distance_code(a, b, ctx, default_roots(cfg.dims), h1, h2);
            json res{{"h1", con.h1},
                     {"h2", con.h2},
                     {"dimension", dimension(con.code)},
                     {"certificate", to_json(con.cert)},
                     {"code", to_json(con.code)},
                     {"witness", format_poly(con.witness)}};
            if (con_prune) {
                const auto pr = prune_defining_set(con.code, con.witness, B);
                res["pruned"] = json{{"dimension", dimension(pr)}, {"bmad", code_apparent_at(pr, B)}, {"code", to_json(pr)}};
            }
            if (con_bch) {
                const auto spec = bch_spec_from_factors(a, con.h1, b, con.h2);
                const AbelianCode C(ctx, bch_defining_set(spec, ctx->q(), cfg.dims), default_roots(cfg.dims));
                res["bch"] = json{{"spec", to_json(spec)}, {"dimension", dimension(C)}, {"bmad", code_apparent_at(C, B)}};
            }
            emit(cfg, command, res);
        } else if (command == "verify") {
            const auto C = ver_in.load(cfg);
            const auto v = verify_true_distance(C, B, cfg.orbit_cap);
            json res{{"proven", v.proven}, {"bmad", v.trace.result}, {"examined", v.examined}};
            if (v.proven) {
                res["d"] = v.d;
                res["witness"] = to_json(v.witness);
            }
            emit(cfg, command, res);
        } else if (command == "bch") {
            if (!bch_gamma.empty()) {
                if (cfg.dims.empty()) throw std::invalid_argument("bch needs --dims");
                const auto ctx = make_context(cfg.p, cfg.m, cfg.dims);
                const BchSpec spec{parse_int_list(bch_gamma), parse_int_list(bch_delta), parse_int_list(bch_b)};
                const AbelianCode C(ctx, bch_defining_set(spec, ctx->q(), cfg.dims), default_roots(cfg.dims));
                emit(cfg, command,
                     json{{"spec", to_json(spec)}, {"dimension", dimension(C)}, {"bmad", code_apparent_at(C, B)}, {"code", to_json(C)}});
            } else {
                const auto C = bch_in.load(cfg);
                const auto rec = recognize_bivariate_bch(C);
                emit(cfg, command, json{{"bch", rec.has_value()}, {"spec", rec ? to_json(*rec) : json(nullptr)}, {"dimension", dimension(C)}});
            }
        } else if (command == "mindist") {
            const auto C = md_in.load(cfg);
            const auto t0 = std::chrono::steady_clock::now();
            const auto md = min_distance_bruteforce(C, cfg.cap_k, cfg.threads);
            json res{{"d", md.d}, {"dimension", dimension(C)}, {"codewords", md.codewords}, {"witness", to_json(md.witness)}};
            if (md_trials > 0) {
                const auto ub = weight_upper_bound(C, md_trials, cfg.seed);
                res["sampled_upper_bound"] = ub ? json(*ub) : json(nullptr);
                res["sample_trials"] = md_trials;
            }
            if (cfg.timestamp)
                res["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            emit(cfg, command, res);
        } else if (command == "table") {
            const auto t = compute_table(tab_which, B);
            std::vector<std::string> cols = t.input_columns;
            for (const char* c : {"dimension", "delta", "d_certified"}) cols.push_back(c);
            json rows = json::array(), csv = json::array();
            for (const auto& r : t.rows) {
                json obj = json::object();
                json line = json::array();
                for (std::size_t i = 0; i < r.inputs.size(); ++i) {
                    obj[t.input_columns[i]] = r.inputs[i];
                    line.push_back(r.inputs[i]);
                }
                obj["dimension"] = r.dimension;
                obj["delta"] = r.delta;
                obj["d_certified"] = r.d_certified;
                if (!r.note.empty()) obj["note"] = r.note;
                line.push_back(r.dimension);
                line.push_back(r.delta);
                line.push_back(r.d_certified);
                rows.push_back(obj);
                csv.push_back(line);
            }
            json mism = json::array();
            for (const auto& mm : t.mismatches)
                mism.push_back(json{{"row", mm.row}, {"column", mm.column}, {"expected", mm.expected}, {"got", mm.got}});
            emit(cfg, command, json{{"table", t.which}, {"title", t.title}, {"columns", cols}, {"rows", rows}, {"mismatches", mism}}, cols,
                 csv);
            if (!t.ok()) {
                for (const auto& mm : t.mismatches)
                    std::cerr << "table " << t.which << " row " << mm.row << " column " << mm.column << ": expected " << mm.expected
                              << ", got " << mm.got << "\n";
                return 1;
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::string type = "error";
        if (dynamic_cast<const std::invalid_argument*>(&e)) type = "invalid_argument";
        else if (dynamic_cast<const std::logic_error*>(&e)) type = "logic_error";
        else if (dynamic_cast<const std::runtime_error*>(&e)) type = "runtime_error";
        json rec{{"command", command.empty() ? json(nullptr) : json(command)}, {"error", json{{"type", type}, {"message", e.what()}}}};
        std::cout << rec.dump() << "\n";
        return 2;
    }
}
