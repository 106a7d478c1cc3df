// Command line front end: compute objects, run verification suites, manage
// the fixture store, and dump filling tables.

#include "stablemac/almostsym.hpp"
#include "stablemac/composition.hpp"
#include "stablemac/daha.hpp"
#include "stablemac/fillings.hpp"
#include "stablemac/io.hpp"
#include "stablemac/stablelimit.hpp"
#include "stablemac/symfunc.hpp"
#include "stablemac/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using namespace stablemac;

namespace {

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + out_file);
    f << text << "\n";
}

std::pair<int, int> parse_box(const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--box", "expected lo..hi, e.g. -2..3");
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (lo > hi) throw CLI::ValidationError("--box", "empty box");
    if (lo < -3 || hi > 4) throw CLI::ValidationError("--box", "box capped to [-3, 4]");
    return {lo, hi};
}

// --- fixture store ---

struct FixtureEntry {
    std::string file;
    std::string source;  // provenance header payload
    std::function<std::string()> compute;
};

std::vector<FixtureEntry> fixture_entries() {
    std::vector<FixtureEntry> out;
    auto stable_fix = [](const Composition& mu, const std::string& src) {
        std::string name = "stableE";
        for (int x : mu) name += "_" + std::to_string(x);
        return FixtureEntry{name + ".txt", src,
                            [mu]() { return stable_e(mu).str(); }};
    };
    out.push_back(stable_fix({1}, "PAPER §3.0.1"));
    out.push_back(stable_fix({2, 0}, "PAPER §3.0.1"));
    out.push_back(stable_fix({0, 2}, "PAPER §3.0.1"));
    out.push_back(stable_fix({2, 2}, "PAPER §3.0.1"));
    out.push_back(stable_fix({1, 0, 1}, "DERIVED stable_e"));
    out.push_back(stable_fix({2, 1}, "DERIVED stable_e"));

    auto pair_fix = [](const IndexedPair& p, const std::string& src) {
        std::string name = "pair";
        name += p.mu.empty() ? "_empty" : "";
        for (int x : p.mu) name += "_" + std::to_string(x);
        name += "__";
        name += p.lambda.empty() ? "empty" : "";
        for (int i = 0; i < p.lambda.length(); ++i)
            name += (i ? "_" : "") + std::to_string(p.lambda[i]);
        return FixtureEntry{name + ".txt", src, [p]() {
                                AlmostSym e = stable_e_pair(p);
                                return io::almostsym_hlp_str(e) + "\n" + e.str();
                            }};
    };
    out.push_back(pair_fix({{}, Partition({2})}, "PAPER §4 examples"));
    out.push_back(pair_fix({{0}, Partition({2})}, "PAPER §4 examples"));
    out.push_back(pair_fix({{1}, Partition({1, 1})}, "PAPER §4 examples"));

    auto weight_fix = [](const IndexedPair& p, const std::string& src) {
        std::string name = "weight";
        name += p.mu.empty() ? "_empty" : "";
        for (int x : p.mu) name += "_" + std::to_string(x);
        name += "__";
        name += p.lambda.empty() ? "empty" : "";
        for (int i = 0; i < p.lambda.length(); ++i)
            name += (i ? "_" : "") + std::to_string(p.lambda[i]);
        return FixtureEntry{name + ".txt", src,
                            [p]() { return io::weight_str(pair_weight(p)); }};
    };
    out.push_back(weight_fix({{}, Partition({2})}, "PAPER §4 examples"));
    out.push_back(weight_fix({{1}, Partition({1, 1})}, "PAPER §4 examples"));
    // the (0|2) weight is pinned by direct computation, not by the printed bullet
    out.push_back(weight_fix({{0}, Partition({2})}, "DERIVED limit_y (see verify weights)"));

    auto gamma_fix = [](const Composition& mu) {
        std::string name = "gamma";
        for (int x : mu) name += "_" + std::to_string(x);
        return FixtureEntry{name + ".txt", "DERIVED sigma_tilde/a_function",
                            [mu]() { return gamma_mu(mu).str(); }};
    };
    out.push_back(gamma_fix({0, 2}));
    out.push_back(gamma_fix({0, 1}));
    out.push_back(gamma_fix({1, 0, 2}));
    out.push_back(gamma_fix({2, 0, 1}));

    auto oracle_fix = [](const Composition& mu) {
        std::string name = "oracleE";
        for (int x : mu) name += "_" + std::to_string(x);
        return FixtureEntry{name + ".txt", "DERIVED eigen oracle",
                            [mu]() { return macdonald_e_eigen(mu).str(); }};
    };
    out.push_back(oracle_fix({0, 1}));
    out.push_back(oracle_fix({0, 2}));
    out.push_back(oracle_fix({1, 2}));
    out.push_back(oracle_fix({2, 0, 1}));
    return out;
}

int fixtures_check(const std::string& dir) {
    int bad = 0;
    for (const auto& e : fixture_entries()) {
        fs::path p = fs::path(dir) / e.file;
        std::ifstream f(p, std::ios::binary);
        if (!f) {
            std::cout << "[FAIL] " << e.file << ": missing\n";
            ++bad;
            continue;
        }
        std::stringstream buf;
        buf << f.rdbuf();
        std::string expect = "# source: " + e.source + "\n" + e.compute() + "\n";
        if (buf.str() != expect) {
            std::cout << "[FAIL] " << e.file << ": content drift\n--- stored\n"
                      << buf.str() << "--- computed\n" << expect;
            ++bad;
        } else {
            std::cout << "[pass] " << e.file << "\n";
        }
    }
    return bad == 0 ? 0 : 1;
}

int fixtures_freeze(const std::string& dir) {
    fs::create_directories(dir);
    for (const auto& e : fixture_entries()) {
        fs::path p = fs::path(dir) / e.file;
        std::ofstream f(p, std::ios::binary);
        f << "# source: " << e.source << "\n" << e.compute() << "\n";
        std::cout << "wrote " << p.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonsymmetric Macdonald polynomials, stable limits, and the"
                 " limit Cherednik weight basis"};
    app.require_subcommand(1);

    // ---- compute ----
    auto* compute = app.add_subcommand("compute", "compute one object and print it");
    std::string kind, mu_arg, lambda_arg, format = "text", out_file;
    compute->add_option("kind", kind, "one of E, stableE, pair, A, HLP, weight")->required();
    compute->add_option("--mu", mu_arg, "composition, e.g. 0,2 or 'empty'");
    compute->add_option("--lambda", lambda_arg, "partition, e.g. 1,1 or 'empty'");
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--out", out_file, "write output to a file");
    compute->callback([&]() {
        nlohmann::json j;
        std::string text;
        if (kind == "E") {
            Composition mu = io::parse_composition(mu_arg);
            if (mu.empty()) throw CLI::ValidationError("--mu", "E needs a nonempty composition");
            if (comp_size(mu) > 8 || mu.size() > 5)
                throw CLI::ValidationError("--mu", "capped at length 5, size 8");
            XPoly e = macdonald_e(mu);
            text = e.str();
            j = io::xpoly_json(e);
        } else if (kind == "stableE") {
            Composition mu = io::parse_composition(mu_arg);
            if (comp_size(mu) > 6 || mu.size() > 5)
                throw CLI::ValidationError("--mu", "capped at length 5, size 6");
            AlmostSym e = stable_e(mu);
            text = e.str();
            j = io::almostsym_json(e);
        } else if (kind == "pair") {
            IndexedPair p{io::parse_composition(mu_arg), io::parse_partition(lambda_arg)};
            if (comp_size(p.mu) + p.lambda.size() > 6 || p.mu.size() > 4)
                throw CLI::ValidationError("--mu", "capped at degree 6, length 4");
            AlmostSym e = stable_e_pair(p);
            text = io::almostsym_hlp_str(e);
            j = io::almostsym_json(e);
            j["hlp"] = text;
        } else if (kind == "A") {
            Partition lambda = io::parse_partition(lambda_arg);
            if (lambda.size() > 6) throw CLI::ValidationError("--lambda", "capped at size 6");
            const SymFunc& a = a_function_hlp(lambda);
            text = a.str();
            j = io::symfunc_json(a);
        } else if (kind == "HLP") {
            Partition lambda = io::parse_partition(lambda_arg);
            if (lambda.size() > 8) throw CLI::ValidationError("--lambda", "capped at size 8");
            SymFunc p = hall_littlewood_p(lambda);
            text = p.str();
            j = io::symfunc_json(p);
        } else if (kind == "weight") {
            Composition mu = io::parse_composition(mu_arg);
            std::vector<Qt> w;
            if (!lambda_arg.empty()) {
                w = pair_weight({mu, io::parse_partition(lambda_arg)});
            } else {
                w = weight_alpha_tilde(mu);
            }
            text = io::weight_str(w);
            j = io::weight_json(w);
        } else {
            throw CLI::ValidationError("kind", "unknown kind '" + kind + "'");
        }
        emit(format == "json" ? j.dump(2) : text, out_file);
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, box_arg = "-2..3", vformat = "text", vout;
    std::vector<int> n_list;
    int max_size = -1, max_len = -1, kk = -1, deg = -1, mm = -1, max_r = 3;
    verify->add_option("suite", suite,
                       "daha-relations | oracle-vs-hhl | convergence | eigen | intertwiner | "
                       "projection | gamma | unitriangular | basis | weights")
        ->required();
    verify->add_option("--n", n_list, "ranks for relation checks (default 2 3 4)");
    verify->add_option("--box", box_arg, "Laurent exponent box lo..hi");
    verify->add_option("--max-size", max_size, "composition size bound");
    verify->add_option("--max-len", max_len, "composition length bound");
    verify->add_option("--k", kk, "split bound for basis certificates");
    verify->add_option("--deg", deg, "degree bound");
    verify->add_option("--m", mm, "padding bound for convergence");
    verify->add_option("--r", max_r, "operator index bound for eigen checks");
    verify->add_option("--format", vformat)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", vout, "write report to a file");
    verify->callback([&]() {
        SuiteReport rep;
        auto [lo, hi] = parse_box(box_arg);
        if (suite == "daha-relations") {
            if (n_list.empty()) n_list = {2, 3, 4};
            for (int n : n_list)
                if (n < 2 || n > 4) throw CLI::ValidationError("--n", "n capped to [2,4]");
            rep = verify_daha_relations(n_list, lo, hi);
        } else if (suite == "oracle-vs-hhl") {
            int len = max_len > 0 ? max_len : 4;
            int sz = max_size > 0 ? max_size : 5;
            if (len > 4 || sz > 5) throw CLI::ValidationError("--max-size", "capped at len 4, size 5");
            rep = verify_oracle_vs_fillings(len, sz);
        } else if (suite == "convergence") {
            int m = mm > 0 ? mm : 3;
            if (m > 4) throw CLI::ValidationError("--m", "capped at 4");
            rep = verify_convergence({{2}, {0, 2}, {2, 2}, {1, 0, 1}}, m);
        } else if (suite == "eigen") {
            int len = max_len > 0 ? max_len : 3;
            int sz = max_size > 0 ? max_size : 4;
            if (len > 3 || sz > 4 || max_r > 3)
                throw CLI::ValidationError("--max-size", "capped at len 3, size 4, r 3");
            rep = verify_eigen(len, sz, max_r);
        } else if (suite == "intertwiner") {
            int sz = max_size > 0 ? max_size : 4;
            if (sz > 4) throw CLI::ValidationError("--max-size", "capped at 4");
            rep = verify_intertwiner(sz);
        } else if (suite == "projection") {
            rep = verify_projection(4, 100, 20230815);
        } else if (suite == "gamma") {
            int len = max_len > 0 ? max_len : 3;
            int sz = max_size > 0 ? max_size : 5;
            if (len > 3 || sz > 5) throw CLI::ValidationError("--max-size", "capped at len 3, size 5");
            rep = verify_gamma(len, sz);
        } else if (suite == "unitriangular") {
            int d = deg > 0 ? deg : 6;
            if (d > 6) throw CLI::ValidationError("--deg", "capped at 6");
            rep = verify_unitriangular(d);
        } else if (suite == "basis") {
            std::vector<std::pair<int, int>> cells;
            if (kk >= 0 && deg >= 0) {
                if (kk > 3 || deg > 6 || (kk >= 1 && deg > 4) || (kk >= 3 && deg > 3))
                    throw CLI::ValidationError("--k", "capped at (0,<=6) (1,<=4) (2,<=4) (3,<=3)");
                cells = {{kk, deg}};
            } else {
                for (int d = 1; d <= 6; ++d) cells.push_back({0, d});
                for (int d = 1; d <= 4; ++d) cells.push_back({1, d});
                for (int d = 1; d <= 4; ++d) cells.push_back({2, d});
                for (int d = 1; d <= 3; ++d) cells.push_back({3, d});
            }
            rep = verify_basis(cells);
        } else if (suite == "weights") {
            int len = max_len > 0 ? max_len : 2;
            int d = deg > 0 ? deg : 3;
            if (len > 2 || d > 3) throw CLI::ValidationError("--deg", "capped at len 2, deg 3");
            rep = verify_pair_weights(len, d);
        } else {
            throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");
        }
        emit(vformat == "json" ? rep.to_json().dump(2) : rep.summary(), vout);
        if (!rep.pass()) throw CLI::RuntimeError(1);
    });

    // ---- fixtures ----
    auto* fixtures = app.add_subcommand("fixtures", "check or freeze the fixture store");
    std::string action, fix_dir = "fixtures";
    fixtures->add_option("action", action, "check | freeze")->required();
    fixtures->add_option("--dir", fix_dir, "fixture directory (default fixtures)");
    fixtures->callback([&]() {
        int rc;
        if (action == "check") rc = fixtures_check(fix_dir);
        else if (action == "freeze") rc = fixtures_freeze(fix_dir);
        else throw CLI::ValidationError("action", "expected check or freeze");
        if (rc != 0) throw CLI::RuntimeError(rc);
    });

    // ---- dump-fillings ----
    auto* dump = app.add_subcommand("dump-fillings", "stream non-attacking fillings");
    std::string dmu, dlambda, dformat = "text", dout;
    int alphabet = 0;
    dump->add_option("--mu", dmu, "shape composition")->required();
    dump->add_option("--n", alphabet, "alphabet size (default length of mu)");
    dump->add_option("--lambda", dlambda,
                     "tail-multiplicity constraints: label len(mu)+i used lambda_i times");
    dump->add_option("--format", dformat)->check(CLI::IsMember({"text", "csv"}));
    dump->add_option("--out", dout, "write output to a file");
    dump->callback([&]() {
        Composition mu = io::parse_composition(dmu);
        int n = int(mu.size());
        std::map<int, int> counts;
        Composition shape = mu;
        if (!dlambda.empty()) {
            Partition lambda = io::parse_partition(dlambda);
            shape = comp_pad_zeros(mu, lambda.length());
            for (int i = 0; i < lambda.length(); ++i) counts[n + i + 1] = lambda[i];
            if (alphabet == 0) alphabet = n + lambda.length();
        }
        if (alphabet == 0) alphabet = n;
        if (comp_size(shape) > 8 || int(shape.size()) > 6 || alphabet > 10)
            throw CLI::ValidationError("--mu", "capped at size 8, length 6, alphabet 10");
        std::ostringstream out;
        if (dformat == "csv") out << "cells,maj,coinv,gamma\n";
        enumerate_fillings(shape, alphabet, counts, [&](const Filling& f) {
            if (dformat == "csv") {
                std::string cells;
                for (size_t i = 0; i < f.labels().size(); ++i) {
                    const auto& [c, r] = f.diagram().cells()[i];
                    if (i) cells += " ";
                    cells += "(" + std::to_string(c) + "," + std::to_string(r) +
                             "):" + std::to_string(f.labels()[i]);
                }
                out << '"' << cells << '"' << "," << f.maj() << "," << f.coinv() << ",\""
                    << f.gamma(false).str() << "\"\n";
            } else {
                out << f.str() << "\n";
            }
        });
        std::string text = out.str();
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(text, dout);
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
