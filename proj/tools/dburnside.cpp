// Command-line driver: bases, products, idempotents, the inflated-sign
// subgroup, orthogonal unit groups, and the verification suites.
//
// Exit codes. 0: success / claim matched. 1: verification suite failure.
// 2: invalid input (bad group, parse error, group mismatch). 3: computed
// unit group does not match the claimed structure. 4: exploratory result
// (unverified classification). 5: time budget exhausted.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <dburnside/serialization.hpp>
#include <dburnside/verify.hpp>

namespace {

using namespace dburnside;

struct GroupArgs {
    std::int64_t p = 2;
    int n = 1;

    CyclicPGroup group() const { return CyclicPGroup(p, n); }
};

void add_group_options(CLI::App* cmd, GroupArgs& args) {
    cmd->add_option("--p", args.p, "prime p of the base group C_{p^n}")
        ->required();
    cmd->add_option("--n", args.n, "exponent n of the base group C_{p^n}")
        ->required();
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

int run_basis(const GroupArgs& args, const std::string& format) {
    const auto g = args.group();
    const auto basis = enumerate_basis(g);
    std::map<int, std::size_t> strata;
    for (const auto& q : basis) ++strata[q.subquotient_exponent()];
    if (format == "json") {
        json jb = json::array(), js = json::object();
        for (const auto& q : basis) jb.push_back({q.i, q.j, q.k, q.l, q.u});
        for (const auto& [t, c] : strata) js[std::to_string(t)] = c;
        std::cout << json{{"p", g.p},
                          {"n", g.n},
                          {"count", basis.size()},
                          {"strata", js},
                          {"basis", jb}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& q : basis) std::cout << to_string(q) << "\n";
        std::cout << "total " << basis.size() << " subgroups of GxG";
        for (const auto& [t, c] : strata)
            std::cout << "  [subquotient p^" << t << ": " << c << "]";
        std::cout << "\n";
    }
    return 0;
}

int run_mul(const GroupArgs& args, const std::string& a_path,
            const std::string& b_path, const std::string& format) {
    const auto g = args.group();
    const RingElement a = ring_element_from_json(load_json(a_path));
    const RingElement b = ring_element_from_json(load_json(b_path));
    if (!(a.group == g) || !(b.group == g))
        throw std::invalid_argument("operand group does not match --p/--n");
    const RingElement prod = a * b;
    if (format == "json")
        std::cout << to_json(prod).dump(2) << "\n";
    else
        std::cout << format_element(prod) << "\n";
    return 0;
}

int run_idempotents(const GroupArgs& args, const std::string& format) {
    const auto g = args.group();
    if (format == "json") {
        json out = json::object();
        for (int m = 0; m <= g.n; ++m) {
            out["j"].push_back(to_json(j_idem(g, m)));
            out["f"].push_back(to_json(f_idem(g, m)));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (int m = 0; m <= g.n; ++m)
            std::cout << "j_" << m << " = " << format_element(j_idem(g, m))
                      << "\n";
        for (int m = 0; m <= g.n; ++m)
            std::cout << "f_" << m << " = " << format_element(f_idem(g, m))
                      << "\n";
    }
    return 0;
}

int run_hdb(const GroupArgs& args, const std::string& format) {
    const auto g = args.group();
    const auto gens = h_db_generators(g);
    const auto group = closure(gens);
    const auto fp = fingerprint(group);
    if (format == "json") {
        json jg = json::array(), je = json::array();
        for (const auto& u : gens) jg.push_back(to_json(u));
        for (const auto& u : group) je.push_back(to_json(u));
        std::cout << json{{"group", {{"p", g.p}, {"n", g.n}}},
                          {"generators", jg},
                          {"elements", je},
                          {"fingerprint", to_json(fp)}}
                         .dump(2)
                  << "\n";
    } else {
        for (std::size_t m = 0; m < gens.size(); ++m)
            std::cout << "dbinf(-Id) at N=" << m << ":  "
                      << format_element(gens[m]) << "\n";
        bool elementary = fp.is_abelian;
        for (const auto& [order, count] : fp.order_statistics)
            if (order > 2) elementary = false;
        std::cout << "closure order " << fp.order
                  << " (elementary abelian: " << (elementary ? "yes" : "no")
                  << ")\n";
    }
    return 0;
}

int run_units(const GroupArgs& args, const SearchConfig& cfg,
              const std::string& format) {
    const auto g = args.group();
    const auto report = orthogonal_unit_group(g, cfg);
    if (format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        std::cout << "orthogonal units of B(C_" << g.order() << ", C_"
                  << g.order() << ")\n";
        std::cout << "  order: " << report.elements.size()
                  << "  (kernel solutions: " << report.kernel.solutions.size()
                  << ", mode " << to_string(report.kernel.mode) << ", bound "
                  << report.kernel.bound_used << ")\n";
        if (report.fingerprint) {
            std::cout << "  fingerprint: order " << report.fingerprint->order
                      << (report.fingerprint->is_abelian ? ", abelian"
                                                         : ", non-abelian");
            if (!report.fingerprint->abelian_invariants.empty()) {
                std::cout << ", invariants [";
                for (std::size_t c = 0;
                     c < report.fingerprint->abelian_invariants.size(); ++c)
                    std::cout << (c ? "," : "")
                              << report.fingerprint->abelian_invariants[c];
                std::cout << "]";
            }
            std::cout << "\n";
        }
        std::cout << "  claimed: "
                  << (report.claimed ? report.claimed->to_string()
                                     : std::string("none (open case)"))
                  << "\n";
        if (report.match)
            std::cout << "  match: " << (*report.match ? "yes" : "NO") << "\n";
        std::cout << "  verified: " << (report.verified ? "yes" : "no")
                  << "  direct product: "
                  << (report.direct_product_verified ? "yes" : "NO") << "\n";
        for (const auto& note : report.notes)
            std::cout << "  note: " << note << "\n";
    }
    if (report.kernel.budget_exceeded) return 5;
    if (!report.verified || !report.claimed) return 4;
    if (report.match && !*report.match) return 3;
    return 0;
}

int run_verify(const GroupArgs& args, const std::string& format) {
    const auto g = args.group();
    const auto report = run_verification(g);
    if (format == "json") {
        json suites = json::array();
        for (const auto& s : report.suites)
            suites.push_back(
                {{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
        std::cout << json{{"group", {{"p", g.p}, {"n", g.n}}},
                          {"suites", suites},
                          {"notes", report.notes},
                          {"passed", report.all_passed()}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& s : report.suites)
            std::cout << (s.passed ? "[PASS] " : "[FAIL] ") << s.name << ": "
                      << s.detail << "\n";
        for (const auto& note : report.notes)
            std::cout << "note: " << note << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

namespace {

int run_app(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for the double Burnside ring of "
                 "cyclic p-groups and its orthogonal units"};
    app.require_subcommand(1);

    GroupArgs args;
    std::string format = "text";
    std::string a_path, b_path;
    SearchConfig cfg;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* basis = app.add_subcommand("basis", "list the Goursat basis of B(G,G)");
    add_group_options(basis, args);
    add_format(basis);

    auto* mul = app.add_subcommand("mul", "multiply two serialized elements");
    add_group_options(mul, args);
    mul->add_option("a", a_path, "left operand (JSON file)")->required();
    mul->add_option("b", b_path, "right operand (JSON file)")->required();
    add_format(mul);

    auto* idem = app.add_subcommand("idempotents", "print j_N and f_N");
    add_group_options(idem, args);
    add_format(idem);

    auto* hdb = app.add_subcommand("hdb", "inflated-sign subgroup H_dB");
    add_group_options(hdb, args);
    add_format(hdb);

    auto* units = app.add_subcommand("units", "enumerate orthogonal units");
    add_group_options(units, args);
    units->add_option("--bound", cfg.coefficient_bound,
                      "coefficient box half-width");
    std::string mode = "pruned";
    units->add_option("--mode", mode, "search mode")
        ->check(CLI::IsMember({"oracle", "pruned"}));
    cfg.time_budget_seconds = 60;  // exploratory searches must terminate
    units->add_option("--time-budget", cfg.time_budget_seconds,
                      "search budget in seconds (0 = unlimited)")
        ->envname("DBURNSIDE_TIME_BUDGET");
    add_format(units);

    auto* verify = app.add_subcommand("verify", "run the property suites");
    add_group_options(verify, args);
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (basis->parsed()) return run_basis(args, format);
        if (mul->parsed()) return run_mul(args, a_path, b_path, format);
        if (idem->parsed()) return run_idempotents(args, format);
        if (hdb->parsed()) return run_hdb(args, format);
        if (units->parsed()) {
            cfg.mode = mode == "oracle" ? SearchMode::oracle : SearchMode::pruned;
            return run_units(args, cfg, format);
        }
        if (verify->parsed()) return run_verify(args, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
