// Command-line front end: exact counts of p-adic field extensions and their
// isomorphism classes, finite-chain-ring class counts, brute-force subgroup
// oracles, table generation, and the cross-validation suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "padic/chainrings.hpp"
#include "padic/classes.hpp"
#include "padic/io.hpp"
#include "padic/oracle.hpp"
#include "padic/validate.hpp"

namespace {

using nlohmann::json;
using namespace padic;

constexpr int kExitUnsupported = 2;
constexpr int kExitAssumptions = 3;
constexpr int kExitParse = 4;
constexpr int kExitMismatch = 5;

struct FieldArgs {
    std::int64_t p = 2;
    std::int64_t f1 = 1;
    std::int64_t e1 = 1;
    std::int64_t e_p = 0;  // 0 = not supplied
    std::int64_t f_p = 0;

    BaseField build() const {
        std::optional<std::int64_t> ep, fp;
        if (e_p > 0) ep = e_p;
        if (f_p > 0) fp = f_p;
        return make_base_field(Int(p), f1, e1, ep, fp);
    }
};

void add_field_flags(CLI::App* cmd, FieldArgs& args) {
    cmd->add_option("--p", args.p, "prime p")->required();
    cmd->add_option("--f1", args.f1, "residue degree of F over Q_p");
    cmd->add_option("--e1", args.e1, "ramification index of F over Q_p");
    cmd->add_option("--ep", args.e_p, "ramification index of F(zeta_p)/F (required if e1 > 1)");
    cmd->add_option("--fp", args.f_p, "residue degree of F(zeta_p)/F (required if e1 > 1)");
}

json params_json(const FieldArgs& fa, std::int64_t f, std::int64_t e) {
    return json{{"p", fa.p}, {"f1", fa.f1}, {"e1", fa.e1}, {"f", f}, {"e", e}};
}

// Runs a command body, mapping library errors to the documented exit codes
// and emitting a machine-readable reason in json mode.
int run_guarded(const std::string& format, const std::function<int()>& body) {
    std::string reason;
    int code = 0;
    try {
        return body();
    } catch (const UnsupportedCase& e) {
        reason = e.what();
        code = kExitUnsupported;
    } catch (const AssumptionsViolated& e) {
        reason = e.what();
        code = kExitAssumptions;
    } catch (const CyclotomicDataRequired& e) {
        reason = e.what();
        code = kExitAssumptions;
    } catch (const ReferenceParseError& e) {
        reason = e.what();
        code = kExitParse;
    } catch (const Error& e) {
        reason = e.what();
        code = 1;
    }
    if (format == "json")
        std::cout << json{{"error", reason}, {"exit_code", code}}.dump() << "\n";
    else
        std::cerr << "error: " << reason << "\n";
    return code;
}

int cmd_classes(const FieldArgs& fa, std::int64_t f, std::int64_t e, const std::string& format) {
    return run_guarded(format, [&] {
        const CountReport r = count_classes(fa.build(), f, e);
        if (format == "json") {
            std::cout << json{{"params", params_json(fa, f, e)},
                              {"count", r.count.str()},
                              {"method", r.method},
                              {"diagnostics", r.diagnostics}}
                             .dump()
                      << "\n";
        } else if (format == "csv") {
            std::cout << "p,f1,e1,f,e,iso_classes,method\n"
                      << fa.p << ',' << fa.f1 << ',' << fa.e1 << ',' << f << ',' << e << ','
                      << r.count.str() << ',' << r.method << "\n";
        } else {
            std::cout << r.count.str() << "\n";
            std::cout << "method: " << r.method << "\n";
            if (!r.diagnostics.empty()) std::cout << "diagnostics: " << r.diagnostics << "\n";
        }
        return 0;
    });
}

int cmd_mass(const FieldArgs& fa, std::int64_t f, std::int64_t e, const std::string& format) {
    return run_guarded(format, [&] {
        const MassCount m = mass_count(fa.build(), f, e);
        if (format == "json")
            std::cout << json{{"params", params_json(fa, f, e)},
                              {"count", m.count.str()},
                              {"N", m.N.str()}}
                             .dump()
                      << "\n";
        else
            std::cout << m.count.str() << "\n";
        return 0;
    });
}

int cmd_tame_detail(const FieldArgs& fa, std::int64_t f, std::int64_t e,
                    const std::string& format) {
    return run_guarded(format, [&] {
        const BaseField F = fa.build();
        json rows = json::array();
        std::cout << (format == "json" ? "" : "h,b,c_h,u,m_h,v_h,aut_order\n");
        for (std::int64_t h = 0; h < e; ++h) {
            const TameData d = tame_data(F, f, e, h);
            if (format == "json")
                rows.push_back(json{{"h", h},
                                    {"b", d.b.str()},
                                    {"c_h", d.c_h},
                                    {"u", d.u.str()},
                                    {"m_h", d.m_h.str()},
                                    {"v_h", d.v_h.str()},
                                    {"aut_order", d.aut_order.str()}});
            else
                std::cout << h << ',' << d.b.str() << ',' << d.c_h << ',' << d.u.str() << ','
                          << d.m_h.str() << ',' << d.v_h.str() << ',' << d.aut_order.str() << "\n";
        }
        if (format == "json") std::cout << rows.dump() << "\n";
        return 0;
    });
}

int cmd_wild_detail(const FieldArgs& fa, std::int64_t f, std::int64_t e,
                    const std::string& format) {
    return run_guarded(format, [&] {
        const auto rows = wild_p_detail(fa.build(), f, e);
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back(json{{"h", r.h},
                                   {"i", r.i},
                                   {"j", r.j},
                                   {"t", r.t.str()},
                                   {"o", r.o},
                                   {"omega", r.omega.str()},
                                   {"exponent", r.exponent}});
            std::cout << arr.dump() << "\n";
        } else {
            std::cout << "h,i,j,t,o,omega,exponent\n";
            for (const auto& r : rows)
                std::cout << r.h << ',' << r.i << ',' << r.j << ',' << r.t.str() << ',' << r.o
                          << ',' << r.omega.str() << ',' << r.exponent << "\n";
        }
        return 0;
    });
}

int cmd_wild2_components(const FieldArgs& fa, std::int64_t f, std::int64_t e,
                         const std::string& format) {
    return run_guarded(format, [&] {
        const auto comps = wild2_components(fa.build(), f, e);
        if (format == "json") {
            json arr = json::array();
            for (const auto& c : comps)
                arr.push_back(json{{"d", c.d.str()},
                                   {"phi_d", euler_phi(c.d).str()},
                                   {"n2", c.n2.str()},
                                   {"n1", c.n1.str()},
                                   {"n0", c.n0.str()}});
            std::cout << arr.dump() << "\n";
        } else {
            std::cout << "d,phi_d,n2,n1,n0\n";
            for (const auto& c : comps)
                std::cout << c.d.str() << ',' << euler_phi(c.d).str() << ',' << c.n2.str() << ','
                          << c.n1.str() << ',' << c.n0.str() << "\n";
        }
        return 0;
    });
}

int cmd_chain(std::int64_t p, std::int64_t n, std::int64_t f, std::int64_t e, std::int64_t t,
              const std::string& format) {
    return run_guarded(format, [&] {
        const ChainRingInvariants inv{Int(p), n, f, e, t};
        const CountReport r = chain_count(inv);
        if (format == "json")
            std::cout << json{{"params", json{{"p", p}, {"n", n}, {"f", f}, {"e", e}, {"t", t}}},
                              {"count", r.count.str()},
                              {"method", r.method},
                              {"threshold_met", threshold_met(inv)}}
                             .dump()
                      << "\n";
        else
            std::cout << r.count.str() << "\n";
        return 0;
    });
}

void print_oracle_report(const SubgroupCountReport& r, const std::string& format) {
    const bool p2 = r.index == SubgroupCountReport::Index::PSquared;
    if (format == "json") {
        json obj{{"p", r.p.str()},
                 {"m", r.m},
                 {"n", r.n},
                 {"index", p2 ? "p2" : "p"},
                 {"brute", r.brute_count.str()},
                 {"closed", r.closed_count.str()},
                 {"match", r.match}};
        if (p2) {
            obj["cyclic_quotient"] = r.cyclic_quotient_count.str();
            obj["elementary_quotient"] = r.elementary_quotient_count.str();
        }
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << "p=" << r.p.str() << " m=" << r.m << " n=" << r.n << " index="
                  << (p2 ? "p2" : "p") << " brute=" << r.brute_count.str() << " closed="
                  << r.closed_count.str();
        if (p2)
            std::cout << " cyclic=" << r.cyclic_quotient_count.str() << " elementary="
                      << r.elementary_quotient_count.str();
        std::cout << (r.match ? " MATCH" : " MISMATCH") << "\n";
    }
}

int cmd_oracle(std::int64_t p, std::int64_t m, std::int64_t n, const std::string& index,
               const std::string& format) {
    return run_guarded(format, [&] {
        const SubgroupCountReport r = index == "p2" ? count_invariant_index_p2(Int(p), m, n)
                                                    : count_invariant_index_p(Int(p), m, n);
        print_oracle_report(r, format);
        return r.match ? 0 : 1;
    });
}

int cmd_oracle_sweep(const std::vector<std::int64_t>& p_list, std::int64_t m_max,
                     std::int64_t n_max, const std::string& format) {
    return run_guarded(format, [&] {
        std::vector<Int> primes;
        for (const std::int64_t p : p_list) primes.emplace_back(p);
        const SweepResult result = sweep(primes, m_max, n_max);
        for (const auto& r : result.reports) print_oracle_report(r, format);
        return result.all_match ? 0 : 1;
    });
}

int cmd_table(const FieldArgs& fa, std::int64_t f_max, std::int64_t e_max, bool skip,
              const std::string& format) {
    return run_guarded(format, [&] {
        const auto rows = generate_table(fa.build(), f_max, e_max, skip);
        if (format == "json")
            std::cout << table_to_json(rows).dump() << "\n";
        else
            std::cout << table_to_csv(rows, skip);
        return 0;
    });
}

int cmd_validate(bool tiny, std::int64_t oracle_m, std::int64_t oracle_n,
                 const std::string& fault, const std::string& format) {
    return run_guarded(format, [&] {
        ValidateOptions opts;
        opts.tiny_grid = tiny;
        opts.oracle_m_max = oracle_m;
        opts.oracle_n_max = oracle_n;
        if (fault == "omega-base")
            opts.inject_omega_fault = true;
        else if (!fault.empty())
            throw InvalidArgumentError("unknown fault site: " + fault);
        const ValidationReport report = run_validation(opts);
        if (format == "json") {
            json arr = json::array();
            for (const auto& c : report.checks)
                arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            std::cout << json{{"checks", arr}, {"all_pass", report.all_pass}}.dump() << "\n";
        } else {
            for (const auto& c : report.checks) {
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
                if (!c.detail.empty()) std::cout << " — " << c.detail;
                std::cout << "\n";
            }
            std::cout << (report.all_pass ? "all checks passed" : "FAILURES present") << "\n";
        }
        return report.all_pass ? 0 : 1;
    });
}

int cmd_compare(const std::string& path, const std::string& format) {
    return run_guarded(format, [&] {
        std::ifstream in(path);
        if (!in) throw Error("cannot open reference file: " + path);
        const auto rows = parse_reference_csv(in);
        const CompareResult result = compare_reference(rows);
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : result.rows)
                arr.push_back(json{{"line", r.row.line},
                                   {"p", r.row.p.str()},
                                   {"f", r.row.f},
                                   {"e", r.row.e},
                                   {"matched", r.matched},
                                   {"computed", r.computed_valid ? r.computed.str() : ""},
                                   {"note", r.note}});
            std::cout << json{{"rows", arr}, {"all_match", result.all_match}}.dump() << "\n";
        } else {
            for (const auto& r : result.rows) {
                std::cout << (r.matched ? "MATCH    " : "MISMATCH ") << "line " << r.row.line
                          << ": p=" << r.row.p.str() << " f1=" << r.row.f1 << " e1=" << r.row.e1
                          << " f=" << r.row.f << " e=" << r.row.e;
                if (!r.note.empty()) std::cout << " (" << r.note << ")";
                std::cout << "\n";
            }
        }
        return result.all_match ? 0 : kExitMismatch;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of p-adic field extensions, their isomorphism classes, and finite commutative chain rings"};
    app.require_subcommand(1);
    std::string format = "text";

    FieldArgs fa;
    std::int64_t f = 1, e = 1;

    auto* classes = app.add_subcommand("classes", "isomorphism classes of extensions of F with residue degree f and ramification index e");
    add_field_flags(classes, fa);
    classes->add_option("--f", f, "residue degree")->required();
    classes->add_option("--e", e, "ramification index")->required();
    classes->add_option("--format", format, "text|json|csv");

    auto* mass = app.add_subcommand("mass", "number of such extensions inside a fixed algebraic closure");
    add_field_flags(mass, fa);
    mass->add_option("--f", f, "residue degree")->required();
    mass->add_option("--e", e, "ramification index")->required();
    mass->add_option("--format", format, "text|json");

    auto* tame_detail_cmd = app.add_subcommand("tame-detail", "per-h invariants of the tame fields K_h");
    add_field_flags(tame_detail_cmd, fa);
    tame_detail_cmd->add_option("--f", f, "residue degree")->required();
    tame_detail_cmd->add_option("--e", e, "tame ramification index")->required();
    tame_detail_cmd->add_option("--format", format, "text|json");

    auto* wild_detail_cmd = app.add_subcommand("wild-detail", "per-(h,i,j) table of t, o, omega for p||e");
    add_field_flags(wild_detail_cmd, fa);
    wild_detail_cmd->add_option("--f", f, "residue degree")->required();
    wild_detail_cmd->add_option("--e", e, "ramification index with p||e")->required();
    wild_detail_cmd->add_option("--format", format, "text|json");

    auto* wild2_cmd = app.add_subcommand("wild2-components", "per-divisor component counts n2, n1, n0 for p^2||e");
    add_field_flags(wild2_cmd, fa);
    wild2_cmd->add_option("--f", f, "residue degree")->required();
    wild2_cmd->add_option("--e", e, "ramification index with p^2||e")->required();
    wild2_cmd->add_option("--format", format, "text|json");

    std::int64_t chain_p = 2, chain_n = 2, chain_f = 1, chain_e = 1, chain_t = 1;
    auto* chain = app.add_subcommand("chain-rings", "isomorphism classes of finite commutative chain rings with invariants (p,n,f,e,t)");
    chain->add_option("--p", chain_p, "prime")->required();
    chain->add_option("--n", chain_n, "characteristic exponent")->required();
    chain->add_option("--f", chain_f, "residue field rank")->required();
    chain->add_option("--e", chain_e, "ramification index")->required();
    chain->add_option("--t", chain_t, "top length")->required();
    chain->add_option("--format", format, "text|json");

    std::int64_t op = 2, om = 1, on = 1;
    std::string oindex = "p";
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force vs closed-form invariant-subgroup count");
    oracle_cmd->add_option("--p", op, "prime")->required();
    oracle_cmd->add_option("--m", om, "block size m of E(m,n)")->required();
    oracle_cmd->add_option("--n", on, "block count n of E(m,n)")->required();
    oracle_cmd->add_option("--index", oindex, "p|p2")->check(CLI::IsMember({"p", "p2"}));
    oracle_cmd->add_option("--format", format, "text|json");

    std::vector<std::int64_t> sweep_ps{2, 3};
    std::int64_t sweep_m = 3, sweep_n = 2;
    auto* sweep_cmd = app.add_subcommand("oracle-sweep", "oracle across a parameter box; nonzero exit on any mismatch");
    sweep_cmd->add_option("--p-list", sweep_ps, "primes to sweep");
    sweep_cmd->add_option("--m-max", sweep_m, "max block size");
    sweep_cmd->add_option("--n-max", sweep_n, "max block count");
    sweep_cmd->add_option("--format", format, "text|json");

    std::int64_t f_max = 2, e_max = 10;
    bool skip_unsupported = false;
    auto* table = app.add_subcommand("table", "mass and class counts over a rectangle of (f, e)");
    add_field_flags(table, fa);
    table->add_option("--f-max", f_max, "max residue degree")->required();
    table->add_option("--e-max", e_max, "max ramification index")->required();
    table->add_flag("--skip-unsupported", skip_unsupported, "emit a status column instead of failing on unsupported rows");
    table->add_option("--format", format, "csv|json");

    bool tiny = false;
    std::int64_t oracle_m_limit = 3, oracle_n_limit = 2;
    std::string fault;
    auto* validate = app.add_subcommand("validate", "run the full cross-validation suite");
    validate->add_flag("--tiny", tiny, "small fast grid");
    validate->add_option("--oracle-limit", oracle_m_limit, "max oracle block size m");
    validate->add_option("--oracle-n-limit", oracle_n_limit, "max oracle block count n");
    validate->add_option("--inject-fault", fault, "test fixture: flip one formula coefficient (site: omega-base)");
    validate->add_option("--format", format, "text|json");

    std::string reference_path;
    auto* compare = app.add_subcommand("compare", "reconcile computed counts against a reference CSV");
    compare->add_option("--reference", reference_path, "CSV with header p,f1,e1,f,e,iso_classes")->required();
    compare->add_option("--format", format, "text|json");

    CLI11_PARSE(app, argc, argv);

    if (classes->parsed()) return cmd_classes(fa, f, e, format);
    if (mass->parsed()) return cmd_mass(fa, f, e, format);
    if (tame_detail_cmd->parsed()) return cmd_tame_detail(fa, f, e, format);
    if (wild_detail_cmd->parsed()) return cmd_wild_detail(fa, f, e, format);
    if (wild2_cmd->parsed()) return cmd_wild2_components(fa, f, e, format);
    if (chain->parsed()) return cmd_chain(chain_p, chain_n, chain_f, chain_e, chain_t, format);
    if (oracle_cmd->parsed()) return cmd_oracle(op, om, on, oindex, format);
    if (sweep_cmd->parsed()) return cmd_oracle_sweep(sweep_ps, sweep_m, sweep_n, format);
    if (table->parsed()) return cmd_table(fa, f_max, e_max, skip_unsupported, format);
    if (validate->parsed()) return cmd_validate(tiny, oracle_m_limit, oracle_n_limit, fault, format);
    if (compare->parsed()) return cmd_compare(reference_path, format);
    return 1;
}
