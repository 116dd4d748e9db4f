// Command line driver: every verification suite and export behind one
// binary, with machine-readable reports.
//
// Exit codes: 0 all checks pass, 1 any check failure, 2 usage error.

#include "uqmn/crystal.hpp"
#include "uqmn/hw_maps.hpp"
#include "uqmn/relations.hpp"
#include "uqmn/straightening.hpp"
#include "uqmn/sym.hpp"
#include "uqmn/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace uqmn;

struct Output {
    std::string format = "text";  // json | csv | text | dot
    std::string path;             // empty = stdout

    void write(const std::string& payload) const {
        if (path.empty()) {
            std::cout << payload;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw CLI::ValidationError("--out", "cannot open " + path);
        out << payload;
    }
};

std::string render_reports(const std::vector<CheckReport>& reports, const std::string& format) {
    if (format == "json") {
        if (reports.size() == 1) return reports[0].to_json().dump(2) + "\n";
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        return arr.dump(2) + "\n";
    }
    std::string s;
    for (const auto& r : reports) s += format == "csv" ? r.to_csv() : r.to_text();
    return s;
}

int reports_exit(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.all_pass()) return 1;
    return 0;
}

void add_output_flags(CLI::App* cmd, Output& out, const std::string& formats) {
    cmd->add_option("--format", out.format, "output format: " + formats)->capture_default_str();
    cmd->add_option("--out", out.path, "write the report to this file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the commuting quantum-group actions on wedge and "
                 "symmetric powers of C^(m x n)"};
    app.set_version_flag("--version", std::string(uqmn::kVersion));
    app.require_subcommand(1);

    int m = 2, n = 2, p = 1, degree = 1, a = 1, b = 1;
    unsigned threads = default_threads();
    std::string suite = "all", kind = "wedge", variant = "generic", tuples = "all",
                weights = "central", emit, q0_text, dump_path;
    Output out;

    auto add_mn = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "rows of the grid")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--n", n, "columns of the grid")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--threads", threads, "worker threads (default: UQMN_THREADS or hardware)");
    };

    CLI::App* verify = app.add_subcommand("verify", "relation suites on one wedge power");
    add_mn(verify);
    verify->add_option("--p", p, "wedge degree")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--suite", suite, "all|left|right|commute|misc|q1")->capture_default_str();
    add_output_flags(verify, out, "json|csv|text");

    CLI::App* commute = app.add_subcommand("commute", "left/right commutation suite");
    add_mn(commute);
    commute->add_option("--p", p, "wedge degree")->required()->check(CLI::NonNegativeNumber);
    add_output_flags(commute, out, "json|csv|text");

    CLI::App* crystal = app.add_subcommand("crystal", "signed-basis closure suite and graph export");
    add_mn(crystal);
    crystal->add_option("--kind", kind, "wedge|sym")->capture_default_str();
    crystal->add_option("--degree", degree, "wedge or sym degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    crystal->add_option("--emit", emit, "emit the crystal graph instead: dot|json");
    add_output_flags(crystal, out, "json|csv|text (reports); dot|json (graphs)");

    CLI::App* rsk = app.add_subcommand("rsk", "insertion-tableau compatibility suite");
    add_mn(rsk);
    rsk->add_option("--kind", kind, "wedge|sym")->capture_default_str();
    rsk->add_option("--degree", degree, "wedge or sym degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_output_flags(rsk, out, "json|csv|text");

    CLI::App* psi = app.add_subcommand("psi", "build a straightening map and verify rank/cokernel");
    add_mn(psi);
    psi->add_option("--a", a, "larger column")->required()->check(CLI::PositiveNumber);
    psi->add_option("--b", b, "smaller column")->required()->check(CLI::PositiveNumber);
    psi->add_option("--variant", variant, "generic|special22")->capture_default_str();
    psi->add_option("--dump", dump_path, "also dump the weight-blocked matrices as JSON here");
    psi->add_option("--q0", q0_text, "with --dump: include the specialization at q0 (e.g. 3/2)");
    add_output_flags(psi, out, "json|csv|text");

    CLI::App* threecol = app.add_subcommand("threecol", "three-column quotient dimensions");
    add_mn(threecol);
    threecol->add_option("--tuples", tuples, "all or a;b;c[,a;b;c...]")->capture_default_str();
    threecol->add_option("--weights", weights, "central|all")->capture_default_str();
    threecol->add_option("--variant", variant, "generic|special22")->capture_default_str();
    add_output_flags(threecol, out, "json|csv|text");

    CLI::App* symc = app.add_subcommand("sym", "symmetric power dimension/confluence/action suite");
    add_mn(symc);
    symc->add_option("--k", degree, "sym degree")->required()->check(CLI::NonNegativeNumber);
    add_output_flags(symc, out, "json|csv|text");

    CLI::App* dims = app.add_subcommand("dims", "wedge decomposition and highest-weight line counts");
    add_mn(dims);
    dims->add_option("--k", degree, "wedge degree")->required()->check(CLI::NonNegativeNumber);
    add_output_flags(dims, out, "json|csv|text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed() || commute->parsed()) {
            if (p > m * n) throw CLI::ValidationError("--p", "p exceeds mn");
            WedgeModel model(m, n, p);
            auto stamp = [&](CheckReport r) {
                r.params.insert(r.params.begin(), {{"m", std::to_string(m)},
                                                   {"n", std::to_string(n)},
                                                   {"p", std::to_string(p)}});
                return r;
            };
            std::vector<CheckReport> reports;
            if (verify->parsed() && (suite == "left" || suite == "all"))
                reports.push_back(stamp(check_uq_relations(model, Side::left, threads)));
            if (verify->parsed() && (suite == "right" || suite == "all"))
                reports.push_back(stamp(check_uq_relations(model, Side::right, threads)));
            if (commute->parsed() || suite == "commute" || suite == "all")
                reports.push_back(stamp(check_commutation(model, threads)));
            if (verify->parsed() && (suite == "misc" || suite == "all"))
                reports.push_back(check_misc_identities(m, n, p, threads));
            if (verify->parsed() && (suite == "q1" || suite == "all"))
                reports.push_back(check_q1_classical(m, n, p, threads));
            if (reports.empty()) throw CLI::ValidationError("--suite", "unknown suite " + suite);
            out.write(render_reports(reports, out.format));
            return reports_exit(reports);
        }

        if (crystal->parsed() || rsk->parsed()) {
            CrystalKind ck = kind == "sym" ? CrystalKind::sym : CrystalKind::wedge;
            if (kind != "sym" && kind != "wedge")
                throw CLI::ValidationError("--kind", "unknown kind " + kind);
            if (ck == CrystalKind::wedge && degree > m * n)
                throw CLI::ValidationError("--degree", "degree exceeds mn");
            if (crystal->parsed() && !emit.empty()) {
                CrystalGraph g = crystal_graph(ck, m, n, degree);
                if (emit == "dot")
                    out.write(crystal_graph_dot(g));
                else if (emit == "json")
                    out.write(crystal_graph_json(g).dump(2) + "\n");
                else
                    throw CLI::ValidationError("--emit", "unknown graph format " + emit);
                return 0;
            }
            CheckReport rep = crystal->parsed() ? verify_bicrystal_closure(ck, m, n, degree)
                                                : verify_rsk_compatibility(ck, m, n, degree);
            out.write(render_reports({rep}, out.format));
            return rep.all_pass() ? 0 : 1;
        }

        if (psi->parsed()) {
            PsiVariant pv = variant == "special22" ? PsiVariant::special22 : PsiVariant::generic;
            if (variant != "special22" && variant != "generic")
                throw CLI::ValidationError("--variant", "unknown variant " + variant);
            if (!(a >= b && b >= 1 && a + 1 <= m * n))
                throw CLI::ValidationError("--a", "need a >= b >= 1 and a+1 <= mn");
            EquivariantMap map = compose_psi_ab(a, b, m, n, pv);
            CheckReport rep;
            rep.suite = "psi";
            rep.params = {{"m", std::to_string(m)},
                          {"n", std::to_string(n)},
                          {"a", std::to_string(a)},
                          {"b", std::to_string(b)},
                          {"variant", variant}};
            size_t src_dim = subsets_lex(m * n, a + 1).size() * subsets_lex(m * n, b - 1).size();
            size_t tgt_dim = subsets_lex(m * n, a).size() * subsets_lex(m * n, b).size();
            size_t rank = map.total_rank();
            rep.add("injective", rank == src_dim,
                    "rank " + std::to_string(rank) + " vs source dim " + std::to_string(src_dim));
            std::vector<int> colpair = {a, b};
            Int oracle = classical_dim(Partition(colpair).conjugate(), m * n);
            rep.add("cokernel.matches_tableau_count", Int(tgt_dim - rank) == oracle,
                    std::to_string(tgt_dim - rank) + " vs " + oracle.str());
            std::string witness;
            rep.add("equivariant", is_equivariant(map, &witness), witness);
            if (!dump_path.empty()) {
                nlohmann::ordered_json dump = map.to_json();
                if (!q0_text.empty()) {
                    Rational q0(q0_text);
                    nlohmann::ordered_json at = nlohmann::ordered_json::object();
                    for (const auto& [w, blk] : map.blocks) {
                        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                        for (size_t r = 0; r < blk.mat.rows; ++r) {
                            nlohmann::ordered_json row = nlohmann::ordered_json::array();
                            for (size_t c = 0; c < blk.mat.cols; ++c)
                                row.push_back(blk.mat.at(r, c).evaluate(q0).str());
                            rows.push_back(row);
                        }
                        at[w.to_string()] = rows;
                    }
                    dump["specialized_at"] = q0.str();
                    dump["specialized_blocks"] = at;
                }
                std::ofstream f(dump_path, std::ios::binary);
                f << dump.dump(2) << "\n";
            }
            out.write(render_reports({rep}, out.format));
            return rep.all_pass() ? 0 : 1;
        }

        if (threecol->parsed()) {
            PsiVariant pv = variant == "special22" ? PsiVariant::special22 : PsiVariant::generic;
            if (variant != "special22" && variant != "generic")
                throw CLI::ValidationError("--variant", "unknown variant " + variant);
            std::vector<QuotientReport> reports;
            bool all_w = weights == "all";
            if (tuples == "all") {
                reports = three_col_suite(m, n, pv, all_w);
            } else {
                size_t pos = 0;
                while (pos < tuples.size()) {
                    size_t end = tuples.find(',', pos);
                    if (end == std::string::npos) end = tuples.size();
                    std::string t = tuples.substr(pos, end - pos);
                    int ta = 0, tb = 0, tc = 0;
                    if (std::sscanf(t.c_str(), "%d;%d;%d", &ta, &tb, &tc) != 3)
                        throw CLI::ValidationError("--tuples", "expected a;b;c");
                    std::optional<BiWeight> w;
                    if (!all_w) w = central_weight(ta + tb + tc, m, n);
                    reports.push_back(three_col_quotient(ta, tb, tc, m, n, w, pv));
                    pos = end + 1;
                }
            }
            std::string payload;
            if (out.format == "json") {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& r : reports) arr.push_back(r.to_json());
                nlohmann::ordered_json j;
                j["suite"] = "threecol";
                j["params"] = {{"m", m}, {"n", n}, {"variant", variant}, {"weights", weights}};
                j["reports"] = arr;
                j["version"] = kVersion;
                payload = j.dump(2) + "\n";
            } else if (out.format == "csv") {
                payload = "tuple,weight,ambient,rank,quotient,oracle,pass\n";
                for (const auto& r : reports) payload += r.csv_row() + "\n";
            } else {
                for (const auto& r : reports)
                    payload += r.tuple_label() + " @ " + r.weight_label + ": ambient " +
                               std::to_string(r.ambient) + ", rank " + std::to_string(r.rank) +
                               ", quotient " + std::to_string(r.quotient) + ", oracle " +
                               r.oracle.str() + " -> " + (r.pass ? "pass" : "FAIL") + "\n";
            }
            out.write(payload);
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }

        if (symc->parsed()) {
            CheckReport rep = sym_dimension_check(degree, m, n, threads);
            out.write(render_reports({rep}, out.format));
            return rep.all_pass() ? 0 : 1;
        }

        if (dims->parsed()) {
            if (degree > m * n) throw CLI::ValidationError("--k", "k exceeds mn");
            CheckReport rep = decomposition_check(degree, m, n);
            out.write(render_reports({rep}, out.format));
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
