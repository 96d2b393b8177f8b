// Command-line front end: construct the two m-ovoid families, machine-check
// the lemma suites behind them, verify arbitrary point sets, classify the
// m-ovoids of desk-scale symplectic spaces, and export incidence systems.
//
// Exit codes: 0 success, 1 verification or lemma failure, 2 usage error,
// 3 empty classification.

#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "movoid/glued.hpp"
#include "movoid/io.hpp"
#include "movoid/pencil.hpp"

namespace fs = std::filesystem;
using namespace movoid;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw usage_error(path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw usage_error(path + " does not hold a JSON object");
    return j;
}

void print_report(const Report& rep) {
    for (const auto& c : rep.checks)
        std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail
                  << "\n";
}

struct VerifyOutcome {
    bool is_ovoid = false;
    json machine;
};

VerifyOutcome verify_pointset(const PolarSpace& W, const std::vector<uint32_t>& indices,
                              bool hyperplane) {
    PointSet X(W, indices);
    auto m = is_m_ovoid(X);
    SpectrumReport spec = spectra(X);
    VerifyOutcome out;
    out.is_ovoid = m.has_value();
    out.machine = json{{"size", X.size()},
                       {"is_m_ovoid", m.has_value()},
                       {"spectra", spectrum_json(spec)}};
    if (m) {
        out.machine["m"] = *m;
        out.machine["hyperplane_check"] = hyperplane ? hyperplane_check(X, *m) : true;
        if (hyperplane && !out.machine["hyperplane_check"].get<bool>()) out.is_ovoid = false;
    }
    std::cout << "points: " << X.size() << "\n";
    if (m)
        std::cout << "m-ovoid: yes, m = " << *m << " (hyperplane two-intersection check "
                  << (out.machine["hyperplane_check"].get<bool>() ? "passed" : "FAILED") << ")\n";
    else
        std::cout << "m-ovoid: no\n";
    std::cout << "contained t.i. lines: " << spec.full_line_count << "\n";
    return out;
}

int run_construct_pencil(int n, uint32_t q, uint32_t mu, int delta, const std::string& out_path,
                         bool as_json) {
    auto t0 = Clock::now();
    PencilConfig cfg =
        delta >= 0
            ? PencilConfig{n, q, static_cast<uint32_t>(delta), mu}
            : PencilConfig::defaults(n, q, mu);
    cfg.validate();
    PencilGeometry g(cfg);
    PointSet X = g.movoid(); // verified against every generator before return
    auto m = is_m_ovoid(X);
    if (!m || !hyperplane_check(X, *m))
        throw construction_error("constructed set failed re-verification");
    json constants{{"n", cfg.n}, {"q", cfg.q}, {"mu", cfg.mu}, {"delta", cfg.delta}};
    json payload = pointset_json(X, "pencil", m);
    payload["construction"] = constants;
    json stamped = stamp(std::move(payload), "construct pencil", constants);
    write_file(out_path, stamped.dump(2) + "\n");
    std::cout << "pencil m-ovoid: n=" << cfg.n << " q=" << cfg.q << " mu=" << cfg.mu
              << " delta=" << cfg.delta << "  ->  " << X.size() << " points, m=" << *m << "\n"
              << "wrote " << out_path << "  (" << elapsed(t0) << "s)\n";
    if (as_json) std::cout << stamped.dump(2) << "\n";
    return 0;
}

int run_construct_glued(uint32_t q, int omega, int gamma, const std::string& out_path,
                        const std::string& group_path, bool as_json) {
    auto t0 = Clock::now();
    GluedConfig cfg = GluedConfig::defaults(q);
    if (omega >= 0) cfg.omega = static_cast<uint32_t>(omega);
    if (gamma >= 0) cfg.gamma = static_cast<uint32_t>(gamma);
    cfg.validate();
    GluedGeometry g(cfg);
    PointSet O = g.movoid();
    auto m = is_m_ovoid(O);
    if (!m || !hyperplane_check(O, *m))
        throw construction_error("constructed set failed re-verification");
    json constants{{"q", cfg.q}, {"omega", cfg.omega}, {"gamma", cfg.gamma},
                   {"t", g.t_generator()}};
    json payload = pointset_json(O, "glued", m);
    payload["construction"] = constants;
    json stamped = stamp(std::move(payload), "construct glued", constants);
    write_file(out_path, stamped.dump(2) + "\n");
    std::cout << "glued m-ovoid: q=" << cfg.q << " omega=" << cfg.omega << " gamma=" << cfg.gamma
              << "  ->  " << O.size() << " points, m=" << *m << "\n"
              << "wrote " << out_path << "  (" << elapsed(t0) << "s)\n";
    if (!group_path.empty()) {
        json perms = json::array();
        for (const auto& p : g.group()) perms.push_back(p);
        json gp{{"format", "movoid.group"},
                {"degree", g.internal_space().size()},
                {"order", g.group().size()},
                {"permutations", std::move(perms)}};
        json gst = stamp(std::move(gp), "construct glued --emit-group", constants);
        write_file(group_path, gst.dump() + "\n");
        std::cout << "wrote group (" << g.group().size() << " permutations) to " << group_path
                  << "\n";
    }
    if (as_json) std::cout << stamped.dump(2) << "\n";
    return 0;
}

int run_check_pencil(int n, uint32_t q, uint32_t mu, int delta, int jobs,
                     const std::string& out_path, bool as_json) {
    auto t0 = Clock::now();
    PencilConfig cfg =
        delta >= 0
            ? PencilConfig{n, q, static_cast<uint32_t>(delta), mu}
            : PencilConfig::defaults(n, q, mu);
    cfg.validate();
    PencilGeometry g(cfg);
    Report rep = lemma_suite_pencil(g, jobs);
    std::cout << "pencil checks for n=" << cfg.n << " q=" << cfg.q << " mu=" << cfg.mu << " ("
              << elapsed(t0) << "s):\n";
    print_report(rep);
    json constants{{"n", cfg.n}, {"q", cfg.q}, {"mu", cfg.mu}, {"delta", cfg.delta}};
    json stamped = stamp(report_json(rep), "check pencil-lemmas", constants);
    if (!out_path.empty()) write_file(out_path, stamped.dump(2) + "\n");
    if (as_json) std::cout << stamped.dump(2) << "\n";
    return rep.all_passed() ? 0 : 1;
}

int run_check_glued(uint32_t q, int omega, int gamma, int jobs, const std::string& out_path,
                    bool as_json) {
    auto t0 = Clock::now();
    GluedConfig cfg = GluedConfig::defaults(q);
    if (omega >= 0) cfg.omega = static_cast<uint32_t>(omega);
    if (gamma >= 0) cfg.gamma = static_cast<uint32_t>(gamma);
    cfg.validate();
    GluedGeometry g(cfg);
    Report rep = lemma_suite_glued(g, jobs);
    std::cout << "glued checks for q=" << cfg.q << " omega=" << cfg.omega
              << " gamma=" << cfg.gamma << " (" << elapsed(t0) << "s):\n";
    print_report(rep);
    json constants{{"q", cfg.q}, {"omega", cfg.omega}, {"gamma", cfg.gamma}};
    json stamped = stamp(report_json(rep), "check glued-lemmas", constants);
    if (!out_path.empty()) write_file(out_path, stamped.dump(2) + "\n");
    if (as_json) std::cout << stamped.dump(2) << "\n";
    return rep.all_passed() ? 0 : 1;
}

int run_verify(const std::string& points_path, std::string space_kind, int q_flag, int n_flag,
               bool as_json) {
    json j = read_json_file(points_path);
    if (space_kind.empty() && j.contains("space")) space_kind = j.at("space").get<std::string>();
    if (space_kind.empty()) space_kind = "standard";
    uint32_t q = q_flag > 0 ? static_cast<uint32_t>(q_flag)
                            : j.value("q", 0u);
    int n = n_flag > 0 ? n_flag : static_cast<int>(j.value("n", 0));
    if (q == 0 || n == 0) throw usage_error("q and n must come from the file or the flags");

    VerifyOutcome out;
    if (space_kind == "glued") {
        GluedConfig cfg = GluedConfig::defaults(q);
        if (j.contains("construction")) {
            cfg.omega = j["construction"].value("omega", cfg.omega);
            cfg.gamma = j["construction"].value("gamma", cfg.gamma);
        }
        GluedGeometry g(cfg);
        out = verify_pointset(g.W(), load_point_indices(j, g.internal_space()), true);
    } else if (space_kind == "standard" || space_kind == "pencil") {
        // the pencil space is the standard symplectic space: its form is the
        // anti-diagonal Gram by construction
        const Field& f = Field::of_order(q);
        ProjectiveSpace S(f, 2 * n + 1);
        PolarSpace W(S, BilinearForm(f, antidiagonal_gram(2 * static_cast<size_t>(n) + 2)));
        out = verify_pointset(W, load_point_indices(j, S), true);
    } else {
        throw usage_error("unknown space kind " + space_kind);
    }
    if (as_json) {
        json stamped = stamp(std::move(out.machine), "verify",
                             json{{"space", space_kind}, {"q", q}, {"n", n}});
        std::cout << stamped.dump(2) << "\n";
    }
    return out.is_ovoid ? 0 : 1;
}

int run_classify(uint32_t q, int n, uint64_t m, bool iso, int jobs, bool heuristic,
                 const std::string& out_dir, bool as_json) {
    auto t0 = Clock::now();
    const Field& f = Field::of_order(q);
    ProjectiveSpace S(f, 2 * n + 1);
    PolarSpace W(S, BilinearForm(f, antidiagonal_gram(2 * static_cast<size_t>(n) + 2)));
    SearchOptions opt;
    opt.jobs = jobs;
    opt.most_constrained = heuristic;
    auto sols = enumerate_solutions(W.incidence(), m, opt);
    double t_search = elapsed(t0);
    std::cout << "W(" << 2 * n + 1 << "," << q << ") m=" << m << ": " << sols.size()
              << " solutions (" << t_search << "s search)\n";

    json constants{{"q", q}, {"n", n}, {"m", m}};
    json summary{{"format", "movoid.classification"},
                 {"q", q},
                 {"n", n},
                 {"m", m},
                 {"solution_count", sols.size()}};

    std::vector<IsoClass> classes;
    if (iso && !sols.empty()) {
        auto t1 = Clock::now();
        PermGroup G = symplectic_group(W);
        std::cout << "symplectic group of order " << G.order << " materialized ("
                  << elapsed(t1) << "s)\n";
        auto t2 = Clock::now();
        classes = isomorphism_classes(sols, G, W);
        std::cout << classes.size() << " isomorphism classes (" << elapsed(t2) << "s):\n";
        uint64_t covered = 0;
        for (const auto& c : classes) {
            std::cout << "  orbit " << c.orbit_size << " x stabilizer " << c.stabilizer_order
                      << " = " << c.orbit_size * c.stabilizer_order << ", contained lines "
                      << c.full_line_count << "\n";
            covered += c.orbit_size;
        }
        if (covered != sols.size())
            throw construction_error("orbit sizes do not add up to the solution count");
        summary["group_order"] = G.order;
        summary["class_count"] = classes.size();
    }

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file((fs::path(out_dir) / "solutions.txt").string(), solutions_text(sols));
        if (iso) {
            json cj = stamp(json{{"format", "movoid.classes"},
                                 {"q", q},
                                 {"n", n},
                                 {"m", m},
                                 {"solution_count", sols.size()},
                                 {"classes", classes_json(classes, W)}},
                            "classify", constants);
            write_file((fs::path(out_dir) / "classes.json").string(), cj.dump(2) + "\n");
        }
        json sj = stamp(summary, "classify", constants);
        write_file((fs::path(out_dir) / "classify.json").string(), sj.dump(2) + "\n");
        std::cout << "wrote " << out_dir << "\n";
    }
    if (as_json) std::cout << stamp(summary, "classify", constants).dump(2) << "\n";
    return sols.empty() ? 3 : 0;
}

int run_export_incidence(uint32_t q, int n, const std::string& format,
                         const std::string& out_path) {
    const Field& f = Field::of_order(q);
    ProjectiveSpace S(f, 2 * n + 1);
    PolarSpace W(S, BilinearForm(f, antidiagonal_gram(2 * static_cast<size_t>(n) + 2)));
    IncidenceSystem sys = W.incidence();
    if (format == "text") {
        write_file(out_path, incidence_text(sys));
    } else if (format == "json") {
        json stamped = stamp(incidence_json(sys, S), "export incidence",
                             json{{"q", q}, {"n", n}});
        write_file(out_path, stamped.dump(2) + "\n");
    } else {
        throw usage_error("format must be text or json");
    }
    std::cout << "wrote " << sys.rows << "x" << sys.cols << " incidence to " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-ovoids of symplectic polar spaces over even-order fields"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a verified m-ovoid");
    construct->require_subcommand(1);
    int c_n = 2, c_delta = -1, c_omega = -1, c_gamma = -1;
    uint32_t c_q = 2, c_mu = 1;
    std::string c_out, c_group_out;
    bool c_json = false;
    auto* cp = construct->add_subcommand("pencil", "elliptic-quadric pencil construction");
    cp->add_option("--n", c_n, "rank parameter, ambient PG(2n+1,q)")->required();
    cp->add_option("--q", c_q, "field order (even)")->required();
    cp->add_option("--mu", c_mu, "pencil parameter, nonzero")->required();
    cp->add_option("--delta", c_delta, "trace-one constant (default: smallest)");
    cp->add_option("--out", c_out, "output point-set file")->required();
    cp->add_flag("--json", c_json, "echo the file payload to stdout");
    auto* cg = construct->add_subcommand("glued", "quadric-plus-orbit construction in W(5,q)");
    cg->add_option("--q", c_q, "field order (even)")->required();
    cg->add_option("--omega", c_omega, "omega encoding (default: smallest)");
    cg->add_option("--gamma", c_gamma, "gamma encoding (default: smallest)");
    cg->add_option("--out", c_out, "output point-set file")->required();
    cg->add_option("--emit-group", c_group_out, "dump the PSL(2,q^2) permutations");
    cg->add_flag("--json", c_json, "echo the file payload to stdout");

    // check
    auto* check = app.add_subcommand("check", "run a lemma suite");
    check->require_subcommand(1);
    int k_n = 2, k_delta = -1, k_omega = -1, k_gamma = -1, k_jobs = 1;
    uint32_t k_q = 2, k_mu = 1;
    std::string k_out;
    bool k_json = false;
    auto* kp = check->add_subcommand("pencil-lemmas", "checks behind the pencil construction");
    kp->add_option("--n", k_n)->required();
    kp->add_option("--q", k_q)->required();
    kp->add_option("--mu", k_mu)->required();
    kp->add_option("--delta", k_delta);
    kp->add_option("--jobs", k_jobs);
    kp->add_option("--out", k_out, "write the JSON report here");
    kp->add_flag("--json", k_json);
    auto* kg = check->add_subcommand("glued-lemmas", "checks behind the glued construction");
    kg->add_option("--q", k_q)->required();
    kg->add_option("--omega", k_omega);
    kg->add_option("--gamma", k_gamma);
    kg->add_option("--jobs", k_jobs);
    kg->add_option("--out", k_out, "write the JSON report here");
    kg->add_flag("--json", k_json);

    // verify
    auto* verify = app.add_subcommand("verify", "verify a point-set file");
    std::string v_points, v_space;
    int v_q = 0, v_n = 0;
    bool v_json = false;
    verify->add_option("--points", v_points, "point-set JSON file")->required();
    verify->add_option("--space", v_space, "standard | pencil | glued (default: from file)");
    verify->add_option("--q", v_q);
    verify->add_option("--n", v_n);
    verify->add_flag("--json", v_json);

    // classify
    auto* classify = app.add_subcommand("classify", "enumerate all m-ovoids exhaustively");
    uint32_t l_q = 2;
    int l_n = 2, l_jobs = 1;
    uint64_t l_m = 3;
    bool l_iso = false, l_heu = false, l_json = false;
    std::string l_out;
    classify->add_option("--q", l_q)->required();
    classify->add_option("--n", l_n)->required();
    classify->add_option("--m", l_m)->required();
    classify->add_flag("--iso", l_iso, "partition the solutions into isomorphism classes");
    classify->add_option("--jobs", l_jobs, "parallel subtree workers");
    classify->add_flag("--heuristic", l_heu, "most-constrained branching (same solution set)");
    classify->add_option("--out", l_out, "output directory");
    classify->add_flag("--json", l_json);

    // export
    auto* exp = app.add_subcommand("export", "export machine-readable geometry");
    exp->require_subcommand(1);
    uint32_t e_q = 2;
    int e_n = 2;
    std::string e_format = "text", e_out;
    auto* ei = exp->add_subcommand("incidence", "point-generator incidence of W(2n+1,q)");
    ei->add_option("--q", e_q)->required();
    ei->add_option("--n", e_n)->required();
    ei->add_option("--format", e_format, "text | json");
    ei->add_option("--out", e_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cp) return run_construct_pencil(c_n, c_q, c_mu, c_delta, c_out, c_json);
        if (*cg) return run_construct_glued(c_q, c_omega, c_gamma, c_out, c_group_out, c_json);
        if (*kp) return run_check_pencil(k_n, k_q, k_mu, k_delta, k_jobs, k_out, k_json);
        if (*kg) return run_check_glued(k_q, k_omega, k_gamma, k_jobs, k_out, k_json);
        if (*verify) return run_verify(v_points, v_space, v_q, v_n, v_json);
        if (*classify) return run_classify(l_q, l_n, l_m, l_iso, l_jobs, l_heu, l_out, l_json);
        if (*ei) return run_export_incidence(e_q, e_n, e_format, e_out);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
