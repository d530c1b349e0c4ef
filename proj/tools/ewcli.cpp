// Command-line front end: construct, classify, scan, refine and export
// two-qutrit entanglement witnesses built on the Gell-Mann basis.
//
// Exit codes: 0 success, 1 validation failure, 2 usage error,
// 3 numerical non-convergence.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ew/feasible.hpp"
#include "ew/symmetry.hpp"
#include "ew/witness_io.hpp"

using namespace ew;

namespace {

struct GlobalOpts {
    unsigned long long seed = 20240901ULL;
    int threads = 1;
    double tol = 1e-12;
    std::string out;
    std::string format = "kv";
};

OptimizerConfig config_of(const GlobalOpts& g) {
    OptimizerConfig cfg;
    cfg.seed = g.seed;
    cfg.threads = g.threads;
    cfg.seesaw_tol = g.tol;
    return cfg;
}

std::ostream& open_sink(const GlobalOpts& g, std::ofstream& file) {
    if (g.out.empty()) return std::cout;
    file.open(g.out);
    if (!file) throw WitnessIoError("cannot open for writing: " + g.out);
    return file;
}

WitnessCoeffs load_preset_or_file(const std::string& spec) {
    for (const auto& n : preset_names())
        if (spec == n) return preset(spec);
    if (spec.rfind("eq10:", 0) == 0) return preset(spec);
    return load_witness(spec);
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int cmd_basis_check(const GlobalOpts& g, bool corrupt) {
    int ortho_pass = 0;
    const int ortho_total = 64;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            cd t = (gellmann(i) * gellmann(j)).trace();
            double want = (i == j) ? 2.0 : 0.0;
            if (corrupt && i == 3 && j == 5) t += 1.0;  // test hook
            if (std::abs(t - want) <= 1e-15) ++ortho_pass;
        }
    std::printf("%d/%d orthogonality checks passed\n", ortho_pass, ortho_total);

    std::mt19937_64 rng(g.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int bloch_pass = 0;
    const int bloch_total = 1000;
    for (int t = 0; t < bloch_total; ++t) {
        Vec3 a;
        for (auto& x : a) x = cd(gauss(rng), gauss(rng));
        a = normalized(a);
        auto b = bloch(a);
        double s = 0.0;
        for (double v : b) s += v * v;
        if (std::abs(s - 4.0 / 3.0) <= 1e-12) ++bloch_pass;
    }
    std::printf("%d/%d Bloch-norm checks passed (4/3 within 1e-12)\n", bloch_pass, bloch_total);

    int eig_pass = 0;
    const int eig_total = 22;
    auto check_vec = [&](int k, double m) {
        Vec3 v = eigenstate(k, m);
        std::vector<cd> mv = gellmann(k).apply({v[0], v[1], v[2]});
        double d = 0.0;
        for (int r = 0; r < 3; ++r) d = std::max(d, std::abs(mv[static_cast<size_t>(r)] - m * v[static_cast<size_t>(r)]));
        if (d <= 1e-12) ++eig_pass;
    };
    for (int k = 1; k <= 7; ++k)
        for (double m : {1.0, -1.0, 0.0}) check_vec(k, m);
    check_vec(8, 1.0 / std::sqrt(3.0));
    (void)eig_total;
    std::printf("%d/22 eigenstate residual checks passed\n", eig_pass);

    bool ok = ortho_pass == ortho_total && bloch_pass == bloch_total && eig_pass == 22;
    if (!ok) {
        std::fprintf(stderr, "basis-check: FAILED\n");
        return 1;
    }
    return 0;
}

int cmd_vertices(const GlobalOpts& g, const std::string& fam_name) {
    const CoordinateFamily& fam = family_by_name(fam_name);
    const auto& cat = vertex_catalog(fam.kind);
    std::ofstream file;
    std::ostream& os = open_sink(g, file);
    os << "index";
    for (const auto& l : fam.labels) {
        os << ",P" << l.i << l.j;
        if (l.sqrt3_scale) os << "s";
    }
    os << ",alpha,beta\n";
    auto vec_str = [](const Vec3& v) {
        std::ostringstream s;
        s << "(";
        for (int i = 0; i < 3; ++i) {
            if (i) s << ";";
            s << fmt17(v[static_cast<size_t>(i)].real());
            if (std::abs(v[static_cast<size_t>(i)].imag()) > 0.0)
                s << (v[static_cast<size_t>(i)].imag() >= 0 ? "+" : "") << fmt17(v[static_cast<size_t>(i)].imag()) << "i";
        }
        s << ")";
        return s.str();
    };
    for (size_t r = 0; r < cat.size(); ++r) {
        os << r;
        for (double c : cat[r].coords) os << "," << fmt17(c);
        os << "," << vec_str(cat[r].state->alpha) << "," << vec_str(cat[r].state->beta) << "\n";
    }
    return 0;
}

void print_report_kv(std::ostream& os, const WitnessCoeffs& w, const ClassificationReport& rep) {
    if (!w.name.empty()) os << "name=" << w.name << "\n";
    os << "min_eigenvalue=" << fmt17(rep.min_eigenvalue) << "\n";
    os << "min_product_expectation=" << fmt17(rep.min_product_expectation) << "\n";
    os << "verdict=" << verdict_name(rep.verdict) << "\n";
    if (rep.certificate) {
        os << "certificate_residual=" << fmt17(rep.certificate->residual) << "\n";
        os << "certificate_min_eig_P=" << fmt17(rep.certificate->min_eig_P) << "\n";
        os << "certificate_min_eig_Q=" << fmt17(rep.certificate->min_eig_Q) << "\n";
    }
    if (!rep.detecting_state.empty()) {
        os << "detecting_state=" << rep.detecting_state << "\n";
        os << "detecting_expectation=" << fmt17(rep.detecting_expectation) << "\n";
    }
}

int cmd_classify(const GlobalOpts& g, const std::string& spec) {
    WitnessCoeffs w = load_preset_or_file(spec);
    ClassificationReport rep = classify(w, config_of(g));
    std::ofstream file;
    std::ostream& os = open_sink(g, file);
    if (g.format == "json") {
        std::ostringstream kv;
        print_report_kv(kv, w, rep);
        // emit the same fields as a flat object
        os << "{\n";
        std::string line;
        std::istringstream in(kv.str());
        bool first = true;
        while (std::getline(in, line)) {
            auto eq = line.find('=');
            if (!first) os << ",\n";
            first = false;
            std::string key = line.substr(0, eq), val = line.substr(eq + 1);
            bool numeric = !val.empty() && (std::isdigit(val[0]) || val[0] == '-');
            os << "  \"" << key << "\": ";
            if (numeric) os << val;
            else os << "\"" << val << "\"";
        }
        os << "\n}\n";
    } else {
        print_report_kv(os, w, rep);
    }
    return 0;
}

int cmd_scan(const GlobalOpts& g, const std::string& spec, const std::string& state_family,
             double a_param, double from, double to, double step) {
    WitnessCoeffs w = load_preset_or_file(spec);
    auto make_state = [&](double p) -> DensityOp {
        if (state_family == "horodecki") return horodecki(p);
        return ppt_family(a_param, p);
    };
    if (state_family != "horodecki" && state_family != "ppt")
        throw StateError("unknown state family: " + state_family);
    if (from >= to || step <= 0.0) throw StateError("scan: empty or inverted range");
    // domain checks
    if (state_family == "horodecki" && (from < 0.0 || to > 5.0))
        throw StateError("scan: horodecki parameter must lie in [0,5]");
    if (state_family == "ppt" && (from < 0.0 || to > a_param / std::sqrt(3.0) + 1e-12))
        throw StateError("scan: ppt-family parameter must lie in [0, a/sqrt(3)]");

    std::ofstream file;
    std::ostream& os = open_sink(g, file);
    std::string pname = state_family == "horodecki" ? "b" : "c";
    os << pname << ",expectation,ppt\n";
    double prev_p = from;
    double prev_v = 0.0;
    bool have_prev = false;
    std::vector<std::pair<double, double>> brackets;
    for (double p = from; p <= to + step * 0.5; p += step) {
        if (p > to) p = to;
        DensityOp rho = make_state(p);
        double v = expectation(w, rho);
        bool ppt = is_ppt(rho).first;
        os << fmt17(p) << "," << fmt17(v) << "," << (ppt ? 1 : 0) << "\n";
        if (have_prev && ((prev_v < 0.0) != (v < 0.0))) brackets.push_back({prev_p, p});
        prev_p = p;
        prev_v = v;
        have_prev = true;
        if (p >= to) break;
    }
    for (auto [lo, hi] : brackets) {
        double flo = expectation(w, make_state(lo));
        while (hi - lo > 1e-9) {
            double mid = 0.5 * (lo + hi);
            double fm = expectation(w, make_state(mid));
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        os << "# root " << pname << "=" << fmt17(0.5 * (lo + hi)) << "\n";
    }
    return 0;
}

int cmd_refine(const GlobalOpts& g, const std::string& seed_name, int max_iters) {
    std::vector<FeasiblePoint> seed;
    if (seed_name == "horodecki-upper") seed = refine_seed_upper();
    else if (seed_name == "horodecki-lower") seed = refine_seed_lower();
    else throw FeasibleError("unknown seed preset: " + seed_name);

    const CoordinateFamily& fam = family(FamilyKind::offdiag_b);
    RefineResult res = refine_facet(std::move(seed), fam, config_of(g), max_iters);

    for (size_t k = 0; k < res.trace.size(); ++k) {
        const auto& it = res.trace[k];
        std::printf("iteration %zu: violation %s removed %d new_point", k, fmt17(it.violation).c_str(),
                    it.removed_index);
        for (double c : it.new_point.coords) std::printf(" %s", fmt17(c).c_str());
        std::printf("\n");
    }
    const char* st = res.status == RefineStatus::tangent  ? "tangent"
                     : res.status == RefineStatus::cycle ? "cycle"
                                                         : "max-iters";
    std::printf("status=%s iterations=%zu\n", st, res.trace.size());
    std::printf("offset=%s\n", fmt17(res.tangent.offset).c_str());
    std::printf("normal=");
    for (double x : res.tangent.normal) std::printf(" %s", fmt17(x).c_str());
    std::printf("\n");
    if (!g.out.empty()) {
        res.witness.name = seed_name;
        save_witness(g.out, res.witness);
        std::printf("witness written to %s\n", g.out.c_str());
    }
    return res.status == RefineStatus::tangent ? 0 : 3;
}

int cmd_orbit(const GlobalOpts& g, const std::string& spec, const std::string& gen_name) {
    WitnessCoeffs w = load_preset_or_file(spec);
    const std::vector<GenKind>* gens = nullptr;
    if (gen_name == "first") gens = &generators_first_category();
    else if (gen_name == "second") gens = &generators_second_category();
    else throw SymmetryError("unknown generator preset: " + gen_name + " (use first|second)");
    Orbit o = orbit(w, *gens);
    std::printf("orbit size=%zu\n", o.members.size());
    if (!g.out.empty()) {
        std::filesystem::create_directories(g.out);
        for (size_t k = 0; k < o.members.size(); ++k) {
            char name[64];
            std::snprintf(name, sizeof name, "member_%04zu.kv", k);
            WitnessCoeffs m = o.members[k];
            m.name = (w.name.empty() ? std::string("orbit") : w.name) + "/" + std::to_string(k);
            save_witness((std::filesystem::path(g.out) / name).string(), m);
        }
        std::printf("bundle written to %s\n", g.out.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qutrit entanglement witness toolkit (Gell-Mann basis)"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed (default 20240901)");
    app.add_option("--threads", g.threads, "optimizer threads (default 1)");
    app.add_option("--tol", g.tol, "see-saw convergence tolerance (default 1e-12)");
    app.add_option("--out", g.out, "output file (or directory for orbit bundles)");
    app.add_option("--format", g.format, "output format: kv|json|csv")
        ->check(CLI::IsMember({"kv", "json", "csv"}));

    bool corrupt = false;
    auto* basis = app.add_subcommand("basis-check", "verify the su(3) basis identities");
    basis->add_flag("--self-test-corrupt", corrupt,
                    "inject a deliberate failure (test hook for the nonzero exit path)");

    std::string fam_name;
    auto* vertices = app.add_subcommand(
        "vertices", "emit a vertex catalog as CSV (index, coordinates, generating states)");
    vertices->add_option("family", fam_name, "diag|offdiag-a|offdiag-b")->required();

    std::string classify_spec;
    auto* classify_cmd =
        app.add_subcommand("classify", "classify a witness preset or witness file");
    classify_cmd->add_option("witness", classify_spec, "preset name or file path")->required();

    std::string scan_spec, scan_family = "horodecki";
    double scan_a = 1.0, scan_from = 0.0, scan_to = 5.0, scan_step = 0.01;
    auto* scan_cmd = app.add_subcommand(
        "scan", "CSV of expectation and PPT flag over a state family; roots by bisection to 1e-9");
    scan_cmd->add_option("witness", scan_spec, "preset name or file path")->required();
    scan_cmd->add_option("--state-family", scan_family, "horodecki|ppt (default horodecki)");
    scan_cmd->add_option("--a", scan_a, "ppt-family a parameter (default 1)");
    scan_cmd->add_option("--from", scan_from, "range start (default 0)");
    scan_cmd->add_option("--to", scan_to, "range end (default 5)");
    scan_cmd->add_option("--step", scan_step, "grid step (default 0.01)");

    std::string refine_seed;
    int refine_max_iters = 200;
    auto* refine_cmd =
        app.add_subcommand("refine", "iterative facet refinement from a built-in seed");
    refine_cmd->add_option("seed", refine_seed, "horodecki-upper|horodecki-lower")->required();
    refine_cmd->add_option("--max-iters", refine_max_iters, "iteration cap (default 200)");

    std::string orbit_spec, orbit_gens = "first";
    auto* orbit_cmd = app.add_subcommand("orbit", "symmetry orbit of a witness");
    orbit_cmd->add_option("witness", orbit_spec, "preset name or file path")->required();
    orbit_cmd->add_option("--generators", orbit_gens, "first|second (default first)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (basis->parsed()) return cmd_basis_check(g, corrupt);
        if (vertices->parsed()) return cmd_vertices(g, fam_name);
        if (classify_cmd->parsed()) return cmd_classify(g, classify_spec);
        if (scan_cmd->parsed())
            return cmd_scan(g, scan_spec, scan_family, scan_a, scan_from, scan_to, scan_step);
        if (refine_cmd->parsed()) return cmd_refine(g, refine_seed, refine_max_iters);
        if (orbit_cmd->parsed()) return cmd_orbit(g, orbit_spec, orbit_gens);
    } catch (const OptimizeError& e) {
        std::fprintf(stderr, "non-convergence: %s\n", e.what());
        return 3;
    } catch (const LinalgError& e) {
        std::fprintf(stderr, "non-convergence: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
