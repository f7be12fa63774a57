// Batch front-end over the library: one subcommand per operation, JSON in and
// out, deterministic for a fixed seed.  Exit codes: 0 success, 2 when a
// search legitimately finds nothing, 1 on any error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <sphlab/json_io.hpp>
#include <sphlab/sphlab.hpp>

namespace {

using namespace sphlab;

struct RunConfig {
    long p = 2;
    int n = 2;
    double tol = 1e-6;
    std::size_t coset_cap = 1'000'000;
    std::size_t candidate_cap = 200'000'000;
    unsigned long seed = 1;
    long j_min = 1;
    long j_max = 16;
    int threads = 1;
    int seeded_sets = 4;
    std::string out;

    std::string in;           // JSON payload path, "-" for stdin
    std::string matrix;       // inline matrix "1,0;1/2,1"
    std::string param = "trivial";
    std::string param_b;
    std::string coweight;
    std::string m1, m2;
    std::string hval;
    std::string points;       // inline diagonal points "0,0,0;1,0,-1"
    std::string js = "1,2,4,8,16,32,64";
    std::string labels;       // inline coweights for convergence-profile
    std::string sigma = "1";
    long m_max = 10;
    std::string verify_path;
    double equiv_tol = 0.0;
    bool emit_reps = false;
    bool exact = false;

    PrimeContext context() const { return PrimeContext(p, n); }
    Limits limits() const {
        Limits l;
        l.coset_cap = coset_cap;
        l.candidate_cap = candidate_cap;
        return l;
    }
};

IntVector parse_int_vector(const std::string& text) {
    IntVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) v.push_back(std::stol(item));
    if (v.empty()) throw SchemaError("expected a comma-separated integer vector");
    return v;
}

RationalMatrix parse_matrix(const std::string& text, int n) {
    RationalMatrix m(n);
    std::stringstream rows(text);
    std::string row;
    int i = 0;
    while (std::getline(rows, row, ';')) {
        if (i >= n) throw SchemaError("matrix has more than " + std::to_string(n) + " rows");
        std::stringstream cols(row);
        std::string cell;
        int j = 0;
        while (std::getline(cols, cell, ',')) {
            if (j >= n) throw SchemaError("matrix row has more than " + std::to_string(n) + " entries");
            m(i, j) = parse_rational(cell);
            ++j;
        }
        if (j != n) throw SchemaError("matrix row needs " + std::to_string(n) + " entries");
        ++i;
    }
    if (i != n) throw SchemaError("matrix needs " + std::to_string(n) + " rows");
    return m;
}

Json load_json(const std::string& path) {
    Json j;
    try {
        if (path == "-") {
            std::cin >> j;
        } else {
            std::ifstream in(path);
            if (!in) throw SchemaError("cannot open " + path);
            in >> j;
        }
    } catch (const Json::parse_error& err) {
        throw SchemaError(std::string("invalid JSON: ") + err.what());
    }
    return j;
}

GroupElement input_group(const RunConfig& cfg) {
    if (!cfg.in.empty()) return group_from_json(load_json(cfg.in));
    if (!cfg.matrix.empty())
        return GroupElement(cfg.context(), parse_matrix(cfg.matrix, cfg.n));
    throw SchemaError("provide --matrix or --in with a group element");
}

// --param accepts: "trivial", "sequence:<j>", "sigma:<rational>" (rank 2),
// "@file.json", or comma-separated coordinates "re" / "re:im" with exact
// rational parts.
SatakeParameter input_param(const RunConfig& cfg, const std::string& text) {
    PrimeContext ctx = cfg.context();
    if (text == "trivial") return SatakeParameter::trivial(ctx);
    if (text.rfind("sequence:", 0) == 0)
        return SatakeParameter::sequence(ctx, std::stol(text.substr(9)));
    if (text.rfind("sigma:", 0) == 0) {
        if (ctx.n != 2) throw SchemaError("sigma parameters are a rank-2 shorthand");
        Rational s = parse_rational(text.substr(6));
        return SatakeParameter(ctx, {ComplexRational{s, 0}, ComplexRational{-s, 0}});
    }
    if (!text.empty() && text.front() == '@') return param_from_json(load_json(text.substr(1)));
    std::vector<ComplexRational> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        ComplexRational c;
        if (colon == std::string::npos) {
            c.re = parse_rational(item);
        } else {
            c.re = parse_rational(item.substr(0, colon));
            c.im = parse_rational(item.substr(colon + 1));
        }
        coords.push_back(std::move(c));
    }
    return SatakeParameter(ctx, std::move(coords));
}

std::vector<GroupElement> input_points(const RunConfig& cfg) {
    PrimeContext ctx = cfg.context();
    std::vector<GroupElement> pts;
    if (!cfg.in.empty()) {
        Json j = load_json(cfg.in);
        if (!j.is_object() || !j.contains("points")) throw SchemaError("expected {points: [...]}");
        for (const Json& pj : j.at("points")) {
            if (pj.is_array() && !pj.empty() && pj.front().is_array()) {
                pts.emplace_back(ctx, matrix_from_json(pj));
            } else if (pj.is_array()) {
                // a bare integer vector means a diagonal power point
                pts.push_back(GroupElement::diagonal_power(ctx, pj.get<IntVector>()));
            } else {
                pts.push_back(group_from_json(pj));
            }
        }
    } else if (!cfg.points.empty()) {
        std::stringstream ss(cfg.points);
        std::string item;
        while (std::getline(ss, item, ';'))
            pts.push_back(GroupElement::diagonal_power(ctx, parse_int_vector(item)));
    }
    if (pts.empty()) throw SchemaError("provide --points or --in with a point list");
    return pts;
}

// Hecke-element input: exact when every coefficient is a rational string or
// integer, complex floating point otherwise.
bool hecke_json_is_exact(const Json& j) {
    if (!j.is_object() || !j.contains("terms")) throw SchemaError("expected hecke element JSON");
    for (const Json& t : j.at("terms")) {
        const Json& c = t.at("coeff");
        if (!(c.is_string() || c.is_number_integer())) return false;
    }
    return true;
}

int emit(const RunConfig& cfg, const Json& doc, int code) {
    std::string text = doc.dump(2) + "\n";
    if (!cfg.out.empty()) {
        std::ofstream out(cfg.out);
        if (!out) throw SchemaError("cannot write " + cfg.out);
        out << text;
    }
    std::cout << text;
    return code;
}

Json histogram_to_json(const CosetList& list) {
    Json h = Json::array();
    for (const auto& [hv, count] : list.inverse_hval_histogram)
        h.push_back(Json{{"hval", hv}, {"count", count}});
    return h;
}

int run_cartan(const RunConfig& cfg) {
    GroupElement g = input_group(cfg);
    CartanForm form = cartan_decompose(g);
    return emit(cfg,
                Json{{"label", coweight_to_json(form.m)},
                     {"u1", matrix_to_json(form.u1.entries())},
                     {"u2", matrix_to_json(form.u2.entries())}},
                0);
}

int run_iwasawa(const RunConfig& cfg) {
    GroupElement g = input_group(cfg);
    IwasawaForm form = iwasawa_decompose(g);
    Json units = Json::array();
    for (const Rational& u : form.hunit) units.push_back(rational_to_json(u));
    return emit(cfg,
                Json{{"hval", form.hval},
                     {"k", matrix_to_json(form.k.entries())},
                     {"hunit", std::move(units)},
                     {"nmat", matrix_to_json(form.nmat)}},
                0);
}

int run_cosets(const RunConfig& cfg) {
    DominantCoweight m(parse_int_vector(cfg.coweight));
    auto list = left_coset_reps(cfg.context(), m, cfg.limits());
    Json doc{{"label", coweight_to_json(m)},
             {"count", list->size()},
             {"inverse_hval_histogram", histogram_to_json(*list)},
             {"delta", rational_to_json(delta_ratio(cfg.context(), m, cfg.limits()))}};
    if (cfg.emit_reps) {
        Json reps = Json::array();
        for (const GroupElement& w : list->reps) reps.push_back(matrix_to_json(w.entries()));
        doc["reps"] = std::move(reps);
    }
    return emit(cfg, doc, 0);
}

int run_convolve(const RunConfig& cfg) {
    if (cfg.in.empty()) throw SchemaError("convolve needs --in with {f, g}");
    Json j = load_json(cfg.in);
    if (!j.is_object() || !j.contains("f") || !j.contains("g"))
        throw SchemaError("expected {f: hecke, g: hecke}");
    if (hecke_json_is_exact(j.at("f")) && hecke_json_is_exact(j.at("g"))) {
        ExactHeckeElement f = exact_hecke_from_json(j.at("f"));
        ExactHeckeElement g = exact_hecke_from_json(j.at("g"));
        return emit(cfg, exact_hecke_to_json(convolve(f, g, cfg.limits())), 0);
    }
    HeckeElement f = hecke_from_json(j.at("f"));
    HeckeElement g = hecke_from_json(j.at("g"));
    return emit(cfg, hecke_to_json(convolve(f, g, cfg.limits())), 0);
}

int run_structure_constants(const RunConfig& cfg) {
    DominantCoweight m1(parse_int_vector(cfg.m1));
    DominantCoweight m2(parse_int_vector(cfg.m2));
    auto constants = structure_constants(cfg.context(), m1, m2, cfg.limits());
    Json terms = Json::array();
    for (const auto& [m3, c] : constants)
        terms.push_back(Json{{"m", coweight_to_json(m3)}, {"value", c.get_str()}});
    return emit(cfg,
                Json{{"m1", coweight_to_json(m1)},
                     {"m2", coweight_to_json(m2)},
                     {"constants", std::move(terms)}},
                0);
}

int run_l1_norm(const RunConfig& cfg) {
    if (cfg.in.empty()) throw SchemaError("l1-norm needs --in with a hecke element");
    Json j = load_json(cfg.in);
    if (hecke_json_is_exact(j)) {
        Rational value = l1_norm(exact_hecke_from_json(j), cfg.limits());
        return emit(cfg, Json{{"value", rational_to_json(value)}}, 0);
    }
    double value = l1_norm(hecke_from_json(j), cfg.limits());
    return emit(cfg, Json{{"value", value}}, 0);
}

int run_alpha(const RunConfig& cfg) {
    SatakeParameter s = input_param(cfg, cfg.param);
    IntVector h = parse_int_vector(cfg.hval);
    return emit(cfg, complex_to_json(alpha_eval(s, h)), 0);
}

int run_omega(const RunConfig& cfg) {
    SatakeParameter s = input_param(cfg, cfg.param);
    SphericalFunction omega(s, cfg.limits());
    DominantCoweight m(parse_int_vector(cfg.coweight));
    std::complex<double> value = omega.eval_label(m);
    Json doc = complex_to_json(value);
    if (cfg.exact) {
        auto exact = omega.eval_label_exact(m);
        doc["exact"] = exact ? rational_to_json(*exact) : Json();
    }
    return emit(cfg, doc, 0);
}

int run_tau(const RunConfig& cfg) {
    if (cfg.in.empty()) throw SchemaError("tau needs --in with a hecke element");
    SatakeParameter s = input_param(cfg, cfg.param);
    SphericalFunction omega(s, cfg.limits());
    Json j = load_json(cfg.in);
    std::complex<double> value;
    if (hecke_json_is_exact(j))
        value = tau_eval(omega, exact_hecke_from_json(j), cfg.limits());
    else
        value = tau_eval(omega, hecke_from_json(j), cfg.limits());
    return emit(cfg, complex_to_json(value), 0);
}

int run_satake(const RunConfig& cfg) {
    if (cfg.in.empty()) throw SchemaError("satake needs --in with an exact hecke element");
    Json j = load_json(cfg.in);
    if (!hecke_json_is_exact(j))
        throw InexactCoefficientError("satake transform needs exact rational coefficients");
    LaurentPolynomial q = satake_transform(exact_hecke_from_json(j), cfg.limits());
    Json doc = laurent_to_json(q);
    doc["symmetric"] = q.symmetric_under_all_permutations();
    return emit(cfg, doc, 0);
}

int run_param_equiv(const RunConfig& cfg) {
    SatakeParameter a = input_param(cfg, cfg.param);
    if (cfg.param_b.empty()) throw SchemaError("param-equiv needs --param-b");
    SatakeParameter b = input_param(cfg, cfg.param_b);
    return emit(cfg, Json{{"equivalent", params_equivalent(a, b, cfg.equiv_tol)}}, 0);
}

int run_star_test(const RunConfig& cfg) {
    SatakeParameter s = input_param(cfg, cfg.param);
    auto witness = is_star_param(s);
    Json doc{{"star", witness.has_value()}};
    doc["witness"] = witness ? Json(*witness) : Json();
    return emit(cfg, doc, 0);
}

int run_gram(const RunConfig& cfg) {
    SatakeParameter s = input_param(cfg, cfg.param);
    SphericalFunction omega(s, cfg.limits());
    std::vector<GroupElement> pts = input_points(cfg);
    ComplexMatrix g = gram_matrix(omega, pts);
    Json rows = Json::array();
    for (const auto& row : g) {
        Json r = Json::array();
        for (const auto& z : row) r.push_back(complex_to_json(z));
        rows.push_back(std::move(r));
    }
    return emit(cfg, Json{{"size", pts.size()}, {"gram", std::move(rows)}}, 0);
}

int run_psd(const RunConfig& cfg) {
    SatakeParameter s = input_param(cfg, cfg.param);
    SphericalFunction omega(s, cfg.limits());
    std::vector<GroupElement> pts = input_points(cfg);
    PsdReport report = psd_check(omega, pts, cfg.tol);
    return emit(cfg, psd_report_to_json(report), 0);
}

int run_find_witness(const RunConfig& cfg) {
    if (!cfg.verify_path.empty()) {
        WitnessCertificate cert = witness_certificate_from_json(load_json(cfg.verify_path));
        double value = 0.0;
        bool ok = verify_witness_certificate(cert, &value, cfg.limits());
        return emit(cfg, Json{{"verified", ok}, {"quadratic_value", value}}, ok ? 0 : 1);
    }
    WitnessSearchConfig wcfg;
    wcfg.j_min = cfg.j_min;
    wcfg.j_max = cfg.j_max;
    wcfg.tol = cfg.tol;
    wcfg.seed = cfg.seed;
    wcfg.threads = cfg.threads;
    wcfg.seeded_sets = cfg.seeded_sets;
    WitnessSearchOutcome outcome = find_nonpd_witness(cfg.context(), wcfg, cfg.limits());
    if (outcome.certificate)
        return emit(cfg, witness_certificate_to_json(*outcome.certificate), 0);
    return emit(cfg,
                Json{{"found", false},
                     {"scanned", outcome.min_eigenvalues.size()},
                     {"min_eigenvalues", outcome.min_eigenvalues}},
                2);
}

int run_unbounded(const RunConfig& cfg) {
    if (!cfg.verify_path.empty()) {
        UnboundednessCertificate cert =
            unboundedness_certificate_from_json(load_json(cfg.verify_path));
        bool ok = verify_unboundedness_certificate(cert, cfg.limits());
        return emit(cfg, Json{{"verified", ok}}, ok ? 0 : 1);
    }
    try {
        UnboundednessCertificate cert = unboundedness_certificate(
            cfg.context(), parse_rational(cfg.sigma), cfg.m_max, cfg.limits());
        return emit(cfg, unboundedness_certificate_to_json(cert), 0);
    } catch (const ResourceLimitError& err) {
        return emit(cfg, Json{{"found", false}, {"message", err.what()}}, 2);
    }
}

int run_verify_axioms(const RunConfig& cfg) {
    PrimeContext ctx = cfg.context();
    SatakeParameter s = input_param(cfg, cfg.param);
    SphericalFunction omega(s, cfg.limits());
    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool pass, Json detail) {
        checks.push_back(Json{{"name", name}, {"pass", pass}, {"detail", std::move(detail)}});
        all = all && pass;
    };

    std::vector<DominantCoweight> grid = dominant_labels_up_to(ctx.n, 2);
    if (ctx.n >= 3) {
        IntVector skew(static_cast<std::size_t>(ctx.n), 0);
        skew[0] = 1;
        skew[1] = 1;
        skew.back() = -2;
        grid.emplace_back(std::move(skew));
    }

    {
        std::complex<double> at_e = omega.eval_label(DominantCoweight::zero(ctx.n));
        bool pass = std::abs(at_e - 1.0) <= 1e-12;
        record("identity_value", pass, complex_to_json(at_e));
    }
    {
        // Conjugating by integral unimodular factors moves nothing: the value
        // only depends on the Cartan label.
        std::mt19937_64 rng(cfg.seed);
        bool pass = true;
        IntVector step(static_cast<std::size_t>(ctx.n), 0);
        step.front() = 1;
        step.back() = -1;
        GroupElement a = GroupElement::diagonal_power(ctx, step);
        for (int trial = 0; trial < 4 && pass; ++trial) {
            GroupElement u = detail::seeded_unimodular(ctx, rng, 6);
            GroupElement v = detail::seeded_unimodular(ctx, rng, 6);
            GroupElement moved = u * a * v;
            pass = cartan_label(moved) == cartan_label(a) &&
                   std::abs(omega.eval(moved) - omega.eval(a)) == 0.0;
        }
        record("bi_invariance", pass, Json{{"trials", 4}});
    }
    {
        IntVector step(static_cast<std::size_t>(ctx.n), 0);
        step.front() = 1;
        step.back() = -1;
        GroupElement a = GroupElement::diagonal_power(ctx, step);
        double defect = functional_equation_defect(omega, a, a, cfg.limits());
        record("functional_equation", defect < 1e-9, Json{{"defect", defect}});
    }
    {
        double worst = 0.0;
        std::vector<int> perm(static_cast<std::size_t>(ctx.n));
        for (int k = 0; k < ctx.n; ++k) perm[static_cast<std::size_t>(k)] = k;
        // adjacent transpositions generate all coordinate permutations
        for (int k = 0; k + 1 < ctx.n; ++k) {
            std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]);
            SphericalFunction permuted(s.permuted(perm), cfg.limits());
            for (const DominantCoweight& m : grid)
                worst = std::max(worst,
                                 std::abs(permuted.eval_label(m) - omega.eval_label(m)));
            std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]);
        }
        record("weyl_invariance", worst <= 1e-12, Json{{"max_gap", worst}});
    }
    {
        std::vector<ComplexRational> neg;
        for (const ComplexRational& c : s.coords())
            neg.push_back(ComplexRational{-c.re, -c.im});
        SphericalFunction negated(SatakeParameter(ctx, std::move(neg)), cfg.limits());
        double worst = 0.0;
        for (const DominantCoweight& m : grid)
            worst = std::max(
                worst, std::abs(negated.eval_label(m) - omega.eval_label(m.inverse_label())));
        record("inverse_symmetry", worst <= 1e-12, Json{{"max_gap", worst}});
    }
    {
        bool star = is_star_param(s).has_value();
        double worst = 0.0;
        if (star)
            for (const DominantCoweight& m : grid)
                worst = std::max(worst, std::abs(std::conj(omega.eval_label(m)) -
                                                 omega.eval_label(m.inverse_label())));
        record("star_symmetry", !star || worst <= 1e-9,
               Json{{"star", star}, {"max_gap", worst}});
    }

    return emit(cfg, Json{{"all_pass", all}, {"checks", std::move(checks)}}, all ? 0 : 1);
}

int run_convergence_profile(const RunConfig& cfg) {
    PrimeContext ctx = cfg.context();
    std::vector<long> js;
    for (long j : parse_int_vector(cfg.js)) js.push_back(j);
    std::vector<DominantCoweight> labels;
    if (!cfg.labels.empty()) {
        std::stringstream ss(cfg.labels);
        std::string item;
        while (std::getline(ss, item, ';')) labels.emplace_back(parse_int_vector(item));
    } else {
        for (DominantCoweight& m : dominant_labels_up_to(ctx.n, 2))
            if (!m.is_zero()) labels.push_back(std::move(m));
    }
    auto profile = convergence_profile(ctx, js, labels, cfg.limits());
    return emit(cfg, convergence_to_json(profile), 0);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"exact spherical Hecke algebra computations for SL_n over p-adic fields"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--p", cfg.p, "prime")->envname("SPHLAB_P");
    app.add_option("--n", cfg.n, "matrix rank")->envname("SPHLAB_N");
    app.add_option("--tol", cfg.tol, "numeric tolerance")->envname("SPHLAB_TOL");
    app.add_option("--coset-cap", cfg.coset_cap, "max coset representatives per coweight")
        ->envname("SPHLAB_COSET_CAP");
    app.add_option("--candidate-cap", cfg.candidate_cap, "max Hermite candidates per coweight")
        ->envname("SPHLAB_CANDIDATE_CAP");
    app.add_option("--seed", cfg.seed, "search seed")->envname("SPHLAB_SEED");
    app.add_option("--j-min", cfg.j_min, "first perturbation index")->envname("SPHLAB_J_MIN");
    app.add_option("--j-max", cfg.j_max, "last perturbation index")->envname("SPHLAB_J_MAX");
    app.add_option("--threads", cfg.threads, "worker threads for searches")
        ->envname("SPHLAB_THREADS");
    app.add_option("--out", cfg.out, "also write the JSON result to this path")
        ->envname("SPHLAB_OUT");
    app.add_option("--in", cfg.in, "JSON payload path ('-' for stdin)");
    app.add_option("--param", cfg.param,
                   "trivial | sequence:<j> | sigma:<q> | @file | re[:im],re[:im],...");
    app.add_option("--param-b", cfg.param_b, "second parameter for comparisons");
    app.add_option("--equiv-tol", cfg.equiv_tol, "0 for the exact equivalence test");
    app.add_option("--matrix", cfg.matrix, "inline matrix: rows ';', entries ','");
    app.add_option("--coweight", cfg.coweight, "dominant coweight, comma-separated");
    app.add_option("--m1", cfg.m1, "left coweight");
    app.add_option("--m2", cfg.m2, "right coweight");
    app.add_option("--hval", cfg.hval, "integer exponent vector, comma-separated");
    app.add_option("--points", cfg.points, "diagonal points: coweights joined by ';'");
    app.add_option("--js", cfg.js, "perturbation indices, comma-separated");
    app.add_option("--labels", cfg.labels, "coweights joined by ';'");
    app.add_option("--sigma", cfg.sigma, "axis parameter (rank 2), exact rational");
    app.add_option("--m-max", cfg.m_max, "diagonal axis range for the crossing scan");
    app.add_option("--verify", cfg.verify_path, "re-verify a stored certificate");
    app.add_option("--seeded-sets", cfg.seeded_sets, "number of seeded point sets");
    app.add_flag("--emit-reps", cfg.emit_reps, "include coset representatives");
    app.add_flag("--exact", cfg.exact, "include the exact rational value when one exists");

    std::map<std::string, int (*)(const RunConfig&)> dispatch{
        {"cartan", run_cartan},
        {"iwasawa", run_iwasawa},
        {"cosets", run_cosets},
        {"convolve", run_convolve},
        {"structure-constants", run_structure_constants},
        {"l1-norm", run_l1_norm},
        {"alpha", run_alpha},
        {"omega", run_omega},
        {"tau", run_tau},
        {"satake", run_satake},
        {"param-equiv", run_param_equiv},
        {"star-test", run_star_test},
        {"gram", run_gram},
        {"psd", run_psd},
        {"find-witness", run_find_witness},
        {"unbounded", run_unbounded},
        {"verify-axioms", run_verify_axioms},
        {"convergence-profile", run_convergence_profile},
    };
    const char* descriptions[][2] = {
        {"cartan", "decompose g as u1 * pi^m * u2"},
        {"iwasawa", "decompose g as k * (diagonal) * (unipotent)"},
        {"cosets", "left coset representatives of a double coset"},
        {"convolve", "product of two Hecke elements"},
        {"structure-constants", "basis expansion of chi_m1 * chi_m2"},
        {"l1-norm", "Haar-weighted l1 norm of a Hecke element"},
        {"alpha", "quasi-character value at an exponent vector"},
        {"omega", "spherical function value at pi^m"},
        {"tau", "spherical character applied to a Hecke element"},
        {"satake", "symmetric Laurent image of an exact Hecke element"},
        {"param-equiv", "do two parameters give the same spherical function"},
        {"star-test", "is omega_s a *-spherical function"},
        {"gram", "Gram matrix omega(g_j^{-1} g_k) of a point set"},
        {"psd", "positive-semidefiniteness verdict for a point set"},
        {"find-witness", "search for a non-positive-definite bounded witness"},
        {"unbounded", "rank-2 unboundedness certificate along the diagonal axis"},
        {"verify-axioms", "check the spherical-function axioms numerically"},
        {"convergence-profile", "omega gaps and majorants along the sequence"},
    };
    for (auto& [name, desc] : descriptions) app.add_subcommand(name, desc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cfg.tol <= 0) throw SchemaError("tolerance must be positive");
        if (cfg.coset_cap == 0 || cfg.candidate_cap == 0)
            throw SchemaError("caps must be positive");
        for (auto* sub : app.get_subcommands()) return dispatch.at(sub->get_name())(cfg);
        return 1;
    } catch (const Error& err) {
        std::cerr << Json{{"error", err.what()}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << Json{{"error", err.what()}}.dump(2) << "\n";
        return 1;
    }
}
