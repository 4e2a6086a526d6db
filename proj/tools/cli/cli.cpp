#include "cli.hpp"

#include "config.hpp"
#include "report.hpp"

#include "htlab/cm/cm.hpp"
#include "htlab/heights/algebraic.hpp"
#include "htlab/radical/chain.hpp"
#include "htlab/radical/projective.hpp"
#include "htlab/radical/radical.hpp"
#include "htlab/towers/tower.hpp"
#include "htlab/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace htlab::cli {

namespace {

struct Context {
    RunConfig cfg;
    std::ostream& out;
    std::ostream& err;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string join(const std::vector<long>& xs) {
    std::string s = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + std::to_string(xs[k]);
    return s + "]";
}

Params base_params(const Context& ctx, const std::string& command) {
    return {{"command", command},
            {"precision", std::to_string(ctx.cfg.precision_digits)},
            {"seed", std::to_string(ctx.cfg.seed)},
            {"format", to_string(ctx.cfg.format)},
            {"version", kVersion}};
}

std::string write_file(const Context& ctx, const std::string& name, const std::string& content) {
    std::filesystem::path dir(ctx.cfg.output_dir);
    std::filesystem::create_directories(dir);
    std::filesystem::path p = dir / name;
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << content;
    return p.string();
}

std::string extension(const Context& ctx) { return ctx.cfg.format == Format::csv ? ".csv" : ".json"; }

std::string write_report(const Context& ctx, const std::string& experiment, const Params& params,
                         const std::vector<ReportRow>& rows) {
    std::string stem = output_stem(experiment, params);
    std::string path = write_file(ctx, stem + extension(ctx), render(ctx.cfg.format, experiment, params, rows));
    ctx.out << "wrote " << path << "\n";
    return stem;
}

Params cm_meta(Params p, double offset) {
    p["faltings_offset"] = num(offset);
    p["degree_surrogate"] = "class_number";
    p["theta_height"] = "archimedean estimate over reduced forms";
    return p;
}

int scan_exit(const std::vector<CMRecord>& recs, std::ostream& err) {
    int failed = 0;
    for (const auto& r : recs)
        if (!r.error.empty()) {
            err << "D=" << r.D << ": " << r.error << "\n";
            ++failed;
        }
    return failed ? kPrecision : kOk;
}

std::vector<unsigned> parse_schedule(const std::string& s) {
    std::vector<unsigned> out;
    std::string t;
    for (char c : s)
        if (c != '[' && c != ']' && c != ' ') t += c;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            long v = std::stol(item);
            if (v < 2) throw UsageError("schedule entries must be at least 2");
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::invalid_argument&) {
            throw UsageError("bad schedule entry '" + item + "'");
        }
    }
    return out;
}

// ---- height ----

int cmd_height_body(Context& ctx, const std::string& expr, std::optional<double> gamma);

// Parse positions are reported relative to the whole expression.
int cmd_height(Context& ctx, const std::string& expr, std::optional<double> gamma) {
    try {
        return cmd_height_body(ctx, expr, gamma);
    } catch (const ParseError& e) {
        std::string msg = e.what();
        msg = msg.substr(0, msg.rfind(" at position "));
        throw ParseError(msg, e.position() + expr.find(':') + 1);
    }
}

int cmd_height_body(Context& ctx, const std::string& expr, std::optional<double> gamma) {
    auto colon = expr.find(':');
    if (colon == std::string::npos) throw UsageError("expression must start with 'rad:' or 'alg:'");
    std::string kind = expr.substr(0, colon);
    kind.erase(std::remove(kind.begin(), kind.end(), ' '), kind.end());
    std::string body = expr.substr(colon + 1);
    int digits = ctx.cfg.precision_digits;
    if (kind == "rad") {
        RadicalScalar a = parse_radical(body);
        HeightValue h = radical_height(a);
        ctx.out << h.to_string() << "\n";
        if (gamma) {
            HeightValue hw = weight_height(h, radical_degree(a), *gamma, digits);
            ctx.out << "h_gamma (gamma=" << *gamma << ", degree=" << radical_degree(a).get_str() << "): "
                    << hw.to_string() << "\n";
        }
        return kOk;
    }
    if (kind == "alg") {
        IntPoly p = IntPoly::parse(body);
        Irreducibility irr = irreducibility_filter(p);
        if (irr == Irreducibility::reducible)
            ctx.err << "warning: " << p.to_string()
                    << " is reducible; the value is the normalized Mahler measure, not a height\n";
        else if (irr == Irreducibility::unverified)
            ctx.err << "warning: irreducibility of " << p.to_string() << " not verified\n";
        auto a = AlgebraicNumber::from_minpoly(p, 0, digits);
        ctx.out << weil_height(a, digits).to_string() << "\n";
        if (gamma) ctx.out << "h_gamma (gamma=" << *gamma << "): " << weighted_height(a, *gamma, digits).to_string() << "\n";
        return kOk;
    }
    throw UsageError("unknown expression kind '" + kind + "' (expected rad or alg)");
}

// ---- points ----

int cmd_point_height(Context& ctx, const std::string& text, std::optional<double> gamma) {
    RadicalPoint P = parse_point(text);
    int digits = ctx.cfg.precision_digits;
    ctx.out << "point: " << P.to_string() << "\n";
    ctx.out << "h: " << projective_height(P).to_string() << "\n";
    ctx.out << "h_L2: " << projective_height_l2(P, digits).to_string() << "\n";
    ctx.out << "degree: " << point_degree(P).get_str() << "\n";
    if (gamma) ctx.out << "h_gamma (gamma=" << *gamma << "): " << weighted_projective_height(P, *gamma, digits).to_string() << "\n";
    return kOk;
}

int cmd_lemma_check(Context& ctx, const std::string& text, double gamma, std::optional<std::size_t> N) {
    RadicalPoint P = parse_point(text);
    auto rep = lemma_chain_check(P, gamma, N.value_or(P.dimension()), ctx.cfg.precision_digits);
    std::vector<long> idx(rep.index_set.begin(), rep.index_set.end());
    ctx.out << "point: " << P.to_string() << "\n";
    ctx.out << "lhs: " << rep.lhs.to_string() << "\n";
    ctx.out << "middle: " << rep.middle.to_string() << "\n";
    ctx.out << "rhs: " << rep.rhs.to_string() << "\n";
    ctx.out << "I: " << join(idx) << "\n";
    ctx.out << "verdict: " << to_string(rep.verdict) << " (" << rep.method << ")\n";
    return rep.verdict == ChainVerdict::violated ? kVerificationFailure : kOk;
}

// ---- towers ----

int cmd_tower_gen(Context& ctx, double gamma, double C, std::size_t levels, const std::string& schedule) {
    TowerSpec t = build_tower(gamma, C, levels, parse_schedule(schedule), ctx.cfg.seed);
    ctx.out << tower_to_json(t) << "\n";
    return kOk;
}

int cmd_tower_certify(Context& ctx, const std::string& path, std::size_t budget) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read tower file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    TowerSpec t = tower_from_json(text);
    auto certs = certify_tower(t, budget, ctx.cfg.worker_count);

    std::vector<ReportRow> rows;
    bool ok = true;
    for (const auto& c : certs) {
        ctx.out << "level " << c.level << ": samples=" << c.samples.size() << " failures=" << c.failures
                << " generator_clears_C=" << (c.generator_clears_C ? "true" : "false")
                << " remark_bound=" << fmt(c.remark_bound.mid()) << "\n";
        ok = ok && c.failures == 0 && c.generator_clears_C;
        for (const auto& s : c.samples) {
            ReportRow r;
            r.experiment = "tower-certificate";
            std::string ks;
            for (std::size_t k = 0; k < s.exponents.size(); ++k) ks += (k ? " " : "") + std::to_string(s.exponents[k]);
            r.input = "level=" + std::to_string(c.level) + " k=" + ks;
            BigFloat hb = s.hgamma.ball(ctx.cfg.precision_digits);
            r.fields = {{"level", std::to_string(c.level)},
                        {"exponents", ks},
                        {"element", s.element.to_string()},
                        {"h_gamma", fmt(hb.mid())},
                        {"h_gamma_err", fmt_radius(hb.radius())},
                        {"pass", s.pass ? "true" : "false"}};
            rows.push_back(std::move(r));
        }
    }
    Params p = base_params(ctx, "tower certify");
    p["tower"] = std::to_string(fnv1a(text));
    p["budget"] = std::to_string(budget);
    write_report(ctx, "tower-certificate", p, rows);
    ctx.out << "certificate: " << (ok ? "zero failures" : "FAILURES RECORDED") << "\n";
    return ok ? kOk : kVerificationFailure;
}

// ---- cm ----

struct CMArgs {
    long dmax = 200;
    long disc = -4;
    double offset = default_faltings_offset();
    double cprime = 1.0;
    bool nonfundamental = false;
    bool class_poly = false;
};

ScanOptions scan_options(const Context& ctx, const CMArgs& a, int digits) {
    ScanOptions o;
    o.workers = ctx.cfg.worker_count;
    o.include_nonfundamental = a.nonfundamental;
    o.record.digits = digits;
    o.record.offset = a.offset;
    o.record.with_class_poly = a.class_poly;
    return o;
}

long normalize_disc(long D) {
    if (D > 0) D = -D;
    Discriminant::make(D);
    return D;
}

int cmd_cm_scan(Context& ctx, const CMArgs& a) {
    auto recs = cm_scan(a.dmax, scan_options(ctx, a, ctx.cfg.precision_digits));
    std::vector<ReportRow> rows;
    for (const auto& r : recs) rows.push_back(cm_row(r));
    Params p = base_params(ctx, "cm scan");
    p["dmax"] = std::to_string(a.dmax);
    p["nonfundamental"] = a.nonfundamental ? "1" : "0";
    p["class_poly"] = a.class_poly ? "1" : "0";
    p = cm_meta(p, a.offset);
    write_report(ctx, "cm-scan", p, rows);
    ctx.out << "rows: " << rows.size() << "\n";
    return scan_exit(recs, ctx.err);
}

int cmd_cm_faltings(Context& ctx, const CMArgs& a) {
    long D = normalize_disc(a.disc);
    int digits = ctx.cfg.precision_digits;
    BigFloat h = faltings_height_cm(D, digits, a.offset);
    long hD = class_number(D);
    ctx.out << "D: " << D << "\n";
    ctx.out << "class_number: " << hD << "\n";
    ctx.out << "offset: " << num(a.offset) << "\n";
    ctx.out << "faltings_height: " << h.to_string(digits) << "\n";
    ctx.out << "ratio: " << (h / BigFloat::exact(hD, h.precision())).to_string(15) << "\n";
    return kOk;
}

int cmd_cm_theta(Context& ctx, const CMArgs& a) {
    long D = normalize_disc(a.disc);
    int digits = ctx.cfg.precision_digits;
    Precision bits = bits_for_digits(digits) + 48;
    for (const auto& f : reduced_forms(D)) {
        auto th = theta_null_point(cm_point(f, D, bits), digits);
        ctx.out << "form " << f.to_string() << ":";
        for (int j = 0; j < 4; ++j) ctx.out << " theta" << j << "=" << th[j].to_string(15);
        ctx.out << "\n";
    }
    ctx.out << "theta_height_est (archimedean estimate): " << theta_height_estimate(D, digits).to_string(15) << "\n";
    return kOk;
}

int cmd_cm_verify_tf(Context& ctx, const CMArgs& a) {
    int digits = ctx.cfg.precision_digits;
    auto recs = cm_scan(a.dmax, scan_options(ctx, a, digits));
    auto hi = cm_scan(a.dmax, scan_options(ctx, a, 2 * digits));
    auto fit = verify_theta_faltings(recs);
    auto stab = residual_stability(recs, hi);

    std::vector<ReportRow> rows;
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const auto& r = recs[k];
        ReportRow row;
        row.experiment = "cm-verify-tf";
        row.input = "D=" + std::to_string(r.D);
        auto add = [&](const std::string& n, std::string v) { row.fields.emplace_back(n, std::move(v)); };
        bool ok = r.error.empty() && hi[k].error.empty();
        add("D", std::to_string(r.D));
        add("faltings_height", ok ? fmt(r.faltings_height.mid()) : "");
        add("faltings_height_err", ok ? fmt_radius(r.faltings_height.radius()) : "");
        add("theta_height_est", ok ? fmt(r.theta_height_est.mid()) : "");
        add("theta_height_est_err", ok ? fmt_radius(r.theta_height_est.radius()) : "");
        add("residual", ok ? fmt(r.residual.mid()) : "");
        add("residual_err", ok ? fmt_radius(r.residual.radius()) : "");
        add("residual_2x", ok ? fmt(hi[k].residual.mid()) : "");
        add("residual_2x_err", ok ? fmt_radius(hi[k].residual.radius()) : "");
        add("precision", std::to_string(digits));
        add("version", kVersion);
        add("errors", r.error.empty() ? hi[k].error : r.error);
        rows.push_back(std::move(row));
    }
    Params p = cm_meta(base_params(ctx, "cm verify-tf"), a.offset);
    p["dmax"] = std::to_string(a.dmax);
    std::string stem = write_report(ctx, "cm-verify-tf", p, rows);
    std::vector<std::tuple<long, std::string, std::string>> pts;
    for (const auto& r : recs)
        if (r.error.empty()) pts.emplace_back(-r.D, fmt(r.residual.mid()), fmt_radius(r.residual.radius()));
    ctx.out << "wrote " << write_file(ctx, stem + ".dat", plot_data("absD", "residual", pts)) << "\n";

    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", fit.fitted_c);
    ctx.out << "rows: " << rows.size() << "\n";
    ctx.out << "fitted c: " << buf << " (attained at D=" << fit.worst_D << ")\n";
    ctx.out << "c finite: " << (fit.finite ? "true" : "false") << "\n";
    ctx.out << "excluded rows: " << join(fit.excluded) << "\n";
    ctx.out << "residuals stable under precision doubling: " << (stab.stable ? "true" : "false") << "\n";
    int e = std::max(scan_exit(recs, ctx.err), scan_exit(hi, ctx.err));
    if (e) return e;
    return fit.finite && stab.stable ? kOk : kVerificationFailure;
}

int cmd_cm_verify_decay(Context& ctx, const CMArgs& a) {
    auto recs = cm_scan(a.dmax, scan_options(ctx, a, ctx.cfg.precision_digits));
    auto rep = verify_decay(recs);
    std::vector<ReportRow> rows;
    std::vector<std::tuple<long, std::string, std::string>> pts;
    for (const auto& d : rep.rows) {
        ReportRow row;
        row.experiment = "cm-verify-decay";
        row.input = "D=" + std::to_string(d.D);
        char f[32], r[32], e[32];
        std::snprintf(f, sizeof f, "%.15g", d.faltings_height);
        std::snprintf(r, sizeof r, "%.15g", d.ratio);
        std::snprintf(e, sizeof e, "%.15g", d.envelope);
        row.fields = {{"D", std::to_string(d.D)},       {"class_number", std::to_string(d.class_number)},
                      {"faltings_height", f},           {"ratio", r},
                      {"envelope", e},                  {"precision", std::to_string(ctx.cfg.precision_digits)},
                      {"version", kVersion}};
        rows.push_back(std::move(row));
        pts.emplace_back(-d.D, e, "0");
    }
    Params p = cm_meta(base_params(ctx, "cm verify-decay"), a.offset);
    p["dmax"] = std::to_string(a.dmax);
    std::string stem = write_report(ctx, "cm-verify-decay", p, rows);
    ctx.out << "wrote " << write_file(ctx, stem + ".dat", plot_data("X", "env", pts)) << "\n";

    ctx.out << "rows: " << rows.size() << "\n";
    ctx.out << "env nonincreasing: " << (rep.nonincreasing ? "true" : "false") << "\n";
    bool ok = rep.nonincreasing;
    if (-rep.last_D >= 100) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "env(100) = %.15g, env(%ld) = %.15g", rep.env_100, -rep.last_D, rep.env_last);
        ctx.out << buf << "\n";
        ctx.out << "env(right end) < env(100): " << (rep.strictly_smaller ? "true" : "false") << "\n";
        ok = ok && rep.strictly_smaller;
    } else {
        ctx.out << "env(right end) < env(100): n/a (range below 100)\n";
    }
    int e = scan_exit(recs, ctx.err);
    if (e) return e;
    return ok ? kOk : kVerificationFailure;
}

int cmd_cm_finiteness(Context& ctx, const CMArgs& a) {
    if (!(a.cprime >= 0)) throw UsageError("--cprime must be nonnegative");
    auto recs = cm_scan(a.dmax, scan_options(ctx, a, ctx.cfg.precision_digits));
    auto census = finiteness_demo(a.cprime, recs);
    std::vector<ReportRow> rows;
    for (const auto& r : recs) {
        if (!r.error.empty() || r.class_number != 1) continue;
        ReportRow row;
        row.experiment = "cm-finiteness";
        row.input = "D=" + std::to_string(r.D);
        bool in = std::find(census.discriminants.begin(), census.discriminants.end(), r.D) != census.discriminants.end();
        row.fields = {{"D", std::to_string(r.D)},
                      {"class_number", "1"},
                      {"ratio", fmt(r.ratio.mid())},
                      {"ratio_err", fmt_radius(r.ratio.radius())},
                      {"in_census", in ? "true" : "false"},
                      {"precision", std::to_string(r.digits)},
                      {"version", kVersion}};
        rows.push_back(std::move(row));
    }
    Params p = cm_meta(base_params(ctx, "cm finiteness"), a.offset);
    p["dmax"] = std::to_string(a.dmax);
    p["cprime"] = num(a.cprime);
    write_report(ctx, "cm-finiteness", p, rows);
    ctx.out << "class number one (|D| <= " << a.dmax << "): " << join(census.class_number_one) << "\n";
    ctx.out << "census (ratio <= " << a.cprime << "): " << join(census.discriminants) << "\n";
    ctx.out << "census size: " << census.discriminants.size() << "\n";
    return scan_exit(recs, ctx.err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heights, radical towers and CM experiments", "htlab"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::optional<int> precision;
    std::optional<unsigned> workers;
    std::optional<unsigned long> seed;
    std::optional<std::string> out_dir, format, config_path;
    app.add_option("--precision", precision, "working precision in decimal digits (>= 16)");
    app.add_option("--workers", workers, "worker threads for scans and certification");
    app.add_option("--seed", seed, "seed for tower construction");
    app.add_option("--out", out_dir, "output directory for report files");
    app.add_option("--format", format, "report format: csv or json");
    app.add_option("--config", config_path, "key=value config file (flags override it)");

    // height
    std::string expr;
    std::optional<double> gamma_opt;
    auto* height = app.add_subcommand("height", "height of 'rad: p/q ^ k/d [* ...]' or 'alg: <polynomial>'");
    height->add_option("expr", expr)->required();
    height->add_option("--gamma", gamma_opt, "also print the weighted height h_gamma");

    // points
    std::string point;
    double gamma = -1;
    std::optional<std::size_t> N;
    auto* ph = app.add_subcommand("point-height", "projective height of a point '[x_0 : ... : x_N]'");
    ph->add_option("point", point)->required();
    ph->add_option("--gamma", gamma_opt);
    auto* lc = app.add_subcommand("lemma-check", "check the projective Northcott inequality chain at a point");
    lc->add_option("point", point)->required();
    lc->add_option("--gamma", gamma, "negative weight exponent")->required();
    lc->add_option("--N", N, "number of affine coordinates (defaults to the point's dimension)");

    // towers
    auto* tower = app.add_subcommand("tower", "radical towers");
    tower->require_subcommand(1);
    double C = 0;
    std::size_t levels = 0, budget = 500;
    std::string schedule, tower_path;
    auto* gen = tower->add_subcommand("gen", "build a tower and print it as JSON");
    gen->add_option("--gamma", gamma, "negative weight exponent")->default_val(-1.0);
    gen->add_option("-C,--C", C, "lower bound for the weighted heights")->required();
    gen->add_option("--levels", levels)->required();
    gen->add_option("--schedule", schedule, "degrees d_1,...,d_n")->required();
    auto* cert = tower->add_subcommand("certify", "sample monomials of each level and check h_gamma >= C");
    cert->add_option("--tower", tower_path, "tower JSON file")->required();
    cert->add_option("--budget", budget, "samples per level")->default_val(500);

    // cm
    CMArgs cma;
    auto* cm = app.add_subcommand("cm", "CM elliptic curve experiments");
    cm->require_subcommand(1);
    auto offset = [&](CLI::App* s) {
        s->add_option("--offset", cma.offset, "Faltings height normalization offset");
    };
    auto* scan = cm->add_subcommand("scan", "all quantities for each discriminant with |D| <= dmax");
    scan->add_option("--dmax", cma.dmax)->required();
    scan->add_flag("--nonfundamental", cma.nonfundamental, "include non-fundamental discriminants");
    scan->add_flag("--class-poly", cma.class_poly, "also compute Hilbert class polynomials");
    offset(scan);
    auto* falt = cm->add_subcommand("faltings", "Faltings height of one discriminant");
    falt->add_option("-D,--disc", cma.disc)->required();
    offset(falt);
    auto* theta = cm->add_subcommand("theta", "theta null points and the theta height estimate");
    theta->add_option("-D,--disc", cma.disc)->required();
    auto* vtf = cm->add_subcommand("verify-tf", "theta/Faltings residual fit and precision stability");
    vtf->add_option("--dmax", cma.dmax)->default_val(5000);
    offset(vtf);
    auto* vdec = cm->add_subcommand("verify-decay", "envelope of h_F / class number");
    vdec->add_option("--dmax", cma.dmax)->default_val(20000);
    offset(vdec);
    auto* fin = cm->add_subcommand("finiteness", "class number one discriminants with h_F / h <= C'");
    fin->add_option("--cprime", cma.cprime)->required();
    fin->add_option("--dmax", cma.dmax)->default_val(200);
    offset(fin);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Context ctx{RunConfig{}, out, err};
    try {
        if (config_path) apply_config_file(ctx.cfg, *config_path);
        if (precision) ctx.cfg.precision_digits = *precision;
        if (workers) ctx.cfg.worker_count = *workers;
        if (seed) ctx.cfg.seed = *seed;
        if (out_dir) ctx.cfg.output_dir = *out_dir;
        if (format) ctx.cfg.format = parse_format(*format);
        ctx.cfg.validate();
        if (cma.dmax < 3 && (scan->parsed() || vtf->parsed() || vdec->parsed() || fin->parsed()))
            throw UsageError("--dmax must be at least 3");

        if (height->parsed()) return cmd_height(ctx, expr, gamma_opt);
        if (ph->parsed()) return cmd_point_height(ctx, point, gamma_opt);
        if (lc->parsed()) return cmd_lemma_check(ctx, point, gamma, N);
        if (gen->parsed()) return cmd_tower_gen(ctx, gamma, C, levels, schedule);
        if (cert->parsed()) return cmd_tower_certify(ctx, tower_path, budget);
        if (scan->parsed()) return cmd_cm_scan(ctx, cma);
        if (falt->parsed()) return cmd_cm_faltings(ctx, cma);
        if (theta->parsed()) return cmd_cm_theta(ctx, cma);
        if (vtf->parsed()) return cmd_cm_verify_tf(ctx, cma);
        if (vdec->parsed()) return cmd_cm_verify_decay(ctx, cma);
        if (fin->parsed()) return cmd_cm_finiteness(ctx, cma);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kUsage;
    } catch (const PrecisionError& e) {
        err << "precision failure: " << e.what() << "\n";
        return kPrecision;
    } catch (const TowerError& e) {
        err << "tower construction failed: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    err << "no command given\n";
    return kUsage;
}

}  // namespace htlab::cli
