#include "cli.hpp"

#include "aklab/analytics.hpp"
#include "aklab/constructions.hpp"
#include "aklab/io.hpp"
#include "aklab/search.hpp"
#include "aklab/version.hpp"
#include "aklab/walks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace aklab::cli {

namespace {

using nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string checksum(const std::string& bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

std::string single_line(std::string text) {
    for (char& c : text)
        if (c == '\n' || c == '\r') c = ' ';
    while (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

// One output artifact; "-" collects onto stdout, anything else is a file
// staged as <path>.tmp and renamed, so readers never see partial content.
struct Artifact {
    std::string name;
    std::string bytes;
};

struct Emission {
    std::vector<Artifact> artifacts;
    std::optional<std::uint64_t> seed;
    std::string manifest_stem;  // also write <stem>.manifest.json when set
};

void write_file_atomic(const std::string& path, const std::string& bytes) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << bytes;
        if (!f) throw std::runtime_error("cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move " + tmp + " into place");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

SetFamily read_family(const std::string& path) {
    return parse_family_text(read_file(path));
}

// Run manifest, one JSON line on stderr for every successful run plus a
// sidecar file next to file outputs. Checksums depend only on the command
// and the seed; wall_ms is informational.
void deliver(const Emission& em, const std::vector<std::string>& args,
             std::chrono::steady_clock::time_point start, std::ostream& out,
             std::ostream& err) {
    ordered_json manifest;
    manifest["tool"] = "aklab";
    manifest["version"] = version_string;
    std::string cmd;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) cmd += ' ';
        cmd += args[i];
    }
    manifest["command"] = cmd;
    if (em.seed)
        manifest["seed"] = *em.seed;
    else
        manifest["seed"] = nullptr;
    manifest["outputs"] = ordered_json::array();
    for (const auto& a : em.artifacts)
        manifest["outputs"].push_back(
            {{"name", a.name}, {"checksum", checksum(a.bytes)}});
    auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    manifest["wall_ms"] = wall;

    for (const auto& a : em.artifacts) {
        if (a.name == "-")
            out << a.bytes;
        else
            write_file_atomic(a.name, a.bytes);
    }
    if (!em.manifest_stem.empty())
        write_file_atomic(em.manifest_stem + ".manifest.json",
                          manifest.dump() + "\n");
    err << manifest.dump() << "\n";
}

Emission one_artifact(const std::string& out_path, std::string bytes) {
    Emission em;
    em.artifacts.push_back({out_path, std::move(bytes)});
    if (out_path != "-") em.manifest_stem = out_path;
    return em;
}

// ---- flag storage ----

struct Opts {
    int n = 0, t = 0, r = 0, s = 0, s_prime = 0, i = 0, j = 0, ell = 0;
    int steps = 0, jobs = 1;
    std::uint64_t trials = 0, seed = 0;
    std::string p, p_grid, family, family_a, family_b, cross, set;
    std::string out = "-";
    bool shifted_only = false, force = false, tilde = false;
};

Rational parse_probability(const std::string& text) {
    Rational p = parse_rational(text);
    if (p <= 0 || p >= 1)
        throw std::domain_error("p must satisfy 0 < p < 1, got " + text);
    return p;
}

// ---- verbs ----

Emission do_measure(const Opts& o, bool have_family, bool have_n) {
    Rational p = parse_probability(o.p);
    Rational value;
    if (have_family) {
        value = read_family(o.family).measure(p);
    } else {
        if (have_n && o.n < o.t + 2 * o.r)
            throw std::domain_error("need n >= t + 2r");
        value = closed_form_measure(o.t, o.r, p);
    }
    return one_artifact(o.out, to_string(value) + " " + to_decimal(value) + "\n");
}

Emission do_construct_pair(const Opts& o) {
    auto [a, b] = extremal_pair(o.n, o.t, o.s, o.s_prime);
    Emission em;
    if (o.out == "-") {
        std::string bytes = "# family A\n" + format_family(a) +
                            "# family B\n" + format_family(b);
        em.artifacts.push_back({"-", std::move(bytes)});
    } else {
        em.artifacts.push_back({o.out + ".a", format_family(a)});
        em.artifacts.push_back({o.out + ".b", format_family(b)});
        em.manifest_stem = o.out;
    }
    return em;
}

Emission do_check(const Opts& o, bool have_t, bool have_cross) {
    if (have_cross && !have_t)
        throw std::domain_error("--cross needs --t");
    SetFamily fam = read_family(o.family);
    std::string bytes;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    if (have_t)
        bytes += std::string("t_intersecting=") +
                 flag(fam.is_t_intersecting(o.t)) + "\n";
    bytes += std::string("up_closed=") + flag(fam.is_up_closed()) + "\n";
    bytes += std::string("shifted=") + flag(fam.is_shifted()) + "\n";
    if (have_cross) {
        SetFamily other = read_family(o.cross);
        bytes += std::string("cross_t_intersecting=") +
                 flag(cross_t_intersecting(fam, other, o.t)) + "\n";
    }
    return one_artifact(o.out, bytes);
}

Emission do_shift(const Opts& o, bool have_ij) {
    SetFamily fam = read_family(o.family);
    SetFamily result = have_ij ? shift_ij(fam, o.i, o.j) : shift_fixpoint(fam);
    return one_artifact(o.out, format_family(result));
}

Emission do_dual(const Opts& o) {
    Subset a = parse_subset_text(o.set, o.n);
    return one_artifact(o.out, format_subset(dual_t(a, o.t)) + "\n");
}

Emission do_classify(const Opts& o) {
    SetFamily a = read_family(o.family_a);
    SetFamily b = read_family(o.family_b);
    PairClassification c = classify_pair(a, b, o.t, o.r);
    ordered_json rec;
    rec["u"] = c.u;
    rec["v"] = c.v;
    auto opt = [](const std::optional<int>& x) {
        return x ? ordered_json(*x) : ordered_json(nullptr);
    };
    rec["s"] = opt(c.s);
    rec["s_prime"] = opt(c.s_prime);
    rec["I"] = opt(c.I);
    rec["J"] = opt(c.J);
    rec["case"] = pair_case_name(c.case_);
    rec["in_R_ex"] = c.in_r_ex;
    rec["swapped"] = c.swapped;
    return one_artifact(o.out, rec.dump() + "\n");
}

Emission do_search(const Opts& o, bool cross) {
    if (const char* env = std::getenv("AKLAB_MAX_N")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end == env || *end != '\0')
            throw std::domain_error("AKLAB_MAX_N is not an integer");
        if (o.n > cap)
            throw std::domain_error("n exceeds AKLAB_MAX_N=" + std::string(env));
    }
    Rational p = parse_probability(o.p);
    SearchOptions options;
    options.shifted_only = o.shifted_only;
    options.force = o.force;
    SearchCertificate cert = cross ? max_cross(o.n, o.t, p, options)
                                   : max_single(o.n, o.t, p, options);
    std::string summary = "value=" + to_string(cert.value) +
                          " nodes=" + std::to_string(cert.nodes_explored) +
                          " exhaustive=" +
                          (cert.exhaustive ? "true" : "false") + "\n";
    Emission em;
    if (o.out == "-") {
        std::string bytes = summary;
        if (cross) {
            bytes += "# argmax family A\n" + format_family(cert.argmax[0]);
            bytes += "# argmax family B\n" + format_family(cert.argmax[1]);
        } else {
            bytes += "# argmax family\n" + format_family(cert.argmax[0]);
        }
        em.artifacts.push_back({"-", std::move(bytes)});
    } else {
        em.artifacts.push_back({"-", summary});
        if (cross) {
            em.artifacts.push_back({o.out + ".a", format_family(cert.argmax[0])});
            em.artifacts.push_back({o.out + ".b", format_family(cert.argmax[1])});
        } else {
            em.artifacts.push_back({o.out, format_family(cert.argmax[0])});
        }
        em.manifest_stem = o.out;
    }
    return em;
}

std::vector<Rational> parse_grid(const std::string& spec) {
    auto c1 = spec.find(':');
    auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        spec.find(':', c2 + 1) != std::string::npos)
        throw std::domain_error("p-grid must be <lo>:<hi>:<steps>");
    Rational lo = parse_probability(spec.substr(0, c1));
    Rational hi = parse_probability(spec.substr(c1 + 1, c2 - c1 - 1));
    long steps = std::strtol(spec.c_str() + c2 + 1, nullptr, 10);
    if (steps < 1) throw std::domain_error("p-grid needs steps >= 1");
    std::vector<Rational> points;
    if (steps == 1) {
        points.push_back(lo);
        return points;
    }
    Rational span = hi - lo;
    for (long k = 0; k < steps; ++k) {
        Rational p = lo + span * Rational(k, steps - 1);
        p.canonicalize();
        points.push_back(p);
    }
    return points;
}

Emission do_sweep(const Opts& o) {
    if (o.t < 1 || o.r < 0)
        throw std::domain_error("sweep needs t >= 1, r >= 0");
    std::vector<Rational> points = parse_grid(o.p_grid);

    struct GCol {
        const char* name;
        int s, s_prime;
    };
    const GCol gcols[] = {
        {"g_rm2_rm2", o.r - 2, o.r - 2}, {"g_rp2_rp2", o.r + 2, o.r + 2},
        {"g_rm1_rm2", o.r - 1, o.r - 2}, {"g_rp2_rp1", o.r + 2, o.r + 1},
        {"g_rp2_r", o.r + 2, o.r},       {"g_rp2_rm1", o.r + 2, o.r - 1},
        {"g_rp1_rm1", o.r + 1, o.r - 1}, {"g_rp1_rm2", o.r + 1, o.r - 2},
        {"g_r_rm2", o.r, o.r - 2}};

    std::vector<std::string> ratio_labels;
    ratio_labels.push_back("pair_rp1_r");
    if (o.r >= 1) ratio_labels.push_back("pair_r_rm1");
    ratio_labels.push_back("frt_rp1_over_r");
    if (o.r >= 1) ratio_labels.push_back("frt_rm1_over_r");

    std::string header = "p_rat,p_dec,mu_frt_rat,mu_frt_dec,threshold_sign";
    for (const auto& c : gcols)
        header += std::string(",") + c.name + "_rat," + c.name + "_dec";
    if (o.t >= 2)
        for (const auto& label : ratio_labels)
            header += "," + label + "_rat," + label + "_dec," + label + "_pred";

    auto row = [&](const Rational& p) {
        std::string cells = to_string(p) + "," + to_decimal(p);
        Rational mu = closed_form_measure(o.t, o.r, p);
        cells += "," + to_string(mu) + "," + to_decimal(mu);
        cells += std::string(",") + sign_name(threshold_sign(o.t, o.r, p));
        for (const auto& c : gcols) {
            if (c.s < 0 || c.s_prime < 0) {
                cells += ",0,0";
            } else if (o.t - (c.s - c.s_prime) < 1) {
                cells += ",,";  // u < 1: undefined at this t
            } else {
                Rational g = g_eval(o.t, o.r, c.s, c.s_prime, p);
                cells += "," + to_string(g) + "," + to_decimal(g);
            }
        }
        if (o.t >= 2)
            for (const auto& rep : ratio_report(o.t, o.r, p))
                cells += "," + to_string(rep.exact) + "," +
                         to_decimal(rep.exact) + "," + fmt_double(rep.prediction);
        return cells;
    };

    std::vector<std::string> rows(points.size());
    int jobs = o.jobs < 1 ? 1 : o.jobs;
    if (jobs > static_cast<int>(points.size()))
        jobs = static_cast<int>(points.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) rows[i] = row(points[i]);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < points.size(); i += jobs)
                    rows[i] = row(points[i]);
            });
        for (auto& th : workers) th.join();
    }

    std::string bytes = header + "\n";
    for (const auto& r : rows) bytes += r + "\n";
    return one_artifact(o.out, std::move(bytes));
}

Emission do_walk_sim(const Opts& o) {
    Rational p = parse_probability(o.p);
    SimResult sim = simulate_hits(p, o.ell, o.steps, o.trials, o.seed, o.jobs);
    Rational exact = f_line_measure(o.steps, o.ell, p);
    Rational alpha_pow = pow_rational(p / (Rational(1) - p), o.ell);
    std::string bytes = "estimate,stderr,exact,alpha_pow_ell\n";
    bytes += fmt_double(sim.estimate) + "," + fmt_double(sim.std_error) + "," +
             to_decimal(exact) + "," + to_decimal(alpha_pow) + "\n";
    Emission em = one_artifact(o.out, std::move(bytes));
    em.seed = o.seed;
    return em;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    Opts o;
    CLI::App app{"exact arithmetic for cross t-intersecting families"};
    app.name("aklab");
    app.require_subcommand(1);

    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "output path, - for stdout");
    };

    CLI::App* measure = app.add_subcommand(
        "measure", "mu_p of a family file or of F_r^t in closed form");
    measure->add_option("--n", o.n, "ground set size (optional sanity bound)");
    measure->add_option("--t", o.t, "intersection parameter");
    measure->add_option("--r", o.r, "frame index");
    measure->add_option("--p", o.p, "bias as a/b")->required();
    measure->add_option("--family", o.family, "family file to measure");
    add_out(measure);

    CLI::App* construct =
        app.add_subcommand("construct", "emit a named family as text");
    construct->require_subcommand(1);
    CLI::App* cf = construct->add_subcommand("frt", "F_r^t on [n]");
    cf->add_option("--n", o.n)->required();
    cf->add_option("--t", o.t)->required();
    cf->add_option("--r", o.r)->required();
    add_out(cf);
    CLI::App* cn = construct->add_subcommand(
        "near-extremal", "F_r^t rebalanced one level down the frame");
    cn->add_option("--n", o.n)->required();
    cn->add_option("--t", o.t)->required();
    cn->add_option("--r", o.r)->required();
    add_out(cn);
    CLI::App* cl =
        construct->add_subcommand("line", "walks meeting y = x + ell");
    cl->add_option("--n", o.n)->required();
    cl->add_option("--ell", o.ell)->required();
    add_out(cl);
    CLI::App* cd = construct->add_subcommand(
        "dwalk", "one boundary walk D^t_s(i) as a single-set family");
    cd->add_option("--n", o.n)->required();
    cd->add_option("--t", o.t)->required();
    cd->add_option("--s", o.s)->required();
    cd->add_option("--i", o.i)->required();
    cd->add_flag("--tilde", o.tilde, "tilde variant");
    add_out(cd);
    CLI::App* cp = construct->add_subcommand(
        "pair", "extremal cross pair (F^u_s, F^v_s')");
    cp->add_option("--n", o.n)->required();
    cp->add_option("--t", o.t)->required();
    cp->add_option("--s", o.s)->required();
    cp->add_option("--s-prime", o.s_prime)->required();
    add_out(cp);

    CLI::App* check =
        app.add_subcommand("check", "predicates of a family file");
    check->add_option("--family", o.family)->required();
    check->add_option("--t", o.t, "intersection parameter");
    check->add_option("--cross", o.cross, "second family for the cross check");
    add_out(check);

    CLI::App* shift = app.add_subcommand(
        "shift", "apply one (i,j)-shift, or shift to the fixpoint");
    shift->add_option("--family", o.family)->required();
    CLI::Option* oi = shift->add_option("--i", o.i, "target element");
    CLI::Option* oj = shift->add_option("--j", o.j, "source element");
    oi->needs(oj);
    oj->needs(oi);
    add_out(shift);

    CLI::App* dual = app.add_subcommand(
        "dual", "dual walk of one subset, written ascending");
    dual->add_option("--n", o.n)->required();
    dual->add_option("--t", o.t)->required();
    dual->add_option("--set", o.set, "elements, space separated, . for empty")
        ->required();
    add_out(dual);

    CLI::App* classify = app.add_subcommand(
        "classify", "extremal-case classification of a family pair");
    classify->add_option("--a", o.family_a)->required();
    classify->add_option("--b", o.family_b)->required();
    classify->add_option("--t", o.t)->required();
    classify->add_option("--r", o.r)->required();
    add_out(classify);

    CLI::App* search = app.add_subcommand(
        "search", "exhaustive optimum over up-closed families");
    search->require_subcommand(1);
    CLI::App* ss = search->add_subcommand("single", "t-intersecting maximum");
    CLI::App* sc = search->add_subcommand("cross", "cross pair maximum");
    for (CLI::App* sub : {ss, sc}) {
        sub->add_option("--n", o.n)->required();
        sub->add_option("--t", o.t)->required();
        sub->add_option("--p", o.p)->required();
        sub->add_flag("--shifted-only", o.shifted_only,
                      "restrict to shifted families");
        sub->add_flag("--force", o.force, "allow the n = 7 shifted search");
        add_out(sub);
    }

    CLI::App* sweep =
        app.add_subcommand("sweep", "CSV of analytic quantities over a p grid");
    sweep->add_option("--t", o.t)->required();
    sweep->add_option("--r", o.r)->required();
    sweep->add_option("--p-grid", o.p_grid, "<lo>:<hi>:<steps>")->required();
    sweep->add_option("--jobs", o.jobs, "worker threads");
    sweep->add_option("--out", o.out)->required();

    CLI::App* walk_sim = app.add_subcommand(
        "walk-sim", "Monte Carlo line-hitting probability");
    walk_sim->add_option("--p", o.p)->required();
    walk_sim->add_option("--ell", o.ell)->required();
    walk_sim->add_option("--steps", o.steps)->required();
    walk_sim->add_option("--trials", o.trials)->required();
    walk_sim->add_option("--seed", o.seed)->required();
    walk_sim->add_option("--jobs", o.jobs, "worker threads");
    add_out(walk_sim);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "aklab: " << single_line(e.what()) << "\n";
        return 2;
    }

    try {
        Emission em;
        if (app.got_subcommand(measure)) {
            bool have_family = measure->count("--family") > 0;
            bool have_t = measure->count("--t") > 0;
            if (have_family == have_t)
                throw std::domain_error(
                    "measure needs either --family or --t/--r");
            em = do_measure(o, have_family, measure->count("--n") > 0);
        } else if (app.got_subcommand(construct)) {
            if (construct->got_subcommand(cf))
                em = one_artifact(o.out, format_family(frt(o.n, o.t, o.r)));
            else if (construct->got_subcommand(cn))
                em = one_artifact(
                    o.out, format_family(near_extremal(o.n, o.t, o.r).first));
            else if (construct->got_subcommand(cl))
                em = one_artifact(o.out, format_family(f_line_family(o.n, o.ell)));
            else if (construct->got_subcommand(cd))
                em = one_artifact(
                    o.out,
                    format_family(SetFamily(
                        {d_walk(o.n, o.t, o.s, o.i,
                                o.tilde ? DWalkVariant::tilde_
                                        : DWalkVariant::plain)
                             .bits},
                        o.n)));
            else
                em = do_construct_pair(o);
        } else if (app.got_subcommand(check)) {
            em = do_check(o, check->count("--t") > 0, check->count("--cross") > 0);
        } else if (app.got_subcommand(shift)) {
            em = do_shift(o, shift->count("--i") > 0);
        } else if (app.got_subcommand(dual)) {
            em = do_dual(o);
        } else if (app.got_subcommand(classify)) {
            em = do_classify(o);
        } else if (app.got_subcommand(search)) {
            em = do_search(o, search->got_subcommand(sc));
        } else if (app.got_subcommand(sweep)) {
            em = do_sweep(o);
        } else {
            em = do_walk_sim(o);
        }
        deliver(em, args, start, out, err);
        return 0;
    } catch (const std::exception& e) {
        err << "aklab: " << single_line(e.what()) << "\n";
        return 2;
    }
}

}
