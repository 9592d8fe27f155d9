#include "chowgamma/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "chowgamma/chow.hpp"
#include "chowgamma/equivariant.hpp"
#include "chowgamma/errors.hpp"
#include "chowgamma/eulerian.hpp"
#include "chowgamma/homology.hpp"
#include "chowgamma/io.hpp"
#include "chowgamma/suites.hpp"

namespace chowgamma {

namespace {

struct RunConfig {
    std::string verb;
    std::string matroid;
    std::string group = "symmetric";
    std::string ring;
    std::string format = "text";
    std::string model = "both";
    std::string poly;
    std::string window = "full";
    std::string weight = "count";
    std::string population = "all";
    std::string which = "all";
    std::string basis = "schur";
    std::string suite;
    std::string ranks;
    std::string method = "dp";
    int n = 0;
    int k = 0;
    int degree = 0;
    unsigned threads = 0;
    std::size_t group_cap = kDefaultGroupCap;
    std::size_t fy_cap = kDefaultMonomialCap;
    bool timing = false;

    std::optional<int> given_n;
    std::optional<int> given_k;
    std::optional<int> given_degree;
    bool has_matroid = false;
    bool has_poly = false;
    bool has_ranks = false;
};

using Clock = std::chrono::steady_clock;

std::vector<RingKind> parse_rings(const std::string& s, bool allow_both) {
    if (s == "chow") return {RingKind::chow};
    if (s == "aug" || s == "augmented") return {RingKind::augmented};
    if (s == "both" && allow_both) return {RingKind::chow, RingKind::augmented};
    throw DomainError("unknown ring '" + s + "'");
}

RingKind parse_ring(const std::string& s) { return parse_rings(s, false).front(); }

RankSet parse_rank_list(const std::string& s) {
    RankSet out;
    std::string body = s;
    if (!body.empty() && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
    std::stringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw DomainError("bad rank list '" + s + "'");
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw DomainError("repeated rank in '" + s + "'");
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

class Emitter {
public:
    Emitter(const RunConfig& cfg, std::ostream& out, std::ostream& err, Clock::time_point start)
        : cfg_(cfg), out_(out), err_(err), start_(start) {}

    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

    void value(Json j, const std::string& text, const std::string& csv) {
        if (cfg_.format == "json") {
            if (cfg_.timing) j["wall_seconds"] = elapsed();
            out_ << j.dump(2) << '\n';
        } else if (cfg_.format == "csv") {
            out_ << csv;
        } else {
            out_ << text;
        }
        footer();
    }

    void raw(const std::string& text) { out_ << text; }

    int report(const Report& r) {
        if (cfg_.format == "json")
            out_ << to_json(r, cfg_.timing ? elapsed() : -1).dump(2) << '\n';
        else if (cfg_.format == "csv")
            out_ << to_csv(r);
        else
            out_ << to_text(r);
        footer();
        return r.passed() ? exit_pass : exit_fail;
    }

private:
    void footer() {
        if (cfg_.timing) err_ << "wall time: " << std::fixed << std::setprecision(3) << elapsed() << " s\n";
    }

    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
    Clock::time_point start_;
};

std::string poly_csv(const MVPoly& f) {
    std::string out = "e_t,e_q,e_p,coefficient\n";
    for (const auto& [e, c] : f.terms())
        out += std::to_string(e.t) + ',' + std::to_string(e.q) + ',' + std::to_string(e.p) + ',' + c.get_str() + '\n';
    return out;
}

unsigned thread_count(const RunConfig& cfg) { return cfg.threads > 0 ? cfg.threads : default_thread_count(); }

int need_n(const RunConfig& cfg) {
    if (!cfg.given_n) throw DomainError("--n is required");
    if (*cfg.given_n < 1) throw DomainError("--n must be positive");
    return *cfg.given_n;
}

int do_hilbert(const RunConfig& cfg, Emitter& emit) {
    Matroid m = parse_matroid(cfg.matroid);
    RingKind kind = parse_ring(cfg.ring);
    FlatLattice lattice = flats_lattice(m);
    MVPoly h;
    if (cfg.method == "enumerate")
        h = fy_basis(lattice, kind, cfg.fy_cap).hilbert();
    else if (cfg.method == "dp")
        h = hilbert_series(lattice, kind);
    else
        throw DomainError("unknown method '" + cfg.method + "'");
    Json j{{"matroid", to_json(m)}, {"ring", to_string(kind)}, {"hilbert", to_json(h)}, {"text", h.to_string()}};
    emit.value(j, h.to_string() + '\n', poly_csv(h));
    return exit_pass;
}

int do_gamma(const RunConfig& cfg, Emitter& emit) {
    MVPoly f;
    unsigned d = 0;
    if (cfg.has_poly == cfg.has_matroid) throw DomainError("give exactly one of --poly and --matroid");
    if (cfg.has_poly) {
        f = parse_poly(cfg.poly);
        if (f.is_zero()) throw DomainError("zero polynomial has no gamma expansion");
        d = static_cast<unsigned>(f.degree_t());
    } else {
        Matroid m = parse_matroid(cfg.matroid);
        RingKind kind = parse_ring(cfg.ring);
        FlatLattice lattice = flats_lattice(m);
        f = hilbert_series(lattice, kind);
        d = theorem_degree(lattice.rank(), kind);
    }
    if (cfg.given_degree) {
        if (*cfg.given_degree < 0) throw DomainError("--degree must be nonnegative");
        d = static_cast<unsigned>(*cfg.given_degree);
    }
    GammaVector g = gamma_expand(f, d);
    Json entries = Json::array();
    std::string text = "[";
    std::string csv = "k,gamma\n";
    for (std::size_t k = 0; k < g.gamma.size(); ++k) {
        entries.push_back(to_json(g.gamma[k]));
        text += (k ? "," : "") + g.gamma[k].to_string();
        csv += std::to_string(k) + ',' + csv_quote(g.gamma[k].to_string()) + '\n';
    }
    text += "]\n";
    Json j{{"polynomial", to_json(f)}, {"degree", d}, {"gamma", entries}, {"nonnegative", g.nonnegative()}};
    emit.value(j, text, csv);
    return exit_pass;
}

int do_equivariant(const RunConfig& cfg, Emitter& emit) {
    Matroid m = parse_matroid(cfg.matroid);
    PermGroup g = parse_group(cfg.group, m, cfg.group_cap);
    FlatLattice lattice = flats_lattice(m);
    LatticeAction action(lattice, g);
    Report combined("equivariant");
    Json rings = Json::array();
    std::string text = m.describe() + ", group of order " + std::to_string(g.order()) + " with " +
                       std::to_string(g.class_count()) + " classes\n";
    for (RingKind kind : parse_rings(cfg.ring, true)) {
        EqSeries series = equivariant_hilbert(action, kind);
        std::vector<ClassFunction> gamma = equivariant_gamma(series, theorem_degree(lattice.rank(), kind));
        Report r = verify_main_theorems(action, kind);
        combined.append(r, r.suite() + "/");
        Json gj = Json::array();
        for (const auto& c : gamma) gj.push_back(to_json(c, g));
        rings.push_back(Json{{"ring", to_string(kind)}, {"series", to_json(series, g)}, {"gamma", gj}});
        text += "ring " + to_string(kind) + "\n";
        for (std::size_t c = 0; c < g.class_count(); ++c)
            text += "  class " + cycle_string(g.classes()[c].representative) + " (size " +
                    std::to_string(g.classes()[c].size) + "): " + series.at_class(c).to_string() + '\n';
        for (std::size_t k = 0; k < gamma.size(); ++k)
            text += "  gamma_" + std::to_string(k) + " = " + gamma[k].to_string() + '\n';
    }
    combined.sort_by_id();
    if (cfg.format == "json") {
        Json j{{"matroid", to_json(m)}, {"group", to_json(g)}, {"rings", rings}, {"report", to_json(combined)}};
        emit.value(j, "", "");
        return combined.passed() ? exit_pass : exit_fail;
    }
    // In text mode the report follows the series and carries the exit status.
    if (cfg.format == "text") emit.raw(text);
    return emit.report(combined);
}

int do_betti(const RunConfig& cfg, Emitter& emit) {
    Matroid m = parse_matroid(cfg.matroid);
    FlatLattice lattice = flats_lattice(m);
    std::vector<RankSet> sets;
    if (cfg.has_ranks) {
        sets.push_back(parse_rank_list(cfg.ranks));
    } else {
        RankSet all;
        for (int i = 1; i < lattice.rank(); ++i) all.push_back(i);
        sets = subsets_of(all);
    }
    Json list = Json::array();
    std::string text, csv = "S,dimension,betti\n";
    for (const RankSet& s : sets) {
        RankSelectedPoset poset = rank_selected(lattice, s);
        BettiVector b = reduced_betti(order_complex(poset));
        Json sj = Json::array();
        for (int r : s) sj.push_back(r);
        list.push_back(Json{{"S", sj}, {"reduced_betti", to_json(b)}});
        text += "S=" + to_string(s) + ": " + to_json(b).dump() + '\n';
        for (std::size_t i = 0; i < b.values.size(); ++i)
            csv += csv_quote(to_string(s)) + ',' + std::to_string(static_cast<long>(i) - 1) + ',' +
                   std::to_string(b.values[i]) + '\n';
    }
    Json j{{"matroid", to_json(m)}, {"first_dimension", -1}, {"betti", list}};
    emit.value(j, text, csv);
    return exit_pass;
}

int do_verify_lemma(const RunConfig& cfg, Emitter& emit) {
    const int n = need_n(cfg);
    std::vector<SequenceModel> models;
    if (cfg.model == "chow" || cfg.model == "both") models.push_back(SequenceModel::chow);
    if (cfg.model == "aug" || cfg.model == "augmented" || cfg.model == "both") models.push_back(SequenceModel::augmented);
    if (models.empty()) throw DomainError("unknown model '" + cfg.model + "'");
    std::vector<ReportTask> tasks;
    for (auto model : models) tasks.push_back([n, model] { return verify_lemma(n, model); });
    Report out("lemmas");
    for (const Report& r : run_parallel(tasks, thread_count(cfg))) out.append(r);
    out.sort_by_id();
    return emit.report(out);
}

int do_eulerian(const RunConfig& cfg, Emitter& emit) {
    const int n = need_n(cfg);
    MVPoly f;
    if (cfg.poly == "a")
        f = q_eulerian(n);
    else if (cfg.poly == "d")
        f = q_derangement(n);
    else if (cfg.poly == "abin")
        f = q_binomial_eulerian(n);
    else
        throw DomainError("--poly must be a, d or abin");
    Json j{{"n", n}, {"poly", cfg.poly}, {"polynomial", to_json(f)}, {"text", f.to_string()}};
    emit.value(j, f.to_string() + '\n', poly_csv(f));
    return exit_pass;
}

int do_xi(const RunConfig& cfg, Emitter& emit) {
    XiSpec spec;
    spec.n = need_n(cfg);
    spec.window = parse_xi_window(cfg.window, &spec.r);
    spec.weight = parse_xi_weight(cfg.weight);
    if (cfg.population == "all")
        spec.population = XiPopulation::all;
    else if (cfg.population == "derangements")
        spec.population = XiPopulation::derangements;
    else
        throw DomainError("--population must be all or derangements");
    Json values = Json::array();
    std::string text, csv = "k,xi\n";
    std::vector<std::pair<int, MVPoly>> rows;
    if (cfg.given_k) {
        spec.k = *cfg.given_k;
        rows.emplace_back(spec.k, xi(spec));
    } else {
        std::vector<MVPoly> all = xi_all(spec, spec.n);
        for (std::size_t k = 0; k < all.size(); ++k) rows.emplace_back(static_cast<int>(k), all[k]);
    }
    for (const auto& [k, f] : rows) {
        values.push_back(Json{{"k", k}, {"xi", to_json(f)}, {"text", f.to_string()}});
        text += (cfg.given_k ? "" : "k=" + std::to_string(k) + ": ") + f.to_string() + '\n';
        csv += std::to_string(k) + ',' + csv_quote(f.to_string()) + '\n';
    }
    Json j{{"n", spec.n}, {"window", cfg.window}, {"weight", cfg.weight}, {"population", cfg.population},
           {"values", values}};
    emit.value(j, text, csv);
    return exit_pass;
}

int do_qfun(const RunConfig& cfg, Emitter& emit) {
    const int n = need_n(cfg);
    if (cfg.basis != "schur" && cfg.basis != "fundamental") throw DomainError("--basis must be schur or fundamental");
    QFunctions q = q_functions(n);
    std::vector<std::pair<std::string, const SymF*>> chosen;
    if (cfg.which == "q0" || cfg.which == "all") chosen.emplace_back("Q0", &q.q0);
    if (cfg.which == "q" || cfg.which == "all") chosen.emplace_back("Q", &q.q);
    if (cfg.which == "qtilde" || cfg.which == "all") chosen.emplace_back("Qtilde", &q.qtilde);
    if (chosen.empty()) throw DomainError("--which must be q0, q, qtilde or all");
    Json j{{"n", n}};
    std::string text, csv = "function,index,coefficient\n";
    for (const auto& [name, f] : chosen) {
        SymF shown = cfg.basis == "schur" ? *f : to_fundamental(*f);
        j[name] = to_json(shown);
        text += name + " = " + shown.to_string() + '\n';
        for (const auto& [key, c] : shown.terms())
            csv += name + ',' + csv_quote(cfg.basis == "schur" ? to_string_partition(key) : to_string(key)) + ',' +
                   csv_quote(c.to_string()) + '\n';
    }
    emit.value(j, text, csv);
    return exit_pass;
}

int do_verify(const RunConfig& cfg, Emitter& emit) {
    SuiteOptions o;
    o.suite = cfg.suite;
    o.n = cfg.given_n;
    if (cfg.has_matroid) o.matroid = cfg.matroid;
    o.group = cfg.group;
    o.rings = parse_rings(cfg.ring, true);
    o.threads = thread_count(cfg);
    o.group_cap = cfg.group_cap;
    return emit.report(run_suite(o));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Hilbert series, gamma expansions and verification suites for matroid Chow rings", "chowgamma"};
    app.require_subcommand(1, 1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--threads", cfg.threads, "Worker threads (default: CHOWGAMMA_THREADS or 1)")
            ->check(CLI::Range(1U, 256U));
        sub->add_option("--group-cap", cfg.group_cap, "Largest group order to materialize");
        sub->add_option("--fy-cap", cfg.fy_cap, "Largest FY basis to enumerate");
        sub->add_flag("--timing", cfg.timing, "Report wall time (stderr, and JSON output)");
    };
    auto matroid_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--matroid", cfg.matroid, "uniform:r,n | boolean:n | graphic:Km | file.json");
        if (required) o->required();
        return o;
    };
    auto n_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--n", cfg.n, "Size parameter");
        if (required) o->required();
        return o;
    };
    auto ring_opt = [&](CLI::App* sub, bool both) {
        return sub->add_option("--ring", cfg.ring, both ? "chow | aug | both (default both)" : "chow | aug");
    };

    std::vector<std::pair<CLI::App*, CLI::Option*>> n_options, k_options, degree_options, matroid_options,
        poly_options, ranks_options;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of A(M) or the augmented ring");
    matroid_opt(hilbert, true);
    ring_opt(hilbert, false);
    hilbert->add_option("--method", cfg.method, "dp | enumerate")->check(CLI::IsMember({"dp", "enumerate"}));
    common(hilbert);

    auto* gamma = app.add_subcommand("gamma", "Gamma vector of a Hilbert series or a palindromic polynomial");
    matroid_options.emplace_back(gamma, matroid_opt(gamma, false));
    poly_options.emplace_back(gamma, gamma->add_option("--poly", cfg.poly, "Polynomial such as '1 + 4*t + t^2'"));
    degree_options.emplace_back(gamma, gamma->add_option("--degree", cfg.degree, "Center of symmetry times two"));
    ring_opt(gamma, false);
    common(gamma);

    auto* equivariant = app.add_subcommand("equivariant", "Equivariant Hilbert series with theorem checks");
    matroid_opt(equivariant, true);
    equivariant->add_option("--group", cfg.group, "symmetric | cyclic | trivial | file.json");
    ring_opt(equivariant, true);
    common(equivariant);

    auto* betti = app.add_subcommand("betti", "Reduced Betti numbers of rank-selected subposets");
    matroid_opt(betti, true);
    ranks_options.emplace_back(betti, betti->add_option("--ranks", cfg.ranks, "Rank set such as 1,3 (default: all)"));
    common(betti);

    auto* lemma = app.add_subcommand("verify-lemma", "Summation identities for one n");
    n_options.emplace_back(lemma, n_opt(lemma, true));
    lemma->add_option("--model", cfg.model, "chow | aug | both")
        ->check(CLI::IsMember({"chow", "aug", "augmented", "both"}));
    common(lemma);

    auto* eulerian = app.add_subcommand("eulerian", "q-Eulerian, q-derangement or binomial q-Eulerian polynomial");
    n_options.emplace_back(eulerian, n_opt(eulerian, true));
    eulerian->add_option("--poly", cfg.poly, "a | d | abin")->required()->check(CLI::IsMember({"a", "d", "abin"}));
    common(eulerian);

    auto* xi_cmd = app.add_subcommand("xi", "Weighted count of permutations with descent set in a window");
    n_options.emplace_back(xi_cmd, n_opt(xi_cmd, true));
    k_options.emplace_back(xi_cmd, xi_cmd->add_option("--k", cfg.k, "Excedance-type index (default: all)"));
    xi_cmd->add_option("--window", cfg.window, "chow(r) | augmented(r) | derangement | no-first | no-last | full");
    xi_cmd->add_option("--weight", cfg.weight, "count | q-maj-inverse | q-inv | pq");
    xi_cmd->add_option("--population", cfg.population, "all | derangements");
    common(xi_cmd);

    auto* qfun = app.add_subcommand("qfun", "Eulerian quasisymmetric functions");
    n_options.emplace_back(qfun, n_opt(qfun, true));
    qfun->add_option("--which", cfg.which, "q0 | q | qtilde | all");
    qfun->add_option("--basis", cfg.basis, "schur | fundamental");
    common(qfun);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    {
        std::vector<std::string> names = suite_names();
        verify->add_option("--suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(names));
    }
    n_options.emplace_back(verify, n_opt(verify, false));
    matroid_options.emplace_back(verify, matroid_opt(verify, false));
    verify->add_option("--group", cfg.group, "symmetric | cyclic | trivial | file.json");
    ring_opt(verify, true);
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    for (auto* sub : app.get_subcommands()) cfg.verb = sub->get_name();
    auto given = [&](const std::vector<std::pair<CLI::App*, CLI::Option*>>& list) {
        for (const auto& [sub, o] : list)
            if (sub->parsed() && o->count() > 0) return true;
        return false;
    };
    if (given(n_options)) cfg.given_n = cfg.n;
    if (given(k_options)) cfg.given_k = cfg.k;
    if (given(degree_options)) cfg.given_degree = cfg.degree;
    cfg.has_matroid = given(matroid_options) || !cfg.matroid.empty();
    cfg.has_poly = given(poly_options);
    cfg.has_ranks = given(ranks_options);
    if (cfg.ring.empty()) cfg.ring = cfg.verb == "equivariant" || cfg.verb == "verify" ? "both" : "chow";

    Emitter emit(cfg, out, err, Clock::now());
    try {
        if (cfg.verb == "hilbert") return do_hilbert(cfg, emit);
        if (cfg.verb == "gamma") return do_gamma(cfg, emit);
        if (cfg.verb == "equivariant") return do_equivariant(cfg, emit);
        if (cfg.verb == "betti") return do_betti(cfg, emit);
        if (cfg.verb == "verify-lemma") return do_verify_lemma(cfg, emit);
        if (cfg.verb == "eulerian") return do_eulerian(cfg, emit);
        if (cfg.verb == "xi") return do_xi(cfg, emit);
        if (cfg.verb == "qfun") return do_qfun(cfg, emit);
        if (cfg.verb == "verify") return do_verify(cfg, emit);
        err << "error: unknown verb\n";
        return exit_usage;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConsistencyError& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return exit_fail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_fail;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"chowgamma"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace chowgamma
