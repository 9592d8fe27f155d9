#include "chowgamma/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <random>
#include <thread>

#include "chowgamma/equivariant.hpp"
#include "chowgamma/errors.hpp"
#include "chowgamma/eulerian.hpp"
#include "chowgamma/homology.hpp"
#include "chowgamma/io.hpp"
#include "chowgamma/symfunc.hpp"

namespace chowgamma {

std::vector<Report> run_parallel(const std::vector<ReportTask>& tasks, unsigned threads) {
    std::vector<Report> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

unsigned default_thread_count() {
    const char* env = std::getenv("CHOWGAMMA_THREADS");
    if (env == nullptr) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return 1;
    return static_cast<unsigned>(std::min(v, 256L));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"main-theorems", "lemmas", "corollaries", "pq", "schur",
                                                "braid", "bridges", "ribbon", "properties", "all"};
    return names;
}

Report verify_matroid(const std::string& label, const Matroid& m, const PermGroup& g, RingKind kind) {
    FlatLattice lattice = flats_lattice(m);
    LatticeAction action(lattice, g);
    Report out(label);
    Report r = verify_main_theorems(action, kind);
    out.append(r, label + "/" + r.suite() + "/");
    return out;
}

namespace {

// Prefix with the sub-suite name unless the ids already carry it.
void merge(Report& into, const Report& part) {
    bool carries = !part.checks().empty();
    for (const auto& c : part.checks())
        if (c.id.rfind(part.suite() + "/", 0) != 0) carries = false;
    into.append(part, carries ? std::string{} : part.suite() + "/");
}

void add_sweep(std::vector<ReportTask>& tasks, int from, int to, const std::function<Report(int)>& f) {
    for (int n = from; n <= to; ++n) tasks.push_back([f, n] { return f(n); });
}

void add_matroid_tasks(std::vector<ReportTask>& tasks, const std::string& label,
                       const std::function<Matroid()>& make, const std::string& group, std::size_t cap,
                       const std::vector<RingKind>& rings) {
    for (RingKind kind : rings)
        tasks.push_back([=] {
            Matroid m = make();
            return verify_matroid(label, m, parse_group(group, m, cap), kind);
        });
}


bool same_records(const Report& a, const Report& b) {
    if (a.suite() != b.suite() || a.checks().size() != b.checks().size()) return false;
    for (std::size_t i = 0; i < a.checks().size(); ++i) {
        const auto& x = a.checks()[i];
        const auto& y = b.checks()[i];
        if (x.id != y.id || x.pass != y.pass || x.lhs != y.lhs || x.rhs != y.rhs || x.residual != y.residual ||
            x.note != y.note)
            return false;
    }
    return true;
}

MVPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 5), exp(0, 3), coeff(-9, 9);
    MVPoly f;
    for (int i = terms(rng); i > 0; --i)
        f.add_term({static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng)),
                    static_cast<std::uint32_t>(exp(rng))},
                   coeff(rng));
    return f;
}

void ring_laws(Report& report) {
    std::mt19937 rng(20240501U);
    std::size_t bad = 0;
    std::string example;
    const int trials = 300;
    for (int i = 0; i < trials; ++i) {
        MVPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        bool ok = a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                  a * (b + c) == a * b + a * c && a + MVPoly{} == a && a * MVPoly(1) == a && (a - a).is_zero() &&
                  (a * b).substitute(Var::q, 2) == a.substitute(Var::q, 2) * b.substitute(Var::q, 2);
        if (!ok && bad++ == 0) example = a.to_string() + " ; " + b.to_string() + " ; " + c.to_string();
    }
    report.add("ring-laws", bad == 0, std::to_string(bad), "0", std::to_string(bad),
               bad == 0 ? std::to_string(trials) + " random triples" : "first failure: " + example);
}

struct TestLattice {
    std::string label;
    Matroid matroid;
};

std::vector<TestLattice> test_lattices(int n) {
    std::vector<TestLattice> out;
    for (int m = 1; m <= std::min(n, 6); ++m)
        for (int r = 1; r <= m; ++r)
            out.push_back({"uniform:" + std::to_string(r) + "," + std::to_string(m), Matroid::uniform(r, m)});
    out.push_back({"graphic:K4", Matroid::complete_graph(4)});
    out.push_back({"graphic:K5", Matroid::complete_graph(5)});
    return out;
}

RankSet interval(int a, int b) {
    RankSet s;
    for (int i = a; i <= b; ++i) s.push_back(i);
    return s;
}

void lattice_properties(Report& report, const TestLattice& t) {
    FlatLattice lattice = flats_lattice(t.matroid);
    PermGroup group = named_group(t.matroid, "symmetric");
    LatticeAction action(lattice, group);
    const RankSet all = interval(1, lattice.rank() - 1);

    std::map<RankSet, ClassFunction> beta;
    for (const RankSet& s : subsets_of(all)) beta.emplace(s, beta_character(action, s));
    for (const RankSet& s : subsets_of(all)) {
        ClassFunction sum = ClassFunction::constant(group.class_count(), 0);
        for (const RankSet& u : subsets_of(s)) sum += beta.at(u);
        ClassFunction alpha = alpha_character(action, s);
        report.add("mobius-round-trip/" + t.label + "/S=" + to_string(s), sum == alpha, sum.to_string(),
                   alpha.to_string(), (sum - alpha).to_string());
    }

    for (const RankSet& s : subsets_of(all)) {
        RankSelectedPoset poset = rank_selected(lattice, s);
        OrderComplex complex(poset);
        std::size_t nonzero = 0;
        for (int d = 1; d <= complex.top_dimension(); ++d) {
            const SparseIntMatrix& outer = complex.boundary(d - 1);
            const SparseIntMatrix& inner = complex.boundary(d);
            for (std::size_t i = 0; i < outer.rows(); ++i) {
                std::map<std::size_t, mpz_class> row;
                for (const auto& [k, v] : outer.row(i))
                    for (const auto& [j, w] : inner.row(k)) row[j] += v * w;
                for (const auto& [j, v] : row)
                    if (v != 0) ++nonzero;
            }
        }
        report.add("boundary-squared/" + t.label + "/S=" + to_string(s), nonzero == 0, std::to_string(nonzero), "0",
                   std::to_string(nonzero));

        BettiVector betti = reduced_betti(complex);
        bool vanishing = true;
        for (std::size_t i = 0; i < s.size() && i < betti.values.size(); ++i)
            if (betti.values[i] != 0) vanishing = false;
        std::string shown = to_json(betti).dump();
        report.add("cohen-macaulay/" + t.label + "/S=" + to_string(s), vanishing, shown, "lower Betti numbers 0",
                   vanishing ? "0" : shown);
    }
}

mpz_class centralizer_order(const Partition& mu) {
    std::map<int, int> mult;
    for (int part : mu) ++mult[part];
    mpz_class z = 1;
    for (const auto& [part, m] : mult) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
        z *= f * power;
    }
    return z;
}

void orthogonality(Report& report, int n) {
    const std::vector<Partition> parts = partitions(n);
    std::vector<std::vector<mpz_class>> table;
    for (const auto& lambda : parts) {
        std::vector<mpz_class> row;
        for (const auto& mu : parts) row.push_back(sn_character(lambda, mu));
        table.push_back(std::move(row));
    }
    std::vector<mpz_class> z;
    for (const auto& mu : parts) z.push_back(centralizer_order(mu));
    std::size_t bad = 0;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = 0; b < parts.size(); ++b) {
            mpq_class s = 0;
            for (std::size_t c = 0; c < parts.size(); ++c) s += mpq_class(table[a][c] * table[b][c], z[c]);
            s.canonicalize();
            if (s != (a == b ? 1 : 0)) ++bad;
        }
    report.add("orthogonality/n=" + std::to_string(n), bad == 0, std::to_string(bad), "0", std::to_string(bad),
               std::to_string(parts.size()) + " irreducible characters");
}

void stab_counts(Report& report) {
    mpz_class a = 1, b = 2;  // F_2, F_3
    for (int m = 0; m <= 20; ++m) {
        const std::size_t count = stab(1, m).size();
        report.add("stab-fibonacci/m=" + std::to_string(m), mpz_class(std::to_string(count)) == a,
                   std::to_string(count), a.get_str(), mpz_class(mpz_class(std::to_string(count)) - a).get_str());
        mpz_class c = a + b;
        a = b;
        b = c;
    }
}

}  // namespace

Report verify_properties(int n) {
    if (n < 1) throw DomainError("n must be positive");
    Report report("properties");
    ring_laws(report);
    for (const auto& t : test_lattices(n)) lattice_properties(report, t);
    for (int m = 1; m <= n; ++m) orthogonality(report, m);
    stab_counts(report);

    SuiteOptions probe;
    probe.suite = "lemmas";
    probe.n = std::min(n, 6);
    probe.threads = 1;
    Report serial = run_suite(probe);
    probe.threads = 4;
    Report threaded = run_suite(probe);
    const bool same = same_records(serial, threaded) && to_json(serial).dump() == to_json(threaded).dump();
    report.add("determinism/lemmas/threads=1-vs-4", same, std::to_string(serial.checks().size()),
               std::to_string(threaded.checks().size()), same ? "0" : "reports differ");
    report.sort_by_id();
    return report;
}

Report run_suite(const SuiteOptions& o) {
    const std::string& s = o.suite;
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
        throw DomainError("unknown suite '" + s + "'");
    if (o.n && *o.n < 1) throw DomainError("--n must be positive");
    auto upto = [&](int fallback) { return o.n.value_or(fallback); };
    const bool all = s == "all";
    std::vector<ReportTask> tasks;

    if (s == "main-theorems" || all) {
        if (o.matroid && !all) {
            const std::string spec = *o.matroid;
            Matroid probe = parse_matroid(spec);  // validate before any work is scheduled
            (void)probe;
            add_matroid_tasks(tasks, spec, [spec] { return parse_matroid(spec); }, o.group, o.group_cap, o.rings);
        } else {
            for (int m = 1; m <= upto(6); ++m)
                for (int r = 1; r <= m; ++r)
                    add_matroid_tasks(tasks, "uniform:" + std::to_string(r) + "," + std::to_string(m),
                                      [r, m] { return Matroid::uniform(r, m); }, "symmetric", o.group_cap, o.rings);
        }
    }
    if (s == "braid" || all)
        for (int m = 2; m <= upto(5); ++m)
            add_matroid_tasks(tasks, "graphic:K" + std::to_string(m), [m] { return Matroid::complete_graph(m); },
                              "symmetric", o.group_cap, o.rings);
    if (s == "lemmas" || all)
        for (auto model : {SequenceModel::chow, SequenceModel::augmented})
            add_sweep(tasks, 1, upto(12), [model](int n) { return verify_lemma(n, model); });
    if (s == "corollaries" || all) add_sweep(tasks, 2, upto(7), verify_corollaries);
    if (s == "pq" || all) {
        add_sweep(tasks, 1, upto(8), verify_pq_eulerian);
        add_sweep(tasks, 1, upto(6), verify_pq_binomial);
    }
    if (s == "schur" || all) add_sweep(tasks, 1, upto(6), verify_schur_coeff);
    if (s == "bridges" || all) add_sweep(tasks, 1, upto(6), verify_hilbert_bridges);
    if (s == "ribbon" || all) add_sweep(tasks, 1, upto(5), verify_ribbon_bridge);
    if (s == "properties" || all) tasks.push_back([n = upto(7)] { return verify_properties(n); });

    Report out(s);
    for (const Report& part : run_parallel(tasks, o.threads)) merge(out, part);
    out.sort_by_id();
    return out;
}

}  // namespace chowgamma
