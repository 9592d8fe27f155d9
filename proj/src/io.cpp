#include "chowgamma/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "chowgamma/errors.hpp"

namespace chowgamma {

namespace {

mpz_class parse_integer(const std::string& s) {
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw DomainError("not an integer: '" + s + "'");
    return v;
}

mpz_class integer_of(const Json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    throw DomainError("expected an integer, got " + j.dump());
}

int int_of(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw DomainError(std::string("expected an integer for ") + what);
    return j.get<int>();
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    return j.at(key);
}

ElementSet set_of(const Json& j) {
    if (!j.is_array()) throw DomainError("expected an array of elements");
    ElementSet s;
    for (const auto& e : j) {
        int v = int_of(e, "element");
        if (v < 0 || v >= static_cast<int>(ElementSet::kCapacity)) throw DomainError("element out of range");
        s.insert(v);
    }
    return s;
}

Json array_of(const std::vector<int>& v) {
    Json a = Json::array();
    for (int x : v) a.push_back(x);
    return a;
}

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw DomainError("invalid JSON in '" + path + "': " + e.what());
    }
}

int parse_small_int(const std::string& s, const std::string& context) {
    if (s.empty() || s.size() > 6) throw DomainError("bad number in '" + context + "'");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad number in '" + context + "'");
    return std::stoi(s);
}

// "(1 2 3)(4 5)" on 1-based points.
Permutation parse_cycles(const std::string& text, int n) {
    Permutation g = identity_permutation(n);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw DomainError("bad cycle notation '" + text + "'");
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) throw DomainError("bad cycle notation '" + text + "'");
        std::istringstream body(text.substr(i + 1, close - i - 1));
        std::vector<int> cycle;
        std::string tok;
        while (body >> tok) {
            int v = parse_small_int(tok, text);
            if (v < 1 || v > n) throw DomainError("cycle point out of range in '" + text + "'");
            cycle.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) g[cycle[k]] = cycle[(k + 1) % cycle.size()];
        i = close + 1;
    }
    if (!is_permutation(g, n)) throw DomainError("cycles are not disjoint in '" + text + "'");
    return g;
}

// Images are 0-based unless they are exactly {1, ..., n}.
Permutation parse_images(const Json& j, int n) {
    if (j.is_string()) return parse_cycles(j.get<std::string>(), n);
    if (!j.is_array()) throw DomainError("generator must be an image array or a cycle string");
    Permutation g;
    for (const auto& v : j) g.push_back(int_of(v, "image"));
    if (static_cast<int>(g.size()) != n) throw DomainError("generator has wrong length");
    if (!is_permutation(g, n)) {
        Permutation shifted = g;
        for (int& v : shifted) --v;
        if (!is_permutation(shifted, n)) throw DomainError("generator is not a permutation");
        g = shifted;
    }
    return g;
}

}  // namespace

Json to_json(const MVPoly& f) {
    Json a = Json::array();
    for (const auto& [e, c] : f.terms()) a.push_back(Json::array({e.t, e.q, e.p, c.get_str()}));
    return a;
}

MVPoly poly_from_json(const Json& j) {
    if (j.is_string()) return parse_poly(j.get<std::string>());
    if (j.is_number_integer()) return MVPoly(integer_of(j));
    if (!j.is_array()) throw DomainError("polynomial must be a term array");
    MVPoly f;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 4) throw DomainError("polynomial term must be [e_t,e_q,e_p,c]");
        std::uint32_t e[3];
        for (std::size_t i = 0; i < 3; ++i) {
            int v = int_of(term[i], "exponent");
            if (v < 0) throw DomainError("negative exponent");
            e[i] = static_cast<std::uint32_t>(v);
        }
        f.add_term({e[0], e[1], e[2]}, integer_of(term[3]));
    }
    return f;
}

MVPoly parse_poly(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw DomainError("empty polynomial");
    MVPoly out;
    std::size_t i = 0;
    auto fail = [&]() -> DomainError { return DomainError("cannot parse polynomial '" + text + "'"); };
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw fail();
        }
        mpz_class coeff = sign;
        Exponent e;
        bool any = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            if (any) {
                if (s[i] == '*') ++i;
                if (i >= s.size()) throw fail();
            }
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff *= parse_integer(read_digits());
            } else if (s[i] == 't' || s[i] == 'q' || s[i] == 'p') {
                char v = s[i++];
                std::uint32_t power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::string d = read_digits();
                    if (d.empty() || d.size() > 9) throw fail();
                    power = static_cast<std::uint32_t>(std::stoul(d));
                }
                (v == 't' ? e.t : v == 'q' ? e.q : e.p) += power;
            } else {
                throw fail();
            }
            any = true;
        }
        if (!any) throw fail();
        out.add_term(e, coeff);
    }
    return out;
}

Json to_json(const Matroid& m) {
    return std::visit(
        [](const auto& model) -> Json {
            using T = std::decay_t<decltype(model)>;
            Json j;
            if constexpr (std::is_same_v<T, UniformModel>) {
                j["kind"] = "uniform";
                j["r"] = model.rank;
                j["n"] = model.n;
            } else if constexpr (std::is_same_v<T, GraphicModel>) {
                j["kind"] = "graphic";
                j["vertices"] = model.vertices;
                j["edges"] = Json::array();
                for (const auto& [u, v] : model.edges) j["edges"].push_back(Json::array({u, v}));
            } else if constexpr (std::is_same_v<T, BasesModel>) {
                j["kind"] = "bases";
                j["n"] = model.n;
                j["bases"] = Json::array();
                for (const auto& b : model.bases) j["bases"].push_back(array_of(b.elements()));
            } else {
                j["kind"] = "flats";
                j["n"] = model.n;
                j["flats"] = Json::array();
                for (const auto& [s, r] : model.flats)
                    j["flats"].push_back(Json{{"set", array_of(s.elements())}, {"rank", r}});
            }
            return j;
        },
        m.model());
}

Matroid matroid_from_json(const Json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "uniform") return Matroid::uniform(int_of(field(j, "r"), "r"), int_of(field(j, "n"), "n"));
    if (kind == "graphic") {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : field(j, "edges")) {
            if (!e.is_array() || e.size() != 2) throw DomainError("edge must be [u,v]");
            edges.emplace_back(int_of(e[0], "vertex"), int_of(e[1], "vertex"));
        }
        return Matroid::graphic(int_of(field(j, "vertices"), "vertices"), std::move(edges));
    }
    if (kind == "bases") {
        std::vector<ElementSet> bases;
        for (const auto& b : field(j, "bases")) bases.push_back(set_of(b));
        return Matroid::from_bases(int_of(field(j, "n"), "n"), std::move(bases));
    }
    if (kind == "flats") {
        std::vector<std::pair<ElementSet, int>> flats;
        for (const auto& f : field(j, "flats")) flats.emplace_back(set_of(field(f, "set")), int_of(field(f, "rank"), "rank"));
        return Matroid::from_flats(int_of(field(j, "n"), "n"), std::move(flats));
    }
    throw DomainError("unknown matroid kind '" + kind + "'");
}

Matroid parse_matroid(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        const std::string arg = spec.substr(colon + 1);
        if (kind == "uniform") {
            auto comma = arg.find(',');
            if (comma == std::string::npos) throw DomainError("expected uniform:r,n");
            return Matroid::uniform(parse_small_int(arg.substr(0, comma), spec),
                                    parse_small_int(arg.substr(comma + 1), spec));
        }
        if (kind == "boolean") return Matroid::boolean(parse_small_int(arg, spec));
        if (kind == "graphic") {
            if (arg.size() < 2 || (arg[0] != 'K' && arg[0] != 'k')) throw DomainError("expected graphic:Km");
            return Matroid::complete_graph(parse_small_int(arg.substr(1), spec));
        }
    }
    return matroid_from_json(load_file(spec));
}

PermGroup group_from_json(const Json& j, const Matroid& m, std::size_t cap) {
    if (j.is_string()) return named_group(m, j.get<std::string>(), cap);
    if (j.contains("named")) return named_group(m, field(j, "named").get<std::string>(), cap);
    const int n = int_of(field(j, "n"), "n");
    const auto* graph = std::get_if<GraphicModel>(&m.model());
    std::string acts_on = j.value("acts_on", n != m.ground_size() && graph ? "vertices" : "ground");
    if (acts_on != "ground" && acts_on != "vertices") throw DomainError("acts_on must be 'ground' or 'vertices'");
    if (acts_on == "vertices" && graph == nullptr) throw DomainError("vertex action needs a graphic matroid");
    const int expected = acts_on == "ground" ? m.ground_size() : graph->vertices;
    if (n != expected)
        throw DomainError("group degree " + std::to_string(n) + " does not match " + std::to_string(expected) +
                          (acts_on == "ground" ? " ground-set elements" : " vertices"));
    std::vector<Permutation> gens;
    for (const auto& g : field(j, "generators")) {
        Permutation p = parse_images(g, n);
        gens.push_back(acts_on == "vertices" ? induced_edge_permutation(*graph, p) : p);
    }
    return PermGroup(m.ground_size(), std::move(gens), cap);
}

PermGroup parse_group(const std::string& spec, const Matroid& m, std::size_t cap) {
    if (spec == "symmetric" || spec == "cyclic" || spec == "trivial") return named_group(m, spec, cap);
    return group_from_json(load_file(spec), m, cap);
}

Json to_json(const PermGroup& g) {
    Json classes = Json::array();
    for (const auto& c : g.classes())
        classes.push_back(Json{{"representative", array_of(c.representative)},
                               {"cycles", cycle_string(c.representative)},
                               {"size", c.size}});
    return Json{{"degree", g.degree()}, {"order", g.order()}, {"classes", classes}};
}

Json to_json(const ClassFunction& f, const PermGroup& g) {
    Json a = Json::array();
    for (std::size_t c = 0; c < f.size(); ++c)
        a.push_back(Json{{"class", cycle_string(g.classes().at(c).representative)}, {"value", f.values[c].get_str()}});
    return a;
}

Json to_json(const EqSeries& e, const PermGroup& g) {
    Json degrees = Json::array();
    for (std::size_t i = 0; i < e.by_degree.size(); ++i)
        degrees.push_back(Json{{"degree", i}, {"character", to_json(e.by_degree[i], g)}});
    return degrees;
}

Json to_json(const SymF& f) {
    const bool schur = f.basis() == SymF::Basis::schur;
    Json terms = Json::array();
    for (const auto& [k, c] : f.terms()) {
        Json index = schur ? array_of(k) : Json{{"set", array_of(k)}};
        terms.push_back(Json{{"index", index}, {"coeff", to_json(c)}});
    }
    return Json{{"degree", f.degree()}, {"basis", schur ? "schur" : "fundamental"}, {"terms", terms}};
}

SymF symf_from_json(const Json& j) {
    const int degree = int_of(field(j, "degree"), "degree");
    const std::string basis = field(j, "basis").get<std::string>();
    if (basis != "schur" && basis != "fundamental") throw DomainError("unknown basis '" + basis + "'");
    const bool schur = basis == "schur";
    SymF f(schur ? SymF::Basis::schur : SymF::Basis::fundamental, degree);
    for (const auto& t : field(j, "terms")) {
        const Json& index = field(t, "index");
        const Json& elems = index.is_object() ? field(index, "set") : index;
        std::vector<int> key;
        for (const auto& v : elems) key.push_back(int_of(v, "index"));
        MVPoly c = poly_from_json(field(t, "coeff"));
        f += schur ? SymF::schur(key, c) : SymF::fundamental(key, degree, c);
    }
    return f;
}

Json to_json(const BettiVector& b) {
    Json a = Json::array();
    for (long v : b.values) a.push_back(v);
    return a;
}

Json to_json(const Report& r, double wall_seconds) {
    Json checks = Json::array();
    for (const auto& c : r.checks())
        checks.push_back(Json{{"id", c.id},
                              {"status", c.pass ? "pass" : "fail"},
                              {"lhs", c.lhs},
                              {"rhs", c.rhs},
                              {"residual", c.residual},
                              {"note", c.note}});
    Json j{{"suite", r.suite()}, {"checks", checks}, {"status", r.passed() ? "pass" : "fail"}};
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    if (wall_seconds >= 0) j["wall_seconds"] = wall_seconds;
    return j;
}

std::string to_csv(const Report& r) {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    std::string out = "suite,id,status,lhs,rhs,residual,note\n";
    for (const auto& c : r.checks())
        out += quote(r.suite()) + ',' + quote(c.id) + ',' + (c.pass ? "pass" : "fail") + ',' + quote(c.lhs) + ',' +
               quote(c.rhs) + ',' + quote(c.residual) + ',' + quote(c.note) + '\n';
    return out;
}

std::string to_text(const Report& r) {
    std::string out;
    for (const auto& c : r.checks()) {
        out += (c.pass ? "PASS " : "FAIL ") + c.id;
        if (!c.pass) out += "  " + c.lhs + " | " + c.rhs + " | " + c.residual;
        if (!c.note.empty()) out += "  # " + c.note;
        out += '\n';
    }
    out += r.suite() + ": " + std::to_string(r.checks().size() - r.failures()) + "/" +
           std::to_string(r.checks().size()) + " passed, status " + (r.passed() ? "pass" : "fail") + '\n';
    return out;
}

}  // namespace chowgamma
