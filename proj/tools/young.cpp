#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "young/young.hpp"

using namespace young;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string shape;
    std::string family = "symmetric";
    int r = 0;
    std::string q = "sym";
    std::string u;
    std::string format;
    std::string oracle = "recursive";
    int threads = 1;
    std::string out;
    int gen = -1;
    int max_n = 7;
    int bench_n = 0;
};

void emit_error(const char* kind, const std::string& message) {
    json j;
    j["level"] = "error";
    j["kind"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
}

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw PreconditionError("cannot open output file '" + o.out + "'");
    f << text;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

Scalar parse_param(const std::string& s) {
    if (s.find('q') != std::string::npos) return Scalar(QRational::parse(s));
    return Scalar(parse_rational(s));
}

AlgebraSpec make_spec(const Options& o, const Shape& shape) {
    Family fam = parse_family(o.family);
    std::optional<Rational> q;
    if (o.q != "sym") q = parse_rational(o.q);
    std::vector<Scalar> u;
    for (const auto& s : split_csv(o.u)) u.push_back(parse_param(s));
    AlgebraSpec spec;
    switch (fam) {
        case Family::symmetric:
            if (q) throw PreconditionError("symmetric takes no q");
            spec = AlgebraSpec::symmetric();
            break;
        case Family::hecke_A: spec = AlgebraSpec::hecke_A(q); break;
        case Family::hecke_B:
            if (u.size() != 2) throw PreconditionError("hecke_B needs --u u1,u2 with u1 = 1/u2");
            spec = AlgebraSpec::hecke_B(u[0], u[1], q);
            break;
        case Family::ariki_koike:
            if (u.empty()) throw PreconditionError("ariki_koike needs --u with one value per component");
            spec = AlgebraSpec::ariki_koike(u, q);
            break;
        case Family::wreath_grn: spec = AlgebraSpec::wreath_grn(o.r > 0 ? o.r : shape.r()); break;
        case Family::affine_placed: spec = AlgebraSpec::affine_placed(q); break;
    }
    if (o.r > 0 && o.r != spec.r && fam != Family::wreath_grn) throw PreconditionError("--r does not match the parameters");
    return spec;
}

std::map<std::string, std::string> params_of(const Options& o, const AlgebraSpec& spec) {
    std::map<std::string, std::string> p;
    p["family"] = family_name(spec.family);
    if (spec.is_q_family()) p["q"] = spec.q ? to_string(*spec.q) : "sym";
    if (!spec.u.empty()) {
        std::string u;
        for (std::size_t k = 0; k < spec.u.size(); ++k) u += (k ? "," : "") + spec.u[k].to_string();
        p["u"] = u;
    }
    if (spec.family == Family::wreath_grn || spec.r > 1) p["r"] = std::to_string(spec.r);
    (void)o;
    return p;
}

std::vector<TableauRows> rows_of(const std::vector<Tableau>& ts) {
    std::vector<TableauRows> out;
    for (const auto& t : ts) out.push_back(t.rows());
    return out;
}

std::string render_matrix(const Options& o, const SeminormalModule& m, const Matrix& a, const std::string& field,
                          std::map<std::string, std::string> params, const std::vector<Tableau>& basis) {
    std::string fmt = o.format.empty() ? "json" : o.format;
    if (fmt == "csv") {
        std::vector<std::string> words;
        for (const auto& t : basis) words.push_back(t.word_string());
        return to_csv(a, words);
    }
    if (fmt != "json") throw ParseError("matrices are exported as json or csv");
    MatrixDocument doc{m.shape().to_string(), field, std::move(params), rows_of(basis), a};
    return to_json(doc);
}

std::string join_docs(const Options& o, const std::vector<std::pair<std::string, std::string>>& docs) {
    if (docs.size() == 1) return docs[0].second;
    std::string fmt = o.format.empty() ? "json" : o.format;
    std::string s;
    if (fmt == "json") {
        json arr = json::array();
        for (const auto& [name, d] : docs) {
            json j = json::parse(d);
            arr.push_back({{"generator", name}, {"matrix", j}});
        }
        return arr.dump(1) + "\n";
    }
    for (const auto& [name, d] : docs) s += "# " + name + "\n" + d + "\n";
    return s;
}

int cmd_tableaux(const Options& o) {
    auto shape = std::make_shared<const Shape>(Shape::parse(o.shape));
    auto ts = enumerate_syt(shape);
    std::string fmt = o.format.empty() ? "json" : o.format;
    if (fmt == "csv") {
        std::string s = "index,word,depth,inversions\n";
        for (std::size_t k = 0; k < ts.size(); ++k) {
            std::string inv;
            for (const auto& [i, j] : ts[k].inversions()) inv += (inv.empty() ? "" : " ") + std::to_string(i) + ":" + std::to_string(j);
            s += std::to_string(k + 1) + "," + ts[k].word_string() + "," + std::to_string(ts[k].depth()) + "," + inv + "\n";
        }
        write_output(o, s);
        return 0;
    }
    if (fmt != "json") throw ParseError("tableaux are exported as json or csv");
    json j;
    j["shape"] = shape->to_string();
    j["count"] = ts.size();
    json arr = json::array();
    for (const auto& t : ts) {
        json e;
        e["rows"] = json::parse(tableau_to_json(t));
        e["word"] = t.word();
        e["depth"] = t.depth();
        json inv = json::array();
        for (const auto& [i, k] : t.inversions()) inv.push_back({i, k});
        e["inversions"] = inv;
        arr.push_back(e);
    }
    j["tableaux"] = arr;
    write_output(o, j.dump(1) + "\n");
    return 0;
}

int cmd_graph(const Options& o) {
    auto shape = std::make_shared<const Shape>(Shape::parse(o.shape));
    BruhatGraph g(shape);
    std::string fmt = o.format.empty() ? "dot" : o.format;
    if (fmt == "dot") {
        write_output(o, g.to_dot());
        return 0;
    }
    if (fmt != "json") throw ParseError("graphs are exported as dot or json");
    json j;
    j["shape"] = shape->to_string();
    json nodes = json::array();
    for (int k = 0; k < g.size(); ++k)
        nodes.push_back({{"rows", json::parse(tableau_to_json(g.node(k)))}, {"depth", g.depth(k)}});
    j["nodes"] = nodes;
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({{"lower", e.lower}, {"upper", e.upper}, {"label", "s" + std::to_string(e.label)}});
    j["edges"] = edges;
    write_output(o, j.dump(1) + "\n");
    return 0;
}

int cmd_generators(const Options& o, bool natural) {
    auto shape = std::make_shared<const Shape>(Shape::parse(o.shape));
    AlgebraSpec spec = make_spec(o, *shape);
    SeminormalModule m(spec, shape);
    std::vector<int> which;
    if (o.gen >= 0) {
        which.push_back(o.gen);
    } else {
        if (spec.has_zeroth()) which.push_back(0);
        for (int i = 1; i < m.n(); ++i) which.push_back(i);
    }
    std::optional<Matrix> a;
    if (natural) a = transition_recursive(m, o.threads);
    std::vector<std::pair<std::string, std::string>> docs;
    const char* prefix = spec.is_q_family() ? "T" : "s";
    for (int i : which) {
        auto params = params_of(o, spec);
        std::string name = prefix + std::to_string(i);
        params["generator"] = name;
        params["basis_kind"] = natural ? "natural" : "seminormal";
        Matrix g;
        std::string field = spec.field_label();
        if (i == 0) {
            g = zeroth_generator(m);
            if (natural) {
                Matrix aa = spec.family == Family::wreath_grn
                                ? a->map([&](const Scalar& x) { return to_cyclotomic(x, spec.r); }, g.field())
                                : *a;
                g = matmul(triangular_inverse(aa), matmul(g, aa));
            }
            field = g.field().name();
        } else if (i < m.n()) {
            g = natural ? natural_generator(m, *a, i) : seminormal_generator(m, i);
        } else {
            throw PreconditionError("generator index out of range");
        }
        docs.emplace_back(name, render_matrix(o, m, g, field, params, m.graph().nodes()));
    }
    if (docs.empty()) throw PreconditionError("no generators for a one-box shape");
    write_output(o, join_docs(o, docs));
    return 0;
}

int cmd_transition(const Options& o) {
    auto shape = std::make_shared<const Shape>(Shape::parse(o.shape));
    AlgebraSpec spec = make_spec(o, *shape);
    SeminormalModule m(spec, shape);
    auto params = params_of(o, spec);
    params["oracle"] = o.oracle;
    if (spec.family == Family::wreath_grn && o.oracle == "recursive") {
        params["oracle"] = "tensor";
        GrnTransition t = grn_transition(shape);
        write_output(o, render_matrix(o, m, t.matrix, "rational", params, t.basis));
        return 0;
    }
    Matrix a;
    if (o.oracle == "recursive")
        a = transition_recursive(m, o.threads);
    else if (o.oracle == "pathsum")
        a = transition_pathsum(m, o.max_n);
    else if (o.oracle == "word")
        a = transition_word(m);
    else
        throw ParseError("unknown oracle '" + o.oracle + "'");
    write_output(o, render_matrix(o, m, a, spec.field_label(), params, m.graph().nodes()));
    return 0;
}

int cmd_orthogonal(const Options& o) {
    auto shape = std::make_shared<const Shape>(Shape::parse(o.shape));
    AlgebraSpec spec = make_spec(o, *shape);
    SeminormalModule m(spec, shape);
    auto d2 = orthogonal_diag_squared(m);
    std::string fmt = o.format.empty() ? "json" : o.format;
    if (fmt == "csv") {
        std::string s = "word,d2\n";
        for (int k = 0; k < m.dim(); ++k) s += m.graph().node(k).word_string() + "," + d2[k].to_string() + "\n";
        write_output(o, s);
        return 0;
    }
    if (fmt != "json") throw ParseError("orthogonal data is exported as json or csv");
    json j;
    j["shape"] = shape->to_string();
    j["field"] = spec.field_label();
    json params = json::object();
    for (const auto& [k, v] : params_of(o, spec)) params[k] = v;
    params["signs"] = "positive";
    j["params"] = params;
    json basis = json::array();
    for (const auto& t : m.graph().nodes()) basis.push_back(json::parse(tableau_to_json(t)));
    j["basis"] = basis;
    json d = json::array();
    for (const auto& x : d2) d.push_back(x.to_string());
    j["d2"] = d;
    write_output(o, j.dump(1) + "\n");
    return 0;
}

int cmd_verify(const Options& o) {
    auto shape = std::make_shared<const Shape>(Shape::parse(o.shape));
    AlgebraSpec spec = make_spec(o, *shape);
    SeminormalModule m(spec, shape);
    json checks = json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool ok, const std::string& witness = "") {
        json e;
        e["check"] = name;
        e["status"] = ok ? "pass" : "fail";
        if (!ok && !witness.empty()) e["witness"] = witness;
        checks.push_back(e);
        all = all && ok;
    };
    const BruhatGraph& g = m.graph();
    record("graph.unique_minimum", g.levels().front().size() == 1 && g.node(0) == column_reading(shape));
    record("graph.unique_maximum", g.levels().back().size() == 1 && g.node(g.size() - 1) == row_reading(shape));
    for (const auto& r : verify_relations(m)) record("relation." + r.relation, r.passed, r.witness);
    Matrix a = transition_recursive(m, o.threads);
    if (m.n() <= o.max_n) record("transition.pathsum_agrees", transition_pathsum(m, o.max_n) == a);
    record("transition.word_agrees", transition_word(m) == a);
    StructureReport s = check_structure(g, a);
    record("transition.upper_triangular", s.upper_triangular);
    record("transition.bruhat_support", s.bruhat_support);
    record("transition.depth_blocks_diagonal", s.depth_blocks_diagonal);
    auto diag = diagonal_closed_form(m);
    bool diag_ok = true;
    for (int k = 0; k < m.dim(); ++k) diag_ok = diag_ok && a.at(k, k) == diag[k];
    record("transition.diagonal_closed_form", diag_ok);
    auto fails = check_orthogonal(m, orthogonal_diag_squared(m));
    record("orthogonal.squared_identities", fails.empty(),
           fails.empty() ? "" : fails[0].identity + " on edge s" + std::to_string(fails[0].edge.label));
    if (spec.family == Family::wreath_grn)
        record("grn.tensor_assembly", grn_transition(shape).in_canonical_order(g) == a);
    json j;
    j["shape"] = shape->to_string();
    j["family"] = family_name(spec.family);
    j["passed"] = all;
    j["checks"] = checks;
    write_output(o, j.dump(1) + "\n");
    return all ? 0 : 4;
}

int cmd_bench(const Options& o) {
    std::vector<ShapePtr> shapes;
    if (!o.shape.empty()) shapes.push_back(std::make_shared<const Shape>(Shape::parse(o.shape)));
    if (o.bench_n > 0)
        for (const auto& p : partitions_of(o.bench_n)) shapes.push_back(std::make_shared<const Shape>(Shape::partition(p)));
    if (shapes.empty()) throw PreconditionError("bench needs --shape or --n");
    std::string fmt = o.format.empty() ? "csv" : o.format;
    json rows = json::array();
    std::string csv = "shape,f,seconds,ops,bound\n";
    for (const auto& sh : shapes) {
        AlgebraSpec spec = make_spec(o, *sh);
        auto t0 = std::chrono::steady_clock::now();
        SeminormalModule m(spec, sh);
        RecursionStats st;
        transition_recursive(m, o.threads, &st);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::uint64_t f = m.dim();
        std::uint64_t bound = f * f + f;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", secs);
        csv += "\"" + sh->to_string() + "\"," + std::to_string(f) + "," + buf + "," + std::to_string(st.ops) + "," + std::to_string(bound) + "\n";
        rows.push_back({{"shape", sh->to_string()}, {"f", f}, {"seconds", secs}, {"ops", st.ops}, {"bound", bound}});
    }
    write_output(o, fmt == "json" ? rows.dump(1) + "\n" : csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seminormal, natural and orthogonal representations and their transition matrices"};
    app.require_subcommand(1, 1);
    Options o;
    auto add_common = [&](CLI::App* sub, bool shape_required) {
        auto* s = sub->add_option("--shape", o.shape, "shape, e.g. 3,2,1 or (2,1)|(1)");
        if (shape_required) s->required();
        sub->add_option("--family", o.family, "symmetric|hecke_A|hecke_B|ariki_koike|grn|affine_placed");
        sub->add_option("--r", o.r, "number of components");
        sub->add_option("--q", o.q, "sym or a rational value");
        sub->add_option("--u", o.u, "comma separated parameters u_1..u_r");
        sub->add_option("--format", o.format, "json|csv|dot");
        sub->add_option("--threads", o.threads, "worker cap")->check(CLI::Range(1, 256));
        sub->add_option("--out", o.out, "output file");
    };
    auto* tab = app.add_subcommand("tableaux", "standard tableaux with words, depths and inversions");
    auto* graph = app.add_subcommand("graph", "weak Bruhat graph");
    auto* semi = app.add_subcommand("seminormal", "seminormal generator matrices");
    auto* nat = app.add_subcommand("natural", "natural generator matrices");
    auto* tr = app.add_subcommand("transition", "transition matrix");
    auto* orth = app.add_subcommand("orthogonal", "squared orthogonal normalisation D^2");
    auto* ver = app.add_subcommand("verify", "relation and invariant report");
    auto* bench = app.add_subcommand("bench", "timing and operation counts of the recursion");
    for (auto* s : {tab, graph, semi, nat, tr, orth, ver}) add_common(s, true);
    add_common(bench, false);
    for (auto* s : {semi, nat}) s->add_option("--gen", o.gen, "generator index, 0 for the zeroth generator");
    tr->add_option("--oracle", o.oracle, "recursive|pathsum|word");
    for (auto* s : {tr, ver}) s->add_option("--max-n", o.max_n, "path-sum size cap");
    bench->add_option("--n", o.bench_n, "all partitions of n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("ParseError", e.what());
        return 2;
    }
    try {
        if (*tab) return cmd_tableaux(o);
        if (*graph) return cmd_graph(o);
        if (*semi) return cmd_generators(o, false);
        if (*nat) return cmd_generators(o, true);
        if (*tr) return cmd_transition(o);
        if (*orth) return cmd_orthogonal(o);
        if (*ver) return cmd_verify(o);
        if (*bench) return cmd_bench(o);
    } catch (const ParseError& e) {
        emit_error("ParseError", e.what());
        return 2;
    } catch (const FieldMismatch& e) {
        emit_error("FieldMismatch", e.what());
        return 3;
    } catch (const DivisionByZero& e) {
        emit_error("DivisionByZero", e.what());
        return 3;
    } catch (const DegenerateWeight& e) {
        emit_error("DegenerateWeight", e.what());
        return 3;
    } catch (const PreconditionError& e) {
        emit_error("PreconditionError", e.what());
        return 3;
    } catch (const InvariantError& e) {
        emit_error("InvariantError", e.what());
        return 4;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return 4;
    }
    return 0;
}
