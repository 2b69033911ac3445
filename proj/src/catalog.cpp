#include <koszulq/catalog.hpp>
#include <koszulq/parse.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace koszulq {

namespace {

template <class S>
std::vector<NcPoly<S>> parse_relations(const GeneratorSet& gens,
                                       const std::vector<std::string>& lines) {
    std::vector<NcPoly<S>> rels;
    for (auto& l : lines) rels.push_back(parse_poly<S>(l, gens));
    return rels;
}

CommPoly bracket_poly(const GeneratorSet& vars, const std::string& text) {
    return commutativize(parse_poly<Rational>(text, vars), vars.size());
}

void validate_entry(const CatalogEntry& e, int koszul_depth) {
    if (e.qalg) {
        if (!e.qalg->confluence_check().ok())
            throw MismatchWithPaperTable(e.name + ": algebra rules not confluent");
        if (!e.qdual || !koszul_numerical_check(*e.qalg, *e.qdual, koszul_depth))
            throw MismatchWithPaperTable(e.name + ": Hilbert series Koszul identity fails");
        // the stored bracket must be the semiclassical limit
        PoissonBracket lim = semiclassical_limit(*e.qalg);
        const PoissonBracket& want = *e.bracket;
        for (int i = 0; i < lim.n_vars(); ++i)
            for (int j = i + 1; j < lim.n_vars(); ++j)
                if (lim.bracket_gen(i, j) != want.bracket_gen(i, j))
                    throw MismatchWithPaperTable(e.name + ": stored bracket differs from the q=1 limit");
    }
    if (e.bracket && !e.bracket->jacobi_check())
        throw MismatchWithPaperTable(e.name + ": bracket fails Jacobi");
    if (e.enveloping) {
        if (!e.enveloping_dual ||
            !koszul_numerical_check(*e.enveloping, *e.enveloping_dual,
                                    std::min(koszul_depth, 6)))
            throw MismatchWithPaperTable(e.name + ": enveloping Koszul identity fails");
        // generated dual presentation and the annihilator computation must agree
        QuadraticAlgebra<Rational> ann = quadratic_dual(*e.enveloping);
        if (!same_relation_span(ann.gens, ann.relations, e.enveloping_dual->relations))
            throw MismatchWithPaperTable(e.name + ": dual presentation span mismatch");
    }
}

} // namespace

CatalogEntry make_quantum_plane() {
    CatalogEntry e;
    e.name = "quantum_plane";
    e.doc = "coordinate ring of the quantum plane, xy = q yx";
    GeneratorSet gens = GeneratorSet::degree_one({"x", "y"});
    e.qalg = QuadraticAlgebra<Laurent>::checked(
        gens, parse_relations<Laurent>(gens, {"x.y - q*y.x"}), e.name);
    e.qdual = quadratic_dual(*e.qalg);
    e.bracket = PoissonBracket(gens, {{{0, 1}, bracket_poly(gens, "x*y")}});
    e.weights = WeightVector{{1, -1}, {-1, 1}};
    validate_entry(e, 8);
    return e;
}

CatalogEntry make_quantum_affine(int n) {
    if (n < 1) throw std::invalid_argument("quantum_affine: n must be positive");
    CatalogEntry e;
    e.name = "quantum_affine_" + std::to_string(n);
    e.doc = "coordinate ring of quantum affine " + std::to_string(n) + "-space";
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    GeneratorSet gens = GeneratorSet::degree_one(names);
    std::vector<NcPoly<Laurent>> rels;
    std::map<std::pair<int, int>, CommPoly> table;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            rels.push_back(parse_poly<Laurent>(
                names[i] + "." + names[j] + " - q*" + names[j] + "." + names[i], gens));
            table.emplace(std::make_pair(i, j), bracket_poly(gens, names[i] + "*" + names[j]));
        }
    e.qalg = QuadraticAlgebra<Laurent>::checked(gens, std::move(rels), e.name);
    e.qdual = quadratic_dual(*e.qalg);
    e.bracket = PoissonBracket(gens, std::move(table));
    validate_entry(e, n <= 3 ? 8 : 6);
    return e;
}

CatalogEntry make_quantum_matrices_2x2() {
    CatalogEntry e;
    e.name = "quantum_matrices_2x2";
    e.doc = "2x2 quantum matrix algebra";
    GeneratorSet gens = GeneratorSet::degree_one({"a", "b", "c", "d"});
    e.qalg = QuadraticAlgebra<Laurent>::checked(
        gens,
        parse_relations<Laurent>(gens, {
                                           "a.b - q*b.a",
                                           "a.c - q*c.a",
                                           "b.c - c.b",
                                           "b.d - q*d.b",
                                           "c.d - q*d.c",
                                           "a.d - d.a - (q - q^-1)*b.c",
                                       }),
        e.name);
    e.qdual = quadratic_dual(*e.qalg);
    // the dual must match the transcribed ten-relation table as a span
    if (!same_relation_span(e.qdual->gens, e.qdual->relations, transcribed_mq_dual_relations()))
        throw MismatchWithPaperTable(e.name + ": dual differs from the transcribed table");
    e.bracket = PoissonBracket(gens, {
                                         {{0, 1}, bracket_poly(gens, "a*b")},
                                         {{0, 2}, bracket_poly(gens, "a*c")},
                                         {{0, 3}, bracket_poly(gens, "2*b*c")},
                                         {{1, 3}, bracket_poly(gens, "b*d")},
                                         {{2, 3}, bracket_poly(gens, "c*d")},
                                     });
    e.weights = WeightVector{{1, 0, 0, -1}, {-1, 0, 0, 1}};
    validate_entry(e, 8);
    return e;
}

CatalogEntry make_poisson_plane() {
    CatalogEntry e;
    e.name = "poisson_plane";
    e.doc = "Poisson enveloping algebra of the plane with {x,y} = xy";
    GeneratorSet vars = GeneratorSet::degree_one({"x", "y"});
    e.bracket = PoissonBracket(vars, {{{0, 1}, bracket_poly(vars, "x*y")}});
    e.enveloping = poisson_enveloping(*e.bracket);
    if (!same_relation_span(e.enveloping->gens, e.enveloping->relations,
                            transcribed_poisson_plane_relations()))
        throw MismatchWithPaperTable(e.name + ": generated relations differ from the table");
    e.enveloping_dual = poisson_dual_presentation(*e.bracket);
    e.weights = WeightVector{{1, -1}, {-1, 1}};
    validate_entry(e, 8);
    return e;
}

CatalogEntry make_poisson_matrices() {
    CatalogEntry e;
    e.name = "poisson_matrices";
    e.doc = "Poisson enveloping algebra of the 2x2 matrix semiclassical limit";
    GeneratorSet vars = GeneratorSet::degree_one({"a", "b", "c", "d"});
    e.bracket = PoissonBracket(vars, {
                                         {{0, 1}, bracket_poly(vars, "a*b")},
                                         {{0, 2}, bracket_poly(vars, "a*c")},
                                         {{0, 3}, bracket_poly(vars, "2*b*c")},
                                         {{1, 3}, bracket_poly(vars, "b*d")},
                                         {{2, 3}, bracket_poly(vars, "c*d")},
                                     });
    e.enveloping = poisson_enveloping(*e.bracket);
    if (!same_relation_span(e.enveloping->gens, e.enveloping->relations,
                            transcribed_poisson_matrices_relations()))
        throw MismatchWithPaperTable(e.name + ": generated relations differ from the table");
    e.enveloping_dual = poisson_dual_presentation(*e.bracket);
    e.weights = WeightVector{{1, 0, 0, -1}, {-1, 0, 0, 1}};
    validate_entry(e, 6);
    return e;
}

const CatalogEntry& catalog_get(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<CatalogEntry>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return *it->second;
    CatalogEntry e;
    if (name == "quantum_plane") e = make_quantum_plane();
    else if (name == "quantum_matrices_2x2") e = make_quantum_matrices_2x2();
    else if (name == "poisson_plane") e = make_poisson_plane();
    else if (name == "poisson_matrices") e = make_poisson_matrices();
    else if (name.rfind("quantum_affine_", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(name.substr(15));
        } catch (...) {
            throw std::out_of_range("unknown catalog entry: " + name);
        }
        e = make_quantum_affine(n);
    } else {
        throw std::out_of_range("unknown catalog entry: " + name);
    }
    auto ptr = std::make_unique<CatalogEntry>(std::move(e));
    const CatalogEntry& ref = *ptr;
    cache.emplace(name, std::move(ptr));
    return ref;
}

std::vector<std::string> catalog_names() {
    return {"quantum_plane", "quantum_affine_3", "quantum_matrices_2x2", "poisson_plane",
            "poisson_matrices"};
}

std::vector<NcPoly<Rational>> transcribed_poisson_plane_relations() {
    GeneratorSet g = GeneratorSet::degree_one({"x", "y", "Ox", "Oy"});
    return parse_relations<Rational>(g, {
                                            "x.y - y.x",
                                            "Ox.x - x.Ox",
                                            "Ox.y - y.Ox - x.y",
                                            "Oy.x - x.Oy + x.y",
                                            "Oy.y - y.Oy",
                                            "Ox.Oy - Oy.Ox - x.Oy - y.Ox",
                                        });
}

std::vector<NcPoly<Rational>> transcribed_poisson_matrices_relations() {
    GeneratorSet g = GeneratorSet::degree_one({"a", "b", "c", "d", "Oa", "Ob", "Oc", "Od"});
    // the (Oc,d) right-hand side reads -c.d in the source table; that sign
    // contradicts both the bracket table and the Jacobi identity, so it is
    // transcribed corrected
    return parse_relations<Rational>(
        g, {
               "a.b - b.a", "a.c - c.a", "a.d - d.a", "b.c - c.b", "b.d - d.b", "c.d - d.c",
               "Oa.a - a.Oa",
               "Oa.b - b.Oa - a.b",
               "Oa.c - c.Oa - a.c",
               "Oa.d - d.Oa - 2*b.c",
               "Ob.a - a.Ob + a.b",
               "Ob.b - b.Ob",
               "Ob.c - c.Ob",
               "Ob.d - d.Ob - b.d",
               "Oc.a - a.Oc + a.c",
               "Oc.b - b.Oc",
               "Oc.c - c.Oc",
               "Oc.d - d.Oc - c.d",
               "Od.a - a.Od + 2*b.c",
               "Od.b - b.Od + b.d",
               "Od.c - c.Od + c.d",
               "Od.d - d.Od",
               "Oa.Ob - Ob.Oa - a.Ob - b.Oa",
               "Oa.Oc - Oc.Oa - a.Oc - c.Oa",
               "Oa.Od - Od.Oa - 2*b.Oc - 2*c.Ob",
               "Ob.Oc - Oc.Ob",
               "Ob.Od - Od.Ob - b.Od - d.Ob",
               "Oc.Od - Od.Oc - c.Od - d.Oc",
           });
}

std::vector<NcPoly<Laurent>> transcribed_mq_dual_relations() {
    GeneratorSet g = GeneratorSet::degree_one({"a*", "b*", "c*", "d*"});
    return parse_relations<Laurent>(g, {
                                           "a*.a*",
                                           "b*.b*",
                                           "c*.c*",
                                           "d*.d*",
                                           "b*.c* + c*.b* + (q - q^-1)*a*.d*",
                                           "q*a*.b* + b*.a*",
                                           "q*a*.c* + c*.a*",
                                           "a*.d* + d*.a*",
                                           "q*b*.d* + d*.b*",
                                           "q*c*.d* + d*.c*",
                                       });
}

std::vector<NcPoly<Laurent>> transcribed_mq_omega_relations() {
    GeneratorSet g = GeneratorSet::degree_one({"a", "b", "c", "d", "Oa", "Ob", "Oc", "Od"});
    // the (Oc,d) sign is corrected exactly as in the q=1 table
    return parse_relations<Laurent>(
        g, {
               "a.b - q*b.a", "a.c - q*c.a", "b.c - c.b", "b.d - q*d.b", "c.d - q*d.c",
               "a.d - d.a - (q - q^-1)*b.c",
               "Oa.a - a.Oa",
               "Oa.b - b.Oa - a.b",
               "Oa.c - c.Oa - a.c",
               "Oa.d - d.Oa - (1 + q^-1)*b.c",
               "Ob.a - a.Ob + a.b",
               "Ob.b - b.Ob",
               "Ob.c - c.Ob",
               "Ob.d - d.Ob - b.d",
               "Oc.a - a.Oc + a.c",
               "Oc.b - b.Oc",
               "Oc.c - c.Oc",
               "Oc.d - d.Oc - c.d",
               "Od.a - a.Od + (1 + q^-1)*b.c",
               "Od.b - b.Od + b.d",
               "Od.c - c.Od + c.d",
               "Od.d - d.Od",
               "q*Oa.Ob - Ob.Oa - a.Ob - b.Oa",
               "q*Oa.Oc - Oc.Oa - a.Oc - c.Oa",
               "Oa.Od - Od.Oa - (1 + q^-1)*b.Oc - (1 + q^-1)*c.Ob + (q - q^-1)*Ob.Oc",
               "Ob.Oc - Oc.Ob",
               "q*Ob.Od - Od.Ob - b.Od - d.Ob",
               "q*Oc.Od - Od.Oc - c.Od - d.Oc",
           });
}

} // namespace koszulq
