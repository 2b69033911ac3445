#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <koszulq/catalog.hpp>
#include <koszulq/homology.hpp>
#include <koszulq/parse.hpp>

#include <random>

using namespace koszulq;

namespace {

const CatalogEntry& plane() { return catalog_get("quantum_plane"); }
const CatalogEntry& mq() { return catalog_get("quantum_matrices_2x2"); }

KoszulComplex<Laurent> plane_hh() {
    return hochschild_complex(*plane().qalg, *plane().qdual, plane().weights);
}
KoszulComplex<Laurent> mq_hh() {
    return hochschild_complex(*mq().qalg, *mq().qdual, mq().weights);
}
KoszulComplex<Rational> m_hp() { return poisson_complex(*mq().bracket, mq().weights); }
KoszulComplex<Rational> plane_hp() { return poisson_complex(*plane().bracket, plane().weights); }

template <class S>
Cochain<S> CW(const QuadraticAlgebra<S>& alg, const GeneratorSet& dual_gens,
              const std::string& alg_text, const std::string& dual_text) {
    NcPoly<S> pa = parse_poly<S>(alg_text, alg.gens);
    NcPoly<S> pd = parse_poly<S>(dual_text, dual_gens);
    Cochain<S> z;
    for (auto& [wa, ca] : pa.terms)
        for (auto& [wd, cd] : pd.terms) z.add_term(wa, wd, ca * cd);
    return z;
}

bool matrices_equal(const GradedMatrix<Rational>& a, const GradedMatrix<Rational>& b) {
    if (a.n_rows != b.n_rows || a.n_cols != b.n_cols) return false;
    for (int c = 0; c < a.n_cols; ++c)
        if (a.columns[c] != b.columns[c]) return false;
    return true;
}

} // namespace

TEST_CASE("bidegree dimensions factor through both tensor slots") {
    auto cx = mq_hh();
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 8; ++j)
            CHECK(cx.dim(i, j) ==
                  static_cast<int>(mq().qdual->graded_basis(i).size() *
                                   mq().qalg->graded_basis(j - i).size()));
    CHECK(cx.top_i == 4);
    CHECK(plane_hh().top_i == 2);
}

TEST_CASE("hochschild differential on the quantum plane") {
    auto cx = plane_hh();
    // d(y ⊗ 1) = (1 - q^-1) xy ⊗ x*
    Cochain<Laurent> dy = cx.apply(parse_poly<Laurent>("y", plane().qalg->gens).terms.begin()->first, {});
    CHECK(dy == CW(*plane().qalg, plane().qdual->gens, "(1 - q^-1)*x.y", "x*"));
    // top dual degree maps into the zero space
    GradedMatrix<Laurent> top = cx.assemble(2, 4);
    CHECK(top.n_rows == 0);
}

TEST_CASE("poisson differential on the matrix bracket") {
    auto cx = m_hp();
    const GeneratorSet& vars = mq().bracket->vars;
    GeneratorSet dg = cx.dual_gens;
    auto word = [&](const std::string& t) {
        return parse_poly<Rational>(t, vars).terms.begin()->first;
    };
    // d(a ⊗ 1) = -ab⊗O(b)* - ac⊗O(c)* - 2bc⊗O(d)*
    Cochain<Rational> da = cx.apply(word("a"), {});
    Cochain<Rational> expect;
    auto add = [&](const std::string& at, const std::string& dt, int coeff) {
        NcPoly<Rational> pa = parse_poly<Rational>(at, vars);
        NcPoly<Rational> pd = parse_poly<Rational>(dt, dg);
        for (auto& [wa, ca] : pa.terms)
            for (auto& [wd, cd] : pd.terms) expect.add_term(wa, wd, ca * cd * Rational(coeff));
    };
    add("a.b", "Ob*", -1);
    add("a.c", "Oc*", -1);
    add("b.c", "Od*", -2);
    CHECK(da == expect);
    // d(1 ⊗ 1) = 0
    CHECK(cx.apply({}, {}).is_zero());
    // powers of the determinant are cocycles
    GeneratorSet vg = vars;
    for (int m = 1; m <= 3; ++m) {
        CommPoly delta = commutativize(parse_poly<Rational>("a.d - b.c", vg), 4);
        CommPoly pw = CommPoly::constant(4, Rational(1));
        for (int t = 0; t < m; ++t) pw = pw * delta;
        Cochain<Rational> z;
        for (auto& [e, c] : pw.terms) z.add_term(CommPoly::exp_to_word(e), {}, c);
        Cochain<Rational> dz = apply_differential(cx, z);
        CHECK(dz.is_zero());
    }
}

TEST_CASE("d∘d = 0 on every catalog complex") {
    auto phh = plane_hh();
    for (int i = 0; i <= 2; ++i)
        for (int j = i; j <= 8; ++j) CHECK(d_squared_zero(phh, i, j));
    auto mhh = mq_hh();
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 6; ++j) CHECK(d_squared_zero(mhh, i, j));
    auto mhp = m_hp();
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 6; ++j) CHECK(d_squared_zero(mhp, i, j));
    auto php = plane_hp();
    for (int i = 0; i <= 2; ++i)
        for (int j = i; j <= 8; ++j) CHECK(d_squared_zero(php, i, j));
    auto a3 = catalog_get("quantum_affine_3");
    auto a3hh = hochschild_complex(*a3.qalg, *a3.qdual);
    for (int i = 0; i <= 3; ++i)
        for (int j = i; j <= 5; ++j) CHECK(d_squared_zero(a3hh, i, j));
}

TEST_CASE("scaled form divides exactly by q-1 and reduces to the poisson differential") {
    auto scaled = scaled_complex(mq_hh());
    auto hp = m_hp();
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 6; ++j) {
            const GradedMatrix<Laurent>& qm = scaled.d(i, j);
            GradedMatrix<Rational> at1 =
                qm.map_entries([](const Laurent& v) { return v.eval_q1(); });
            CHECK(matrices_equal(at1, hp.d(i, j)));
        }
    auto ps = scaled_complex(plane_hh());
    auto php = plane_hp();
    for (int i = 0; i <= 2; ++i)
        for (int j = i; j <= 6; ++j) {
            GradedMatrix<Rational> at1 =
                ps.d(i, j).map_entries([](const Laurent& v) { return v.eval_q1(); });
            CHECK(matrices_equal(at1, php.d(i, j)));
        }
    // scaled plane column for y^b x^a carries coefficients [b], -[a] on the
    // descending-word inputs
    auto cxp = plane_hh();
    const auto& pg = plane().qalg->gens;
    for (int b = 0; b <= 3; ++b)
        for (int a = 0; a <= 3; ++a) {
            std::string w;
            for (int t = 0; t < b; ++t) w += (w.empty() ? "y" : ".y");
            for (int t = 0; t < a; ++t) w += (w.empty() ? "x" : ".x");
            NcPoly<Laurent> elem =
                plane().qalg->normal_form(parse_poly<Laurent>(w.empty() ? "1" : w, pg));
            Cochain<Laurent> z;
            for (auto& [wrd, c] : elem.terms) z.add_term(wrd, {}, c);
            Cochain<Laurent> dz = apply_differential(cxp, z);
            Laurent qm1 = Laurent::q_power(1) - Laurent(1);
            // expected: (q-1) ([b] y^b x^{a+1} ⊗ x* - [a] y^{b+1} x^a ⊗ y*)
            std::string wx = w.empty() ? "x" : ("x." + w); // products, then normalized
            NcPoly<Laurent> ex1 = plane().qalg->normal_form(
                parse_poly<Laurent>(w.empty() ? "x" : w + ".x", pg));
            NcPoly<Laurent> ex2 = plane().qalg->normal_form(
                parse_poly<Laurent>(w.empty() ? "y" : "y." + w, pg));
            Cochain<Laurent> want;
            for (auto& [wrd, c] : ex1.terms)
                want.add_term(wrd, {static_cast<Gen>(0)}, c * qint(b) * qm1);
            for (auto& [wrd, c] : ex2.terms)
                want.add_term(wrd, {static_cast<Gen>(1)}, -(c * qint(a) * qm1));
            CHECK(dz == want);
        }
    // a non-divisible matrix is rejected
    GradedMatrix<Laurent> bad;
    bad.i = 0;
    bad.j = 0;
    bad.n_rows = 1;
    bad.n_cols = 1;
    bad.row_labels = {"r"};
    bad.col_labels = {"c"};
    bad.columns = {{{0, Laurent(1)}}};
    CHECK_THROWS_AS(scaled_form(bad), NotDivisible);
}

TEST_CASE("homotopy: he + eh is diagonal with the grade eigenvalue") {
    auto cx = m_hp();
    const PoissonBracket& B = *mq().bracket;
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 6; ++j) {
            int dim = cx.dim(i, j);
            if (dim == 0) continue;
            auto basis = cx.basis(i, j);
            const GradedMatrix<Rational>& e_out = cx.d(i, j);
            GradedMatrix<Rational> h_here = homotopy_matrix(cx, B, i, j);
            GradedMatrix<Rational> h_up = homotopy_matrix(cx, B, i + 1, j + 2);
            for (int c = 0; c < dim; ++c) {
                // eigenvalue 2(l - l' - i + i') from the exponents of a and d
                const Word& aw = basis[c].first;
                const Word& dw = basis[c].second;
                int ea = 0, ed = 0;
                for (Gen g : aw) { if (g == 0) ++ea; if (g == 3) ++ed; }
                bool oa = false, od = false;
                for (Gen g : dw) { if (g == 0) oa = true; if (g == 3) od = true; }
                int eig = 2 * (ed - (od ? 1 : 0) - ea + (oa ? 1 : 0));
                std::vector<Rational> v(dim, Rational(0));
                v[c] = Rational(1);
                std::vector<Rational> he, eh(dim, Rational(0));
                if (i >= 1 && j >= i + 1) {
                    auto hv = apply_matrix(h_here, v);
                    he = apply_matrix(cx.d(i - 1, j - 2), hv);
                } else {
                    he.assign(dim, Rational(0));
                }
                if (cx.dim(i + 1, j + 2) > 0) eh = apply_matrix(h_up, apply_matrix(e_out, v));
                for (int r = 0; r < dim; ++r) {
                    Rational want = (r == c) ? Rational(eig) : Rational(0);
                    CHECK(he[r] + eh[r] == want);
                }
            }
        }
}

TEST_CASE("homotopy spot values") {
    auto cx = m_hp();
    const PoissonBracket& B = *mq().bracket;
    // (he+eh)(a ⊗ O(d)*) = -4 a ⊗ O(d)*
    auto basis = cx.basis(1, 2);
    int col = -1;
    for (int c = 0; c < static_cast<int>(basis.size()); ++c)
        if (cx.label(basis[c]) == "a|Od*") col = c;
    REQUIRE(col >= 0);
    std::vector<Rational> v(basis.size(), Rational(0));
    v[col] = Rational(1);
    auto he = apply_matrix(cx.d(0, 0), apply_matrix(homotopy_matrix(cx, B, 1, 2), v));
    auto eh = apply_matrix(homotopy_matrix(cx, B, 2, 4), apply_matrix(cx.d(1, 2), v));
    for (int r = 0; r < static_cast<int>(basis.size()); ++r)
        CHECK(he[r] + eh[r] == (r == col ? Rational(-4) : Rational(0)));
}

TEST_CASE("weight decomposition") {
    auto cx = m_hp();
    const GradedMatrix<Rational>& m = cx.d(0, 2);
    auto blocks = weight_decompose(m, cx.col_weights(0, 2), cx.col_weights(1, 4));
    int total = 0;
    for (auto& [w, b] : blocks) total += b.n_cols;
    CHECK(total == m.n_cols);
    CHECK(blocks.count(2) == 1);  // a^2
    CHECK(blocks.at(2).n_cols == 1);
    CHECK(blocks.at(1).n_cols == 2);  // ab, ac
    CHECK(blocks.at(0).n_cols == 4);  // ad, b^2, bc, c^2
    // zero weights give a single block equal to the input
    std::vector<int> zc(m.n_cols, 0), zr(m.n_rows, 0);
    auto single = weight_decompose(m, zc, zr);
    CHECK(single.size() == 1);
    CHECK(matrices_equal(single.at(0), m));
    // wrong weights are rejected
    std::vector<int> badc(m.n_cols, 0), badr(m.n_rows, 1);
    CHECK_THROWS_AS(weight_decompose(m, badc, badr), NotHomogeneous);
}

TEST_CASE("both differentials preserve the stored weight vector") {
    auto hh = mq_hh();
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 6; ++j) {
            if (hh.dim(i, j) == 0) continue;
            CHECK_NOTHROW(weight_decompose(hh.d(i, j), hh.col_weights(i, j),
                                           hh.col_weights(i + 1, j + 2)));
        }
    auto hp = m_hp();
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 6; ++j) {
            if (hp.dim(i, j) == 0) continue;
            CHECK_NOTHROW(weight_decompose(hp.d(i, j), hp.col_weights(i, j),
                                           hp.col_weights(i + 1, j + 2)));
        }
}

TEST_CASE("dga product: unit, disjoint factors, derivation rule") {
    const auto& alg = *mq().qalg;
    const auto& dual = *mq().qdual;
    auto cx = mq_hh();
    Cochain<Laurent> one = Cochain<Laurent>::wedge({}, {});
    Cochain<Laurent> xa = CW(alg, dual.gens, "a", "1");
    Cochain<Laurent> xs = CW(alg, dual.gens, "1", "a*");
    CHECK(dga_product(one, xa, alg, dual) == xa);
    CHECK(dga_product(xa, one, alg, dual) == xa);
    CHECK(dga_product(xa, xs, alg, dual) == CW(alg, dual.gens, "a", "a*"));

    // d(uv) = d(u)v + (-1)^{|u|} u d(v) on random homogeneous pairs
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> gen(0, 3), len(0, 2), dlen(0, 2);
    auto random_cochain = [&](int& hom) {
        Word w, mu;
        int lw = len(rng), lm = dlen(rng);
        for (int t = 0; t < lw; ++t) w.push_back(static_cast<Gen>(gen(rng)));
        // dual words must be normal to be meaningful basis elements
        NcPoly<Laurent> dn;
        for (int tries = 0; tries < 20 && dn.is_zero(); ++tries) {
            Word cand;
            for (int t = 0; t < lm; ++t) cand.push_back(static_cast<Gen>(gen(rng)));
            dn = dual.normal_form(NcPoly<Laurent>::monomial(cand));
        }
        hom = lm;
        Cochain<Laurent> z;
        NcPoly<Laurent> an = alg.normal_form(NcPoly<Laurent>::monomial(w));
        for (auto& [wa, ca] : an.terms)
            for (auto& [wd, cd] : dn.terms) z.add_term(wa, wd, ca * cd);
        return z;
    };
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        int hu = 0, hv = 0;
        Cochain<Laurent> u = random_cochain(hu), v = random_cochain(hv);
        if (u.is_zero() || v.is_zero()) continue;
        ++checked;
        Cochain<Laurent> uv = dga_product(u, v, alg, dual);
        Cochain<Laurent> lhs = apply_differential(cx, uv);
        Cochain<Laurent> rhs = dga_product(apply_differential(cx, u), v, alg, dual);
        Cochain<Laurent> udv = dga_product(u, apply_differential(cx, v), alg, dual);
        if (hu % 2 == 0) rhs += udv;
        else rhs -= udv;
        CHECK(lhs == rhs);
    }
    CHECK(checked >= 50);
}

TEST_CASE("alternating-forms oracle agrees with the koszul-side differential") {
    auto mhp = m_hp();
    const PoissonBracket& MB = *mq().bracket;
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 6; ++j) {
            if (mhp.dim(i, j) == 0) continue;
            GradedMatrix<Rational> oracle = cce_matrix(mhp, MB, i, j);
            CHECK(matrices_equal(oracle, mhp.d(i, j)));
        }
    auto php = plane_hp();
    const PoissonBracket& PB = *plane().bracket;
    for (int i = 0; i <= 2; ++i)
        for (int j = i; j <= 6; ++j) {
            if (php.dim(i, j) == 0) continue;
            GradedMatrix<Rational> oracle = cce_matrix(php, PB, i, j);
            CHECK(matrices_equal(oracle, php.d(i, j)));
        }
}

TEST_CASE("the quantum determinant is central and a cocycle") {
    const auto& alg = *mq().qalg;
    NcPoly<Laurent> dq = parse_poly<Laurent>("a.d - q*b.c", alg.gens);
    for (int g = 0; g < 4; ++g) {
        NcPoly<Laurent> gp = NcPoly<Laurent>::monomial({static_cast<Gen>(g)});
        CHECK(alg.multiply(gp, dq) == alg.multiply(dq, gp));
    }
    auto cx = mq_hh();
    Cochain<Laurent> z;
    for (auto& [w, c] : alg.normal_form(dq).terms) z.add_term(w, {}, c);
    CHECK(apply_differential(cx, z).is_zero());
}
