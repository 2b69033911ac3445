#ifndef KOSZULQ_COCOMPLEX_HPP
#define KOSZULQ_COCOMPLEX_HPP

/**
 * @file cocomplex.hpp
 * @brief The Koszul cocomplexes: the Hochschild side Λ ⊗ Λ^! with
 *        d(λ⊗μ) = Σ_g (gλ ⊗ g*μ + (-1)^{|μ|+1} λg ⊗ μg*),
 *        the Poisson side A ⊗ A^! with
 *        d(f⊗ω) = Σ_g ({x_g,f} ⊗ Ω(g)*∧ω + x_g f ⊗ y_g*·ω),
 *        the scaled q-form, the contracting homotopy, the product, and the
 *        alternating-forms differential used as an independent oracle.
 */

#include "complex.hpp"
#include "dual.hpp"
#include "poisson.hpp"

namespace koszulq {

// ---- Hochschild side ----

template <class S>
KoszulComplex<S> hochschild_complex(const QuadraticAlgebra<S>& alg,
                                    const QuadraticAlgebra<S>& dual,
                                    std::optional<WeightVector> weights = std::nullopt) {
    if (alg.n_generators() != dual.n_generators())
        throw std::invalid_argument("hochschild_complex: generator count mismatch");
    KoszulComplex<S> cx;
    cx.name = "hochschild";
    cx.alg_gens = alg.gens;
    cx.dual_gens = dual.gens;
    cx.alg_basis = [alg](int m) { return alg.graded_basis(m); };
    cx.dual_basis = [dual](int m) { return dual.graded_basis(m); };
    const int n = alg.n_generators();
    cx.apply = [alg, dual, n](const Word& w, const Word& mu) {
        Cochain<S> out;
        const bool negate = (mu.size() % 2) == 0; // (-1)^{|mu|+1} on the right term
        for (Gen g = 0; g < static_cast<Gen>(n); ++g) {
            Word gw{g}, gs{g};
            NcPoly<S> left_a = alg.multiply(NcPoly<S>::monomial(gw), NcPoly<S>::monomial(w));
            NcPoly<S> left_d = dual.multiply(NcPoly<S>::monomial(gs), NcPoly<S>::monomial(mu));
            for (auto& [wa, ca] : left_a.terms)
                for (auto& [wd, cd] : left_d.terms) out.add_term(wa, wd, ca * cd);
            NcPoly<S> right_a = alg.multiply(NcPoly<S>::monomial(w), NcPoly<S>::monomial(gw));
            NcPoly<S> right_d = dual.multiply(NcPoly<S>::monomial(mu), NcPoly<S>::monomial(gs));
            for (auto& [wa, ca] : right_a.terms)
                for (auto& [wd, cd] : right_d.terms) {
                    S v = ca * cd;
                    out.add_term(wa, wd, negate ? -v : v);
                }
        }
        return out;
    };
    // top homological degree: first empty graded piece of the dual
    int top = 0;
    for (int m = 1; m <= 2 * n + 1; ++m) {
        if (dual.graded_basis(m).empty()) { top = m - 1; break; }
        if (m == 2 * n + 1)
            throw std::invalid_argument("hochschild_complex: dual has no top degree <= 2n");
    }
    cx.top_i = top;
    cx.weights = std::move(weights);
    return cx;
}

// ---- Poisson side ----

namespace detail {

inline Word mask_to_word(ExtMask m) {
    Word w;
    for (int i = 0; i < 32; ++i)
        if (m & (ExtMask(1) << i)) w.push_back(static_cast<Gen>(i));
    return w;
}
inline ExtMask word_to_mask(const Word& w) {
    ExtMask m = 0;
    for (Gen g : w) m |= ExtMask(1) << g;
    return m;
}

inline std::vector<Word> monomial_words(int n, int degree) {
    std::vector<Word> out;
    Word w;
    std::function<void(int, Gen)> rec = [&](int remaining, Gen from) {
        if (remaining == 0) { out.push_back(w); return; }
        for (Gen g = from; g < static_cast<Gen>(n); ++g) {
            w.push_back(g);
            rec(remaining - 1, g);
            w.pop_back();
        }
    };
    rec(degree, 0);
    return out;
}

inline std::vector<Word> subset_words(int n, int size) {
    std::vector<Word> out;
    Word w;
    std::function<void(int, Gen)> rec = [&](int remaining, Gen from) {
        if (remaining == 0) { out.push_back(w); return; }
        for (Gen g = from; g < static_cast<Gen>(n); ++g) {
            w.push_back(g);
            rec(remaining - 1, static_cast<Gen>(g + 1));
            w.pop_back();
        }
    };
    rec(size, 0);
    return out;
}

inline void add_comm_ext(Cochain<Rational>& out, const CommPoly& f, const ExtElem& e) {
    for (auto& [ef, cf] : f.terms)
        for (auto& [m, cm] : e.terms)
            out.add_term(CommPoly::exp_to_word(ef), mask_to_word(m), cf * cm);
}

inline GeneratorSet poisson_dual_gens(const GeneratorSet& vars) {
    std::vector<std::string> names;
    for (auto& nm : vars.names) names.push_back("O" + nm + "*");
    return GeneratorSet::degree_one(names);
}

} // namespace detail

inline KoszulComplex<Rational> poisson_complex(const PoissonBracket& B,
                                               std::optional<WeightVector> weights = std::nullopt) {
    if (auto w = B.jacobi_witness())
        throw std::invalid_argument("poisson_complex: bracket fails Jacobi at (" +
                                    B.vars.names[w->i] + "," + B.vars.names[w->j] + "," +
                                    B.vars.names[w->k] + ")");
    KoszulComplex<Rational> cx;
    cx.name = "poisson";
    cx.alg_gens = B.vars;
    cx.dual_gens = detail::poisson_dual_gens(B.vars);
    const int n = B.n_vars();
    cx.alg_basis = [n](int m) { return detail::monomial_words(n, m); };
    cx.dual_basis = [n](int m) { return detail::subset_words(n, m); };
    cx.apply = [B, n](const Word& w, const Word& mu) {
        CommPoly f = CommPoly::monomial(CommPoly::word_to_exp(w, n), Rational(1));
        ExtMask mask = detail::word_to_mask(mu);
        Cochain<Rational> out;
        for (int g = 0; g < n; ++g) {
            CommPoly xg = CommPoly::variable(n, g);
            // {x_g, f} ⊗ Ω(g)* ∧ ω
            int s = wedge_sign(ExtMask(1) << g, mask);
            if (s != 0) {
                CommPoly br = B.bracket_eval(xg, f);
                detail::add_comm_ext(out, br.scaled(Rational(s)),
                                     ExtElem::basis(mask | (ExtMask(1) << g)));
            }
            // x_g f ⊗ y_g* . ω
            ExtElem act = ystar_action(B, g, mask);
            if (!act.is_zero()) detail::add_comm_ext(out, xg * f, act);
        }
        return out;
    };
    cx.top_i = n;
    cx.weights = std::move(weights);
    return cx;
}

// ---- scaled q-form ----

/// Entries divided exactly by q-1 (the scaled-dual-generator basis); throws
/// NotDivisible if some entry is not divisible, falsifying the q-form claim.
inline GradedMatrix<Laurent> scaled_form(const GradedMatrix<Laurent>& m) {
    Laurent qm1 = Laurent::q_power(1) - Laurent(1);
    return m.map_entries([&](const Laurent& v) { return exact_div(v, qm1); });
}

inline KoszulComplex<Laurent> scaled_complex(const KoszulComplex<Laurent>& cx) {
    KoszulComplex<Laurent> out = cx;
    out.name = cx.name + "_scaled";
    Laurent qm1 = Laurent::q_power(1) - Laurent(1);
    auto inner = cx.apply;
    out.apply = [inner, qm1](const Word& w, const Word& mu) {
        Cochain<Laurent> z = inner(w, mu);
        Cochain<Laurent> s;
        for (auto& [k, v] : z.terms) s.add_term(k.first, k.second, exact_div(v, qm1));
        return s;
    };
    return out;
}

// ---- contracting homotopy on the Poisson side ----

/// h = Σ_g ∂_g ⊗ ∂_g*: C^{i,j} -> C^{i-1,j-2}.
inline GradedMatrix<Rational> homotopy_matrix(const KoszulComplex<Rational>& cx,
                                              const PoissonBracket& B, int i, int j) {
    const int n = B.n_vars();
    GradedMatrix<Rational> m;
    m.i = i;
    m.j = j;
    auto src = cx.basis(i, j);
    auto dst = cx.basis(i - 1, j - 2);
    m.n_cols = static_cast<int>(src.size());
    m.n_rows = static_cast<int>(dst.size());
    std::map<KoszulComplex<Rational>::BasisPair, int> index;
    for (int r = 0; r < m.n_rows; ++r) index.emplace(dst[r], r);
    for (auto& p : src) m.col_labels.push_back(cx.label(p));
    for (auto& p : dst) m.row_labels.push_back(cx.label(p));
    m.columns.resize(src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        CommPoly f = CommPoly::monomial(CommPoly::word_to_exp(src[c].first, n), Rational(1));
        ExtMask mask = detail::word_to_mask(src[c].second);
        Cochain<Rational> out;
        for (int g = 0; g < n; ++g) {
            if (!(mask & (ExtMask(1) << g))) continue;
            CommPoly df = f.partial(g);
            if (df.is_zero()) continue;
            Rational sign(sign_below(mask, g));
            detail::add_comm_ext(out, df.scaled(sign),
                                 ExtElem::basis(mask & ~(ExtMask(1) << g)));
        }
        for (auto& [k, v] : out.terms) m.columns[c].emplace_back(index.at(k), v);
        std::sort(m.columns[c].begin(), m.columns[c].end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
    }
    return m;
}

// ---- product on the Hochschild cocomplex ----

/// (λ1⊗μ1)(λ2⊗μ2) = λ1λ2 ⊗ μ1μ2.  The differential is a graded derivation
/// for this product with respect to homological degree; the derivation check
/// is a test, not an assumption.
template <class S>
Cochain<S> dga_product(const Cochain<S>& u, const Cochain<S>& v, const QuadraticAlgebra<S>& alg,
                       const QuadraticAlgebra<S>& dual) {
    Cochain<S> out;
    for (auto& [ku, cu] : u.terms)
        for (auto& [kv, cv] : v.terms) {
            NcPoly<S> pa = alg.multiply(NcPoly<S>::monomial(ku.first), NcPoly<S>::monomial(kv.first));
            NcPoly<S> pd =
                dual.multiply(NcPoly<S>::monomial(ku.second), NcPoly<S>::monomial(kv.second));
            S c = cu * cv;
            for (auto& [wa, ca] : pa.terms)
                for (auto& [wd, cd] : pd.terms) out.add_term(wa, wd, c * ca * cd);
        }
    return out;
}

template <class S>
Cochain<S> apply_differential(const KoszulComplex<S>& cx, const Cochain<S>& z) {
    Cochain<S> out;
    for (auto& [k, c] : z.terms) {
        Cochain<S> dz = cx.apply(k.first, k.second);
        out += dz.scaled(c);
    }
    return out;
}

// ---- Cartan-Chevalley-Eilenberg oracle ----

/// Differential of the A-multilinear alternating forms on the free module of
/// differentials, in the basis dual to ascending wedges; under the
/// identification a ⊗ Ω(x_g)^-wedge ↦ a ⊗ Ω(y_g)*-word it must equal the
/// Koszul-side poisson differential.  Computed from the Lie bracket
/// [aΩ(x), bΩ(y)] = a{x,b}Ω(y) + b{a,y}Ω(x) + abΩ({x,y}) and A-linearity,
/// an entirely independent route.
inline GradedMatrix<Rational> cce_matrix(const KoszulComplex<Rational>& cx,
                                         const PoissonBracket& B, int i, int j) {
    const int n = B.n_vars();
    GradedMatrix<Rational> m;
    m.i = i;
    m.j = j;
    auto src = cx.basis(i, j);
    auto dst = cx.basis(i + 1, j + 2);
    m.n_cols = static_cast<int>(src.size());
    m.n_rows = static_cast<int>(dst.size());
    std::map<KoszulComplex<Rational>::BasisPair, int> index;
    for (int r = 0; r < m.n_rows; ++r) index.emplace(dst[r], r);
    for (auto& p : src) m.col_labels.push_back(cx.label(p));
    for (auto& p : dst) m.row_labels.push_back(cx.label(p));
    m.columns.resize(src.size());

    auto subsets = detail::subset_words(n, i + 1);
    for (std::size_t c = 0; c < src.size(); ++c) {
        CommPoly f = CommPoly::monomial(CommPoly::word_to_exp(src[c].first, n), Rational(1));
        const Word& T = src[c].second;
        // evaluate the form (f on wedge T) on a list of indices, A-linearly
        auto eval_f = [&](std::vector<int> L) -> CommPoly {
            std::vector<int> sorted = L;
            int sign = 1;
            for (std::size_t a = 0; a < sorted.size(); ++a)
                for (std::size_t b = a + 1; b < sorted.size(); ++b) {
                    if (sorted[a] == sorted[b]) return CommPoly();
                    if (sorted[a] > sorted[b]) { std::swap(sorted[a], sorted[b]); sign = -sign; }
                }
            if (static_cast<int>(sorted.size()) != static_cast<int>(T.size())) return CommPoly();
            for (std::size_t a = 0; a < sorted.size(); ++a)
                if (sorted[a] != static_cast<int>(T[a])) return CommPoly();
            return f.scaled(Rational(sign));
        };
        Cochain<Rational> out;
        for (auto& U : subsets) {
            CommPoly val;
            // first sum: the Lie action of the omitted generator
            for (std::size_t a = 0; a < U.size(); ++a) {
                std::vector<int> rest;
                for (std::size_t b = 0; b < U.size(); ++b)
                    if (b != a) rest.push_back(U[b]);
                CommPoly fv = eval_f(rest);
                if (fv.is_zero()) continue;
                CommPoly act = B.bracket_eval(CommPoly::variable(n, U[a]), fv);
                val += (a % 2 == 0) ? act : -act; // (-1)^{a+1} with 1-based a
            }
            // second sum: insert the bracket of two omitted generators
            for (std::size_t a = 0; a < U.size(); ++a)
                for (std::size_t b = a + 1; b < U.size(); ++b) {
                    std::vector<int> rest;
                    for (std::size_t t = 0; t < U.size(); ++t)
                        if (t != a && t != b) rest.push_back(U[t]);
                    int sgn = ((a + b) % 2 == 0) ? 1 : -1; // (-1)^{j+k} with 1-based j,k
                    for (int r = 0; r < n; ++r) {
                        CommPoly pr = B.partial(U[a], U[b], r);
                        if (pr.is_zero()) continue;
                        std::vector<int> L;
                        L.push_back(r);
                        for (int t : rest) L.push_back(t);
                        CommPoly fv = eval_f(L);
                        if (fv.is_zero()) continue;
                        val += (pr * fv).scaled(Rational(sgn));
                    }
                }
            if (val.is_zero()) continue;
            for (auto& [e, cf] : val.terms)
                out.add_term(CommPoly::exp_to_word(e), U, cf);
        }
        for (auto& [k, v] : out.terms) m.columns[c].emplace_back(index.at(k), v);
        std::sort(m.columns[c].begin(), m.columns[c].end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
    }
    return m;
}

} // namespace koszulq

#endif
