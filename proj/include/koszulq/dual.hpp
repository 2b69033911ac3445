#ifndef KOSZULQ_DUAL_HPP
#define KOSZULQ_DUAL_HPP

/**
 * @file dual.hpp
 * @brief Quadratic duals: the algebra on dual generators whose relations span
 *        the annihilator of the original relation space, plus the numerical
 *        Koszulity check on Hilbert series.
 *
 * Pairing convention: <f⊗g, v⊗w> = f(v)g(w), so a dual relation has the same
 * word-coefficient layout as the annihilated vectors.
 */

#include "linalg_field.hpp"
#include "ncpoly.hpp"

namespace koszulq {

namespace detail {

inline std::vector<Rational> clear_row(const std::vector<Rational>& row) {
    BigInt l = 1;
    for (auto& v : row) l = boost::multiprecision::lcm(l, v.den());
    std::vector<Rational> out;
    BigInt g = 0;
    for (auto& v : row) {
        Rational s = v * Rational(l);
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(s.num()));
        out.push_back(s);
    }
    if (g > 1)
        for (auto& v : out) v /= Rational(g);
    return out;
}

inline std::vector<Laurent> clear_row(const std::vector<RatFunc>& row) {
    Laurent l(1);
    for (auto& v : row) l = exact_div(l * v.den(), laurent_gcd(l, v.den()));
    std::vector<Laurent> out;
    for (auto& v : row) out.push_back(v.num() * exact_div(l, v.den()));
    Laurent g;
    for (auto& s : out) g = laurent_gcd(g, s);
    if (!g.is_zero() && !g.is_one())
        for (auto& s : out) s = exact_div(s, g);
    Rational content;
    int shift = 0;
    bool first = true;
    for (auto& s : out) {
        content = rat_gcd(content, laurent_content(s));
        if (!s.is_zero()) {
            shift = first ? s.min_exp() : std::min(shift, s.min_exp());
            first = false;
        }
    }
    for (auto& s : out) {
        if (!content.is_zero() && !content.is_one()) s = s.scaled(content.inverse());
        if (shift != 0) s = s.shifted(-shift);
    }
    return out;
}

template <class S, class FF>
std::vector<S> row_to_scalar(const std::vector<FF>& row) {
    if constexpr (std::is_same_v<S, RatFunc>) return row;
    else return clear_row(row);
}

} // namespace detail

/// Annihilator presentation: dual generators in the same order, square-zero
/// behaviour inferred from the derived rules.  Throws DualNotPBW when the
/// dual rule set fails the overlap check.
template <class S>
QuadraticAlgebra<S> quadratic_dual(const QuadraticAlgebra<S>& alg) {
    using FF = typename scalar_traits<S>::fraction_field;
    const int n = alg.n_generators();
    for (int d : alg.gens.degrees)
        if (d != 1) throw std::invalid_argument("quadratic_dual: generators must have degree 1");

    // columns in pivot order so the echelonized annihilator basis is
    // canonical and oriented like the rule derivation
    std::vector<Word> cols = degree2_pivot_order(n);
    std::vector<int> col_index(n * n);
    for (int c = 0; c < n * n; ++c) col_index[cols[c][0] * n + cols[c][1]] = c;
    auto col_of = [&](Gen a, Gen b) { return col_index[a * n + b]; };
    auto word_of = [&](int col) { return cols[col]; };
    DenseMat<FF> rel;
    for (auto& r : alg.relations) {
        std::vector<FF> row(n * n, FF(0));
        for (auto& [w, c] : r.terms) row[col_of(w[0], w[1])] = scalar_traits<S>::to_fraction(c);
        rel.push_back(std::move(row));
    }
    DenseMat<FF> ann = kernel_basis(std::move(rel), n * n);
    std::vector<int> pivots;
    rref(ann, pivots);

    std::vector<std::string> dual_names;
    for (auto& nm : alg.gens.names) dual_names.push_back(nm + "*");
    std::vector<NcPoly<S>> dual_rels;
    for (auto& row : ann) {
        std::vector<S> cleared = detail::row_to_scalar<S>(row);
        NcPoly<S> r;
        for (int c = 0; c < n * n; ++c)
            if (!cleared[c].is_zero()) r.add_term(word_of(c), cleared[c]);
        dual_rels.push_back(std::move(r));
    }
    QuadraticAlgebra<S> dual(GeneratorSet::degree_one(std::move(dual_names)), std::move(dual_rels));
    ConfluenceReport rep = dual.confluence_check();
    if (!rep.ok())
        throw DualNotPBW("quadratic_dual: derived rule set not confluent, first overlap " +
                         dual.gens.word_str(rep.failures.front().overlap));
    return dual;
}

/// Necessary numerical Koszulity condition on truncated Hilbert series:
/// sum_i (-1)^i dim(dual_i) dim(alg_{m-i}) = [m == 0] for all m <= maxdeg.
template <class S>
bool koszul_numerical_check(const QuadraticAlgebra<S>& alg, const QuadraticAlgebra<S>& dual,
                            int maxdeg) {
    auto ha = alg.hilbert_coeffs(maxdeg);
    auto hd = dual.hilbert_coeffs(maxdeg);
    for (int m = 0; m <= maxdeg; ++m) {
        long long acc = 0;
        for (int i = 0; i <= m; ++i) {
            long long t = hd[i] * ha[m - i];
            acc += (i % 2 == 0) ? t : -t;
        }
        if (acc != (m == 0 ? 1 : 0)) return false;
    }
    return true;
}

/// Row-span equality of two relation lists inside V ⊗ V (degree-2 space).
template <class S>
bool same_relation_span(const GeneratorSet& gens, const std::vector<NcPoly<S>>& a,
                        const std::vector<NcPoly<S>>& b) {
    using FF = typename scalar_traits<S>::fraction_field;
    const int n = gens.size();
    auto fill = [&](const std::vector<NcPoly<S>>& rels) {
        DenseMat<FF> m;
        for (auto& r : rels) {
            std::vector<FF> row(n * n, FF(0));
            for (auto& [w, c] : r.terms) {
                if (w.size() != 2) throw std::invalid_argument("same_relation_span: not quadratic");
                row[w[0] * n + w[1]] = scalar_traits<S>::to_fraction(c);
            }
            m.push_back(std::move(row));
        }
        return m;
    };
    DenseMat<FF> ma = fill(a), mb = fill(b), mab = fill(a);
    for (auto& row : mb) mab.push_back(row);
    std::vector<int> piv;
    int ra = rref(ma, piv);
    int rb = rref(mb, piv);
    int rab = rref(mab, piv);
    return ra == rb && rb == rab;
}

} // namespace koszulq

#endif
