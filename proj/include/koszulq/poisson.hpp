#ifndef KOSZULQ_POISSON_HPP
#define KOSZULQ_POISSON_HPP

/**
 * @file poisson.hpp
 * @brief Quadratic Poisson brackets on polynomial algebras: evaluation,
 *        Jacobi verification, the enveloping algebra and its quadratic dual,
 *        the dual-side action of the y* generators, and semiclassical limits.
 */

#include "commpoly.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "ncpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace koszulq {

class PoissonBracket {
public:
    GeneratorSet vars; // commutative variables, degree 1

    PoissonBracket() = default;

    // table entries for i < j; omitted pairs are zero
    PoissonBracket(GeneratorSet v, std::map<std::pair<int, int>, CommPoly> table)
        : vars(std::move(v)) {
        const int n = vars.size();
        table_.assign(n, std::vector<CommPoly>(n));
        for (auto& [ij, p] : table) {
            auto [i, j] = ij;
            if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
                throw std::invalid_argument("PoissonBracket: table key must have i < j");
            if (!p.is_zero() && !p.is_homogeneous(2))
                throw std::invalid_argument("PoissonBracket: {" + vars.names[i] + "," +
                                            vars.names[j] + "} is not homogeneous quadratic");
            table_[i][j] = p;
        }
    }

    int n_vars() const { return vars.size(); }

    // {x_i, x_j} with antisymmetry built in
    CommPoly bracket_gen(int i, int j) const {
        if (i == j) return CommPoly();
        return i < j ? table_[i][j] : -table_[j][i];
    }

    CommPoly partial(int i, int j, int k) const { return bracket_gen(i, j).partial(k); }

    // second partial of {x_i,x_j}; a rational number by quadratic homogeneity
    Rational hessian(int i, int j, int m, int n2) const {
        CommPoly p = bracket_gen(i, j).partial(m).partial(n2);
        Rational r;
        for (auto& [e, c] : p.terms) r += c;
        return r;
    }

    // Biderivation extension:
    // {f,g} = sum_{i<j} (df/dx_i dg/dx_j - df/dx_j dg/dx_i) {x_i,x_j}
    CommPoly bracket_eval(const CommPoly& f, const CommPoly& g) const {
        const int n = n_vars();
        std::vector<CommPoly> df(n), dg(n);
        for (int i = 0; i < n; ++i) { df[i] = f.partial(i); dg[i] = g.partial(i); }
        CommPoly r;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (table_[i][j].is_zero()) continue;
                r += (df[i] * dg[j] - df[j] * dg[i]) * table_[i][j];
            }
        return r;
    }

    struct JacobiWitness {
        int i, j, k;
        CommPoly value;
    };

    // first failing triple if any
    std::optional<JacobiWitness> jacobi_witness() const {
        const int n = n_vars();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    CommPoly xi = CommPoly::variable(n, i);
                    CommPoly xj = CommPoly::variable(n, j);
                    CommPoly xk = CommPoly::variable(n, k);
                    CommPoly jac = bracket_eval(xi, bracket_gen(j, k)) +
                                   bracket_eval(xj, bracket_gen(k, i)) +
                                   bracket_eval(xk, bracket_gen(i, j));
                    if (!jac.is_zero()) return JacobiWitness{i, j, k, jac};
                }
        return std::nullopt;
    }
    bool jacobi_check() const { return !jacobi_witness().has_value(); }

private:
    std::vector<std::vector<CommPoly>> table_;
};

namespace detail {

// embed a commutative polynomial as the sorted-word element of P(A)
inline NcPoly<Rational> iota(const CommPoly& p) {
    NcPoly<Rational> r;
    for (auto& [e, c] : p.terms) r.add_term(CommPoly::exp_to_word(e), c);
    return r;
}

} // namespace detail

/// P(A): generators y_1..y_n, O(y_1)..O(y_n) with the commutation, mixed and
/// Omega-Omega relation families derived from the bracket table.
inline QuadraticAlgebra<Rational> poisson_enveloping(const PoissonBracket& B) {
    if (auto w = B.jacobi_witness())
        throw std::invalid_argument("poisson_enveloping: bracket fails Jacobi at (" +
                                    B.vars.names[w->i] + "," + B.vars.names[w->j] + "," +
                                    B.vars.names[w->k] + ")");
    const int n = B.n_vars();
    std::vector<std::string> names = B.vars.names;
    for (auto& nm : B.vars.names) names.push_back("O" + nm);
    auto Y = [&](int i) { return static_cast<Gen>(i); };
    auto O = [&](int i) { return static_cast<Gen>(n + i); };

    std::vector<NcPoly<Rational>> rels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            NcPoly<Rational> r;
            r.add_term({Y(i), Y(j)}, Rational(1));
            r.add_term({Y(j), Y(i)}, Rational(-1));
            rels.push_back(std::move(r));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NcPoly<Rational> r;
            r.add_term({O(i), Y(j)}, Rational(1));
            r.add_term({Y(j), O(i)}, Rational(-1));
            r -= detail::iota(B.bracket_gen(i, j));
            rels.push_back(std::move(r));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            NcPoly<Rational> r;
            r.add_term({O(i), O(j)}, Rational(1));
            r.add_term({O(j), O(i)}, Rational(-1));
            for (int k = 0; k < n; ++k) {
                CommPoly pk = B.partial(i, j, k); // linear
                for (auto& [e, c] : pk.terms) {
                    Word w = CommPoly::exp_to_word(e); // single variable
                    w.push_back(O(k));
                    r.add_term(w, -c);
                }
            }
            rels.push_back(std::move(r));
        }
    return QuadraticAlgebra<Rational>::checked(
        GeneratorSet::degree_one(std::move(names)), std::move(rels), "poisson_enveloping");
}

/// P(A)^! presented directly from the bracket Hessian; equals
/// quadratic_dual(poisson_enveloping(B)) as a relation span.
inline QuadraticAlgebra<Rational> poisson_dual_presentation(const PoissonBracket& B) {
    const int n = B.n_vars();
    std::vector<std::string> names;
    for (auto& nm : B.vars.names) names.push_back(nm + "*");
    for (auto& nm : B.vars.names) names.push_back("O" + nm + "*");
    auto Ys = [&](int i) { return static_cast<Gen>(i); };
    auto Os = [&](int i) { return static_cast<Gen>(n + i); };

    std::vector<NcPoly<Rational>> rels;
    // O(y_i)* O(y_j)* + O(y_j)* O(y_i)*, i <= j
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            NcPoly<Rational> r;
            r.add_term({Os(i), Os(j)}, Rational(1));
            r.add_term({Os(j), Os(i)}, Rational(1)); // i == j collapses to 2*square
            rels.push_back(std::move(r));
        }
    // O(y_m)* y_n* + y_n* O(y_m)* + sum_{i<j} hess_{mn}{x_i,x_j} O(y_i)* O(y_j)*
    for (int m = 0; m < n; ++m)
        for (int n2 = 0; n2 < n; ++n2) {
            NcPoly<Rational> r;
            r.add_term({Os(m), Ys(n2)}, Rational(1));
            r.add_term({Ys(n2), Os(m)}, Rational(1));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    r.add_term({Os(i), Os(j)}, B.hessian(i, j, m, n2));
            rels.push_back(std::move(r));
        }
    // y_m* y_n* + y_n* y_m* + sum_{i<j} hess_{mn}{x_i,x_j} (O(y_i)* y_j* - O(y_j)* y_i*)
    // (the + on the sum is forced: with a - the vector fails to annihilate the
    // mixed enveloping relations, so it is not a dual relation at all)
    for (int m = 0; m < n; ++m)
        for (int n2 = m; n2 < n; ++n2) {
            NcPoly<Rational> r;
            r.add_term({Ys(m), Ys(n2)}, Rational(1));
            r.add_term({Ys(n2), Ys(m)}, Rational(1)); // m == n2 collapses to 2*square
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Rational h = B.hessian(i, j, m, n2);
                    if (h.is_zero()) continue;
                    r.add_term({Os(i), Ys(j)}, h);
                    r.add_term({Os(j), Ys(i)}, -h);
                }
            rels.push_back(std::move(r));
        }
    return QuadraticAlgebra<Rational>::checked(
        GeneratorSet::degree_one(std::move(names)), std::move(rels), "poisson_dual_presentation");
}

/// Left action of y_n* on the exterior algebra A^! = <O(y_1)*,...,O(y_n)*>.
/// Base case y_n* . O(y_m)* = -sum_{i<j} hess_{mn} O(y_i)* O(y_j)*, extended by
/// y* . (O(y_m)* w) = (y* . O(y_m)*) w - O(y_m)* (y* . w); y* . 1 = 0.
inline ExtElem ystar_action(const PoissonBracket& B, int n_index, ExtMask w) {
    const int n = B.n_vars();
    if (w == 0) return ExtElem();
    int m = std::countr_zero(w);
    ExtMask rest = w & (w - 1);
    ExtElem base;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational h = B.hessian(i, j, m, n_index);
            if (!h.is_zero()) base.add_term((ExtMask(1) << i) | (ExtMask(1) << j), -h);
        }
    ExtElem out = wedge(base, ExtElem::basis(rest));
    ExtElem tail = ystar_action(B, n_index, rest);
    out -= wedge(ExtElem::basis(ExtMask(1) << m), tail);
    return out;
}

inline ExtElem ystar_action(const PoissonBracket& B, int n_index, const ExtElem& w) {
    ExtElem out;
    for (auto& [m, c] : w.terms) out += ystar_action(B, n_index, m).scaled(c);
    return out;
}

/// Extract the semiclassical-limit bracket of a q-algebra: requires every
/// commutator x_i x_j - x_j x_i to be divisible by (q-1), and the q=1
/// reduction of the whole rule set to be plain commutativity.
inline PoissonBracket semiclassical_limit(const QuadraticAlgebra<Laurent>& qalg) {
    const int n = qalg.n_generators();
    // q=1 reduction of each rule must be commutativity
    for (Gen a = 0; a < static_cast<Gen>(n); ++a)
        for (Gen b = 0; b < static_cast<Gen>(n); ++b) {
            if (!qalg.has_rule(a, b)) continue;
            if (a == b)
                throw NoSemiclassicalLimit("square rule " + qalg.gens.word_str({a, a}) +
                                           " has no commutative q=1 reduction");
            NcPoly<Rational> red;
            for (auto& [w, c] : qalg.rule(a, b).terms) red.add_term(w, c.eval_q1());
            Word sorted{std::min(a, b), std::max(a, b)};
            NcPoly<Rational> expect = NcPoly<Rational>::monomial(sorted);
            if (red != expect)
                throw NoSemiclassicalLimit("rule for " + qalg.gens.word_str({a, b}) +
                                           " does not reduce to commutativity at q=1");
        }
    std::map<std::pair<int, int>, CommPoly> table;
    Laurent qm1 = Laurent::q_power(1) - Laurent(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Gen gi = static_cast<Gen>(i), gj = static_cast<Gen>(j);
            NcPoly<Laurent> comm =
                qalg.normal_form(NcPoly<Laurent>::monomial({gi, gj})) -
                qalg.normal_form(NcPoly<Laurent>::monomial({gj, gi}));
            NcPoly<Rational> beta_q1;
            for (auto& [w, c] : comm.terms) {
                Laurent beta;
                try {
                    beta = exact_div(c, qm1);
                } catch (const NotDivisible&) {
                    throw NoSemiclassicalLimit("commutator of " + qalg.gens.names[i] + ", " +
                                               qalg.gens.names[j] + " is not divisible by q-1");
                }
                beta_q1.add_term(w, beta.eval_q1());
            }
            CommPoly p = commutativize(beta_q1, n);
            if (!p.is_zero()) table.emplace(std::make_pair(i, j), std::move(p));
        }
    PoissonBracket B(GeneratorSet::degree_one(qalg.gens.names), std::move(table));
    if (auto w = B.jacobi_witness())
        throw NoSemiclassicalLimit("limit bracket fails Jacobi at (" + qalg.gens.names[w->i] +
                                   "," + qalg.gens.names[w->j] + "," + qalg.gens.names[w->k] + ")");
    return B;
}

} // namespace koszulq

#endif
