#ifndef KOSZULQ_HOMOLOGY_HPP
#define KOSZULQ_HOMOLOGY_HPP

/**
 * @file homology.hpp
 * @brief Bigraded cohomology dimensions, the q=1 rank-drop lifting check,
 *        torsion invariant factors, coset reduction of cocycles and the
 *        module-structure verification over the polynomial centre.
 *
 * When the complex carries a weight vector every computation splits into
 * weight-homogeneous blocks first; the differential is verified to be
 * weight-homogeneous as part of the split.
 */

#include "cocomplex.hpp"
#include "linalg_ff.hpp"
#include "snf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace koszulq {

namespace detail {

template <class S>
std::vector<GradedMatrix<S>> matrix_blocks(const KoszulComplex<S>& cx, int i, int j) {
    std::vector<GradedMatrix<S>> out;
    if (i < 0 || j < i || cx.dim(i, j) == 0) return out;
    const GradedMatrix<S>& m = cx.d(i, j);
    if (!cx.weights) {
        out.push_back(m);
        return out;
    }
    auto blocks = weight_decompose(m, cx.col_weights(i, j), cx.col_weights(i + 1, j + 2));
    for (auto& [w, b] : blocks) out.push_back(std::move(b));
    return out;
}

} // namespace detail

template <class S>
int rank_d(const KoszulComplex<S>& cx, int i, int j,
           PivotStrategy strategy = PivotStrategy::MinDegree) {
    int r = 0;
    for (auto& b : detail::matrix_blocks(cx, i, j)) r += matrix_rank(b, strategy);
    return r;
}

inline int rank_d_at(const KoszulComplex<Laurent>& cx, int i, int j,
                     const Rational& q_value = Rational(1)) {
    int r = 0;
    for (auto& b : detail::matrix_blocks(cx, i, j)) r += matrix_rank_at(b, q_value);
    return r;
}

/// dim H^{i,j} = dim ker d^{i,j} - rank d^{i-1,j-2}, exact over the fraction
/// field of the complex's coefficient ring.
template <class S>
long long cohomology_dim(const KoszulComplex<S>& cx, int i, int j) {
    if (i < 0 || j < i) return 0;
    long long dim = cx.dim(i, j);
    if (dim == 0) return 0;
    return dim - rank_d(cx, i, j) - rank_d(cx, i - 1, j - 2);
}

template <class S>
bool d_squared_zero(const KoszulComplex<S>& cx, int i, int j) {
    if (cx.dim(i, j) == 0 || cx.dim(i + 2, j + 4) == 0) return true;
    const GradedMatrix<S>& d1 = cx.d(i, j);
    const GradedMatrix<S>& d2 = cx.d(i + 1, j + 2);
    for (int c = 0; c < d1.n_cols; ++c) {
        std::vector<S> y = apply_matrix(d2, d1.dense_column(c));
        for (auto& v : y)
            if (!v.is_zero()) return false;
    }
    return true;
}

/// Rank at q=1 equals the generic rank; true at all bidegrees up to a cutoff
/// means the cohomology lattice has no (q-1)-torsion there.
inline bool q1_lifting_check(const KoszulComplex<Laurent>& scaled_cx, int i, int j) {
    return rank_d(scaled_cx, i, j) == rank_d_at(scaled_cx, i, j);
}

// ---- kernel lattices and torsion ----

namespace detail {

// saturated kernel of a Laurent matrix as columns of a unimodular transform
inline std::vector<std::vector<Laurent>> kernel_lattice(const GradedMatrix<Laurent>& m) {
    DenseMat<RatFunc> rows(m.n_rows, std::vector<RatFunc>(m.n_cols, RatFunc(0)));
    for (int c = 0; c < m.n_cols; ++c)
        for (auto& [r, v] : m.columns[c]) rows[r][c] = RatFunc(v);
    DenseMat<RatFunc> kern = kernel_basis(std::move(rows), m.n_cols);
    if (kern.empty()) return {};
    // columns of K span a finite-index sublattice of the kernel; saturate it
    DenseMat<Laurent> K(m.n_cols, std::vector<Laurent>(kern.size(), Laurent(0)));
    for (std::size_t k = 0; k < kern.size(); ++k) {
        std::vector<Laurent> v = clear_row(kern[k]);
        for (int r = 0; r < m.n_cols; ++r) K[r][k] = v[r];
    }
    DenseMat<Laurent> U;
    SnfResult snf = smith_normal_form(K, &U);
    std::vector<std::vector<Laurent>> basis;
    for (int k = 0; k < snf.rank; ++k) {
        std::vector<Laurent> col(m.n_cols);
        for (int r = 0; r < m.n_cols; ++r) col[r] = U[r][k];
        basis.push_back(std::move(col));
    }
    return basis;
}

// solve sum_k x_k K_k = b over Q(q); coordinates must come out integral when
// K is a saturated lattice basis and b lies in the lattice
inline std::vector<Laurent> solve_in_lattice(const std::vector<std::vector<Laurent>>& K,
                                             const std::vector<Laurent>& b) {
    const int n = K.empty() ? static_cast<int>(b.size()) : static_cast<int>(K[0].size());
    const int k = static_cast<int>(K.size());
    DenseMat<RatFunc> aug(n, std::vector<RatFunc>(k + 1, RatFunc(0)));
    for (int col = 0; col < k; ++col)
        for (int r = 0; r < n; ++r) aug[r][col] = RatFunc(K[col][r]);
    for (int r = 0; r < n; ++r) aug[r][k] = RatFunc(b[r]);
    std::vector<int> pivots;
    rref(aug, pivots);
    std::vector<Laurent> x(k, Laurent(0));
    for (std::size_t t = 0; t < pivots.size(); ++t) {
        if (pivots[t] == k)
            throw std::logic_error("solve_in_lattice: vector outside the kernel lattice");
        x[pivots[t]] = scalar_traits<Laurent>::from_fraction(aug[t][k]);
    }
    return x;
}

} // namespace detail

/// Invariant factors of the torsion of H^{i,j} over Q[q^±1], computed from
/// the incoming differential expressed in a saturated basis of the outgoing
/// kernel lattice; factors are canonical associates, nonunits only.
inline std::vector<Laurent> torsion_report(const KoszulComplex<Laurent>& scaled_cx, int i, int j) {
    if (i < 0 || j < i || scaled_cx.dim(i, j) == 0) return {};
    // one relation block per weight; the global Smith form of the
    // block-diagonal relation matrix is the canonical invariant chain
    std::vector<GradedMatrix<Laurent>> out_blocks, in_blocks;
    if (scaled_cx.weights) {
        auto split_out = weight_decompose(scaled_cx.d(i, j), scaled_cx.col_weights(i, j),
                                          scaled_cx.col_weights(i + 1, j + 2));
        std::map<int, GradedMatrix<Laurent>> split_in;
        if (i >= 1 && j >= i + 1 && scaled_cx.dim(i - 1, j - 2) > 0)
            split_in = weight_decompose(scaled_cx.d(i - 1, j - 2),
                                        scaled_cx.col_weights(i - 1, j - 2),
                                        scaled_cx.col_weights(i, j));
        for (auto& [w, b] : split_out) {
            out_blocks.push_back(b);
            auto it = split_in.find(w);
            in_blocks.push_back(it == split_in.end() ? GradedMatrix<Laurent>{} : it->second);
        }
    } else {
        out_blocks.push_back(scaled_cx.d(i, j));
        if (i >= 1 && scaled_cx.dim(i - 1, j - 2) > 0)
            in_blocks.push_back(scaled_cx.d(i - 1, j - 2));
        else
            in_blocks.push_back(GradedMatrix<Laurent>{});
    }

    std::vector<DenseMat<Laurent>> relation_blocks;
    std::vector<std::pair<int, int>> shapes;
    for (std::size_t t = 0; t < out_blocks.size(); ++t) {
        auto K = detail::kernel_lattice(out_blocks[t]);
        if (K.empty()) continue;
        const GradedMatrix<Laurent>& in = in_blocks[t];
        DenseMat<Laurent> rel(K.size(), std::vector<Laurent>(std::max(in.n_cols, 0), Laurent(0)));
        for (int c = 0; c < in.n_cols; ++c) {
            std::vector<Laurent> b = in.dense_column(c);
            std::vector<Laurent> x = detail::solve_in_lattice(K, b);
            for (std::size_t r = 0; r < K.size(); ++r) rel[r][c] = x[r];
        }
        shapes.emplace_back(static_cast<int>(K.size()), in.n_cols);
        relation_blocks.push_back(std::move(rel));
    }
    // assemble block diagonal
    int total_r = 0, total_c = 0;
    for (auto& [r, c] : shapes) { total_r += r; total_c += c; }
    if (total_r == 0) return {};
    DenseMat<Laurent> rel(total_r, std::vector<Laurent>(std::max(total_c, 1), Laurent(0)));
    int ro = 0, co = 0;
    for (std::size_t t = 0; t < relation_blocks.size(); ++t) {
        for (int r = 0; r < shapes[t].first; ++r)
            for (int c = 0; c < shapes[t].second; ++c) rel[ro + r][co + c] = relation_blocks[t][r][c];
        ro += shapes[t].first;
        co += shapes[t].second;
    }
    return smith_normal_form(std::move(rel)).nonunit_factors();
}

// ---- coset reduction ----

/// Deterministic residue of a cocycle modulo the image of the incoming
/// differential: the image basis is echelonized against the fixed basis
/// order, and z is reduced against it.  Zero residue iff z is a coboundary.
template <class S>
std::vector<typename scalar_traits<S>::fraction_field>
class_reduce(const KoszulComplex<S>& cx, const Cochain<S>& z, int i, int j) {
    using FF = typename scalar_traits<S>::fraction_field;
    std::vector<S> coords = cx.coordinates(z, i, j);
    if (cx.dim(i + 1, j + 2) > 0) {
        std::vector<S> dz = apply_matrix(cx.d(i, j), coords);
        for (auto& v : dz)
            if (!v.is_zero())
                throw NotACocycle("class_reduce: element at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") is not a cocycle");
    }
    std::vector<FF> x;
    for (auto& v : coords) x.push_back(scalar_traits<S>::to_fraction(v));
    // echelonize the image columns in the fixed row order
    std::vector<std::vector<FF>> echelon; // each with leading entry 1 at its pivot
    std::vector<int> pivots;
    if (i >= 1 && cx.dim(i - 1, j - 2) > 0) {
        const GradedMatrix<S>& in = cx.d(i - 1, j - 2);
        for (int c = 0; c < in.n_cols; ++c) {
            std::vector<S> col = in.dense_column(c);
            std::vector<FF> v;
            for (auto& t : col) v.push_back(scalar_traits<S>::to_fraction(t));
            for (std::size_t e = 0; e < echelon.size(); ++e)
                if (!v[pivots[e]].is_zero()) {
                    FF f = v[pivots[e]];
                    for (std::size_t r = 0; r < v.size(); ++r) v[r] -= f * echelon[e][r];
                }
            int p = -1;
            for (std::size_t r = 0; r < v.size(); ++r)
                if (!v[r].is_zero()) { p = static_cast<int>(r); break; }
            if (p < 0) continue;
            FF inv = v[p].inverse();
            for (auto& t : v) t = t * inv;
            echelon.push_back(std::move(v));
            pivots.push_back(p);
        }
    }
    for (std::size_t e = 0; e < echelon.size(); ++e)
        if (!x[pivots[e]].is_zero()) {
            FF f = x[pivots[e]];
            for (std::size_t r = 0; r < x.size(); ++r) x[r] -= f * echelon[e][r];
        }
    return x;
}

// ---- module structure over the polynomial centre ----

struct ClaimedGenerator {
    Cochain<Rational> rep;
    bool trivial = false; // the centre is claimed to act trivially on it
    std::string name;
};

struct ModuleCheckResult {
    enum class Status { Free, TrivialSummand, Mismatch };
    Status status = Status::Free;
    std::string detail;
    struct Row {
        int i, j;
        long long claimed, dim;
    };
    std::vector<Row> table;
    bool ok() const { return status != Status::Mismatch; }
};

namespace detail {

inline Cochain<Rational> comm_mul(const CommPoly& p, const Cochain<Rational>& z, int n) {
    Cochain<Rational> out;
    for (auto& [k, c] : z.terms) {
        CommPoly f = CommPoly::monomial(CommPoly::word_to_exp(k.first, n), c);
        CommPoly prod = f * p;
        for (auto& [e, cf] : prod.terms) out.add_term(CommPoly::exp_to_word(e), k.second, cf);
    }
    return out;
}

inline int cochain_hom(const Cochain<Rational>& z) {
    return z.is_zero() ? 0 : static_cast<int>(z.terms.begin()->first.second.size());
}
inline int cochain_internal(const Cochain<Rational>& z) {
    if (z.is_zero()) return 0;
    auto& k = z.terms.begin()->first;
    return static_cast<int>(k.first.size() + k.second.size());
}

} // namespace detail

/// Verify that the claimed generators, multiplied by all powers of the
/// central element, are cocycles with independent classes that span every
/// bidegree up to the cutoff.  Generators flagged trivial must have their
/// first centre multiple reduce to zero.
inline ModuleCheckResult module_structure_check(const KoszulComplex<Rational>& cx,
                                                const PoissonBracket& B, const CommPoly& center,
                                                const std::vector<ClaimedGenerator>& gens,
                                                int cutoff) {
    const int n = B.n_vars();
    for (int g = 0; g < n; ++g)
        if (!B.bracket_eval(center, CommPoly::variable(n, g)).is_zero())
            throw std::invalid_argument("module_structure_check: centre is not Poisson-central");
    int cdeg = center.degree();
    ModuleCheckResult res;
    bool any_trivial = false;

    // trivially-acted generators: the centre multiple must be a coboundary
    for (auto& g : gens) {
        if (!g.trivial) continue;
        any_trivial = true;
        Cochain<Rational> zg = detail::comm_mul(center, g.rep, n);
        int gi = detail::cochain_hom(g.rep), gj = detail::cochain_internal(g.rep);
        auto residue = class_reduce(cx, zg, gi, gj + cdeg);
        for (auto& v : residue)
            if (!v.is_zero()) {
                res.status = ModuleCheckResult::Status::Mismatch;
                res.detail = "centre multiple of " + g.name + " is not a coboundary";
                return res;
            }
    }

    for (int i = 0; i <= cx.top_i; ++i) {
        for (int j = i; j <= cutoff; ++j) {
            std::vector<Cochain<Rational>> candidates;
            for (auto& g : gens) {
                if (detail::cochain_hom(g.rep) != i) continue;
                int d0 = detail::cochain_internal(g.rep);
                if (j < d0 || (j - d0) % cdeg != 0) continue;
                int m = (j - d0) / cdeg;
                if (g.trivial && m > 0) continue;
                CommPoly pw = CommPoly::constant(n, Rational(1));
                for (int t = 0; t < m; ++t) pw = pw * center;
                candidates.push_back(detail::comm_mul(pw, g.rep, n));
            }
            long long dim = cohomology_dim(cx, i, j);
            res.table.push_back({i, j, static_cast<long long>(candidates.size()), dim});
            if (candidates.empty() && dim == 0) continue;
            // cocycles with independent residues spanning the cohomology
            DenseMat<Rational> residues;
            for (auto& z : candidates) residues.push_back(class_reduce(cx, z, i, j));
            std::vector<int> piv;
            int rk = rref(residues, piv);
            if (rk != static_cast<long long>(candidates.size()) ||
                static_cast<long long>(candidates.size()) != dim) {
                res.status = ModuleCheckResult::Status::Mismatch;
                res.detail = "bidegree (" + std::to_string(i) + "," + std::to_string(j) +
                             "): claimed " + std::to_string(candidates.size()) + ", independent " +
                             std::to_string(rk) + ", dim " + std::to_string(dim);
                return res;
            }
        }
    }
    res.status = any_trivial ? ModuleCheckResult::Status::TrivialSummand
                             : ModuleCheckResult::Status::Free;
    return res;
}

// ---- consistency checks ----

/// Alternating-sum identity along the diagonal through (0, c): the Euler
/// characteristics of cochains and cohomology agree.
template <class S>
bool euler_diagonal_check(const KoszulComplex<S>& cx, int c) {
    long long lhs = 0, rhs = 0;
    for (int i = 0; i <= cx.top_i; ++i) {
        int j = c + 2 * i;
        if (j < i) continue;
        long long sign = (i % 2 == 0) ? 1 : -1;
        lhs += sign * cx.dim(i, j);
        rhs += sign * cohomology_dim(cx, i, j);
    }
    return lhs == rhs;
}

} // namespace koszulq

#endif
