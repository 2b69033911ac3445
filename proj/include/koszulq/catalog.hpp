#ifndef KOSZULQ_CATALOG_HPP
#define KOSZULQ_CATALOG_HPP

/**
 * @file catalog.hpp
 * @brief Built-in algebras and brackets, validated at construction.
 *
 * Quantum entries carry the algebra over Q[q^±1], its quadratic dual and the
 * semiclassical-limit bracket; Poisson entries carry the bracket, the
 * enveloping algebra and its dual presentation.  Presentations generated from
 * bracket data are diffed against literal transcribed tables, so the fixture
 * and the construction check each other.
 */

#include "dual.hpp"
#include "homology.hpp"
#include "poisson.hpp"
#include "weights.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace koszulq {

struct CatalogEntry {
    std::string name;
    std::string doc;

    // quantum side (empty for pure Poisson entries)
    std::optional<QuadraticAlgebra<Laurent>> qalg;
    std::optional<QuadraticAlgebra<Laurent>> qdual;

    // Poisson side (the semiclassical limit for quantum entries)
    std::optional<PoissonBracket> bracket;
    std::optional<QuadraticAlgebra<Rational>> enveloping;
    std::optional<QuadraticAlgebra<Rational>> enveloping_dual;

    std::optional<WeightVector> weights;

    bool is_quantum() const { return qalg.has_value(); }
};

CatalogEntry make_quantum_plane();
CatalogEntry make_quantum_affine(int n);
CatalogEntry make_quantum_matrices_2x2();
CatalogEntry make_poisson_plane();
CatalogEntry make_poisson_matrices();

// Lookup by CLI name (quantum_plane, quantum_affine_<n>, quantum_matrices_2x2,
// poisson_plane, poisson_matrices); entries are cached after first build.
const CatalogEntry& catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

// Transcribed fixtures. The two Poisson enveloping tables are diffed against
// generated presentations inside the poisson entry constructors.
std::vector<NcPoly<Rational>> transcribed_poisson_plane_relations();
std::vector<NcPoly<Rational>> transcribed_poisson_matrices_relations();
// Dual of the 2x2 quantum matrix algebra (ten relations).
std::vector<NcPoly<Laurent>> transcribed_mq_dual_relations();
// Relations among x_i ⊗ 1 and the scaled differentials in the enveloping
// algebra of the 2x2 quantum matrices (28 relations over Q[q^±1], on
// generators a,b,c,d,Oa,Ob,Oc,Od); reduces at q=1 to the presentation above.
std::vector<NcPoly<Laurent>> transcribed_mq_omega_relations();

} // namespace koszulq

#endif
