#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "opradius/matrix.hpp"
#include "opradius/radii.hpp"

namespace opradius {

enum class Signature { single_matrix, matrix_pair, vector_triple, vector_pair_unit };
enum class RelationKind { bound, chain, equality };
enum class Precondition { none, square_zero, accretive_dissipative, normal };
enum class CheckStatus { Satisfied, Violated, Inconclusive };

const char* signature_name(Signature s);
const char* kind_name(RelationKind k);
const char* precondition_name(Precondition p);
const char* status_name(CheckStatus s);

/// One evaluated scalar term: value plus a conservative absolute accuracy
/// accumulated from any sup-optimizers inside it.
struct TermValue {
    double value = 0.0;
    double accuracy = 0.0;
};

/// One registry entry. `evaluate` computes every term of the statement, in
/// order, on inputs that already satisfy the precondition.
struct Relation {
    std::string id;
    Signature signature;
    RelationKind kind;
    Precondition precondition;
    std::vector<std::string> term_names;
    std::function<std::vector<TermValue>(const std::vector<ComplexMatrix>&, const SweepConfig&)> evaluate;
    std::string description; // the statement itself, in ASCII math
    std::string source;      // short family name for documentation tooling
};

/// Outcome of checking a relation on concrete inputs. For bounds and chains
/// `slack` is the minimum of rhs-lhs over adjacent pairs; for equalities it
/// is -|difference|. A pair is Satisfied within `tolerance_used`, Violated
/// only when it fails by more than tolerance plus the combined accuracy of
/// the pair's terms, and Inconclusive in between.
struct BoundReport {
    std::string relation_id;
    std::vector<std::pair<std::string, double>> term_values;
    double slack = 0.0;
    CheckStatus status = CheckStatus::Satisfied;
    double tolerance_used = 0.0;
    std::string inputs_digest;
};

/// The full immutable registry, R01..R37.
const std::vector<Relation>& list_relations();

/// Throws std::invalid_argument for an unknown id.
const Relation& find_relation(const std::string& id);

/// Evaluates a relation on concrete inputs. tol < 0 selects the defaults:
/// 1e-9*(1+|rhs|) per adjacent pair for bounds/chains, 1e-6 absolute for
/// equalities. Throws on unknown id, signature mismatch, or an input that
/// fails the relation's precondition.
BoundReport evaluate_relation(const std::string& id, const std::vector<ComplexMatrix>& inputs,
                              double tol = -1.0, const SweepConfig& cfg = SweepConfig{});

/// As evaluate_relation, but the id must name a chain.
BoundReport evaluate_chain(const std::string& id, const std::vector<ComplexMatrix>& inputs,
                           double tol = -1.0, const SweepConfig& cfg = SweepConfig{});

// -- vector-level inequalities ----------------------------------------------

/// |<x,y>|^2 + |<x,z>|^2 <= ||x|| ||<x,y>y + <x,z>z||
///                       <= ||x|| sqrt(|<x,y>|^2||y||^2 + |<x,z>|^2||z||^2
///                                     + 2|<x,y>||<x,z>||<y,z>|)
BoundReport check_generalized_cauchy_schwarz(const ComplexVector& x, const ComplexVector& y,
                                             const ComplexVector& z, double tol = 1e-12);

/// |<x,e>|^2 + |<y,e>|^2 <= ||<e,x>x + <e,y>y||
///                       <= sqrt(|<x,e>|^2||x||^2 + |<y,e>|^2||y||^2
///                               + 2|<x,e>||<y,e>||<x,y>|),  ||e|| = 1.
BoundReport check_eq4(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                      double tol = 1e-12);

/// cos(yx) cos(xz) <= (1/2) sqrt(cos^2(yx) + cos^2(xz) + 2 cos(yx)cos(xz)cos(zy))
/// with cos(ab) = |<a,b>| / (||a|| ||b||); all three vectors nonzero.
BoundReport check_angle_inequality(const ComplexVector& x, const ComplexVector& y,
                                   const ComplexVector& z, double tol = 1e-12);

/// |<Tx,y>| <= sqrt(<|T|x,x> <|T*|y,y>)
BoundReport check_mixed_schwarz(const ComplexMatrix& t, const ComplexVector& x,
                                const ComplexVector& y, double tol = 1e-12);

/// Registry as a JSON document (id, kind, signature, precondition, terms,
/// description, source) for documentation tooling.
std::string registry_json();

} // namespace opradius
