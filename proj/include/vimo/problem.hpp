#pragma once

#include "vimo/convex_function.hpp"
#include "vimo/convex_set.hpp"
#include "vimo/set_valued_operator.hpp"
#include "vimo/vector.hpp"

namespace vimo {

/// Problem data (A, phi, K, f): find y in K ∩ dom phi with
///   [A(y), xi - y]_+ + phi(xi) - phi(y) >= <f, xi - y>   for all xi in K ∩ dom phi.
/// Feasibility of K ∩ dom phi is certified by a witness supplied at
/// construction; the witness also anchors restricted (Galerkin) problems and
/// probe batteries.
class VIMOProblem {
public:
    VIMOProblem(SetValuedOperator a, ProperConvexFunction phi, ConvexSet k, Vector f,
                Vector feasible_witness);

    std::size_t dim() const { return f_.dim(); }
    const SetValuedOperator& A() const { return a_; }
    const ProperConvexFunction& phi() const { return phi_; }
    const ConvexSet& K() const { return k_; }
    const Vector& f() const { return f_; }
    const Vector& witness() const { return witness_; }

    /// Restriction to the coordinates `free`, anchoring the rest at the witness.
    VIMOProblem restrict(const std::vector<std::size_t>& free) const;

    /// Embeds a point of a restricted problem back into the full space.
    Vector embed(const std::vector<std::size_t>& free, const Vector& u) const;

private:
    SetValuedOperator a_;
    ProperConvexFunction phi_;
    ConvexSet k_;
    Vector f_;
    Vector witness_;
};

}  // namespace vimo
