#include "vimo/problem.hpp"

#include <stdexcept>

#include "vimo/extended_real.hpp"

namespace vimo {

VIMOProblem::VIMOProblem(SetValuedOperator a, ProperConvexFunction phi, ConvexSet k, Vector f,
                         Vector feasible_witness)
    : a_(std::move(a)),
      phi_(std::move(phi)),
      k_(std::move(k)),
      f_(std::move(f)),
      witness_(std::move(feasible_witness)) {
    const std::size_t n = f_.dim();
    if (a_.dim() != n || phi_.dim() != n || k_.dim() != n || witness_.dim() != n) {
        throw std::invalid_argument("VIMOProblem: dimensions disagree");
    }
    if (!k_.contains(witness_, 1e-7)) {
        throw std::invalid_argument("VIMOProblem: witness is not in K");
    }
    if (phi_.value(witness_) == ext::infinity) {
        throw std::invalid_argument("VIMOProblem: witness is outside dom phi");
    }
}

VIMOProblem VIMOProblem::restrict(const std::vector<std::size_t>& free) const {
    const std::size_t k = free.size();
    if (k == 0) throw std::invalid_argument("VIMOProblem::restrict: empty coordinate set");

    // support functions restrict exactly: pad the test direction with zeros
    // and the point with the anchored witness coordinates.
    const Vector anchor = witness_;
    const auto freev = free;
    const SetValuedOperator full = a_;
    const std::size_t n = dim();

    auto embed_point = [freev, anchor](const Vector& u) {
        Vector y = anchor;
        for (std::size_t j = 0; j < freev.size(); ++j) y[freev[j]] = u[j];
        return y;
    };
    auto embed_dir = [freev, n](const Vector& v) {
        Vector d(n);
        for (std::size_t j = 0; j < freev.size(); ++j) d[freev[j]] = v[j];
        return d;
    };
    auto slice = [freev](const Vector& y) {
        Vector u(freev.size());
        for (std::size_t j = 0; j < freev.size(); ++j) u[j] = y[freev[j]];
        return u;
    };

    auto support = [full, embed_point, embed_dir](const Vector& u, const Vector& v) {
        return full.support_plus(embed_point(u), embed_dir(v));
    };
    auto selection = [full, embed_point, embed_dir, slice](const Vector& u, const Vector& hint) {
        return slice(full.selection(embed_point(u), embed_dir(hint)));
    };
    auto norms = [full, embed_point](const Vector& u) -> std::pair<double, double> {
        // projection onto the subspace can only shrink norms; keep the sound
        // envelope [0, full upper bound]
        return {0.0, full.norm_bounds(embed_point(u)).second};
    };

    SetValuedOperator a_sub(k, support, selection, norms);
    ProperConvexFunction phi_sub = phi_.restrict(free, witness_);
    ConvexSet k_sub = k_.restrict(free, witness_);
    Vector f_sub(k);
    for (std::size_t j = 0; j < k; ++j) f_sub[j] = f_[free[j]];
    return VIMOProblem(std::move(a_sub), std::move(phi_sub), std::move(k_sub), std::move(f_sub),
                       slice(witness_));
}

Vector VIMOProblem::embed(const std::vector<std::size_t>& free, const Vector& u) const {
    check_dim(u, free.size(), "VIMOProblem::embed");
    Vector y = witness_;
    for (std::size_t j = 0; j < free.size(); ++j) {
        if (free[j] >= dim()) throw std::invalid_argument("VIMOProblem::embed: index out of range");
        y[free[j]] = u[j];
    }
    return y;
}

}  // namespace vimo
