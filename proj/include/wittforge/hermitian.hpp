#pragma once

// Diagonal skew-hermitian forms over (H, canonical involution).

#include "wittforge/quat.hpp"

#include <optional>
#include <vector>

namespace wittforge {

class SkewHermForm {
public:
    /// Optional shape tag: every entry equals multipliers[i] * common.
    struct Shape {
        QuatElem common;
        std::vector<Rational> multipliers;
    };

    SkewHermForm() = default;
    /// Entries must be pure, invertible and lie in `algebra`.
    SkewHermForm(QuaternionAlgebra algebra, std::vector<QuatElem> entries);
    /// <l_1 q, ..., l_n q>
    static SkewHermForm scalar_multiples(const QuatElem& q, const std::vector<Rational>& multipliers);

    const QuaternionAlgebra& algebra() const { return alg_; }
    const std::vector<QuatElem>& entries() const { return entries_; }
    const std::optional<Shape>& shape() const { return shape_; }
    std::size_t rank() const { return entries_.size(); }

private:
    QuaternionAlgebra alg_;
    std::vector<QuatElem> entries_;
    std::optional<Shape> shape_;
};

/// Discriminant of the adjoint involution: (-1)^n prod nrd(q_i).
SquareClass disc_adjoint(const SkewHermForm& h);

/// Replaces entry `index` by c q with c the square class of u^2, u anticommuting
/// with q. The map x -> u x on that slot is an isometry.
SkewHermForm rescale_entry(const SkewHermForm& h, std::size_t index);

/// <l_1 q, ..., l_{n-1} q, c l_n q>; requires the shape tag.
SkewHermForm twist_last_entry(const SkewHermForm& h, const SquareClass& c);

/// An explicit isomorphism (a,b) -> M_2(Q) for a split algebra, as the images
/// of i and j.
struct SplitEmbedding {
    std::array<std::array<Rational, 4>, 2> images;  // row-major 2x2 of i and j
    std::array<Rational, 4> image(const QuatElem& q) const;
};
SplitEmbedding split_embedding(const QuaternionAlgebra& h, long bound = default_search_bound());

/// For split h.algebra(): the 2n-dimensional quadratic form whose adjoint
/// involution corresponds to ad_h under the embedding.
QuadForm split_transport(const SkewHermForm& h, long bound = default_search_bound());

}  // namespace wittforge
