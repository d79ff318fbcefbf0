#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covercount/arrangement.hpp"
#include "covercount/brute.hpp"
#include "covercount/ffcore.hpp"

namespace covercount {

// Projective-linear map of the ambient space together with a deck sign,
// representing an automorphism of the double cover.
struct ProjDeckMap {
    std::string name;
    std::vector<std::vector<i64>> matrix;  // (n+1) x (n+1), acts by x -> Mx
    int deck_sign = 1;
};

std::vector<ProjDeckMap> load_involutions_file(const std::string& path);

// A map bound to a cover: the induced permutation of the forms, the
// per-form scalars, and the square root mu of the branch multiplier
// (the pullback of the branch product is mu^2 times itself).
struct BoundDeckMap {
    ProjDeckMap map;
    std::vector<int> form_perm;
    std::vector<i64> form_scalars;
    i64 mu = 1;              // integer square root of the multiplier
    i64 m2_scalar = 0;       // M^2 = m2_scalar * I when the map is an involution
    bool involution = false;
};

BoundDeckMap bind_map(const DoubleCoverSpec& spec, const ProjDeckMap& map);

struct TwistedCount {
    std::string name;
    int eps = 1;
    i128 T = 0;
    double wall_ms = 0;
};

// T = #{x in V(F_bar) : Frob(x) = g x} for the cover lift with deck sign
// eps, by enumerating P^n(F_{p^2}).  Cost (p^2)^n points; guarded.
TwistedCount twisted_count_brute(const FieldCtx& F, const DoubleCoverSpec& spec,
                                 const BoundDeckMap& g, int eps, int jobs = 1);

// Same count through a Hilbert-90 trivialization C = A + M A^(p): the
// twisted locus is C * P^n(F_p), so the census runs in O(p^n).
TwistedCount twisted_count_h90(const FieldCtx& F, const DoubleCoverSpec& spec,
                               const BoundDeckMap& g, int eps, u64 seed = 1, int jobs = 1);

// Twisted count on a bare projective space (no cover).
i128 twisted_count_base_brute(const FieldCtx& F, int n,
                              const std::vector<std::vector<i64>>& matrix);

// (N + T_g)/2 for the quotient of the base space by an involution.
i128 count_base_quotient(const FieldCtx& F, int n, const ProjDeckMap& map, u64 seed = 1);

// Burnside-Frobenius: (1/|G|) sum_g T_g over a group of cover
// automorphisms given as (map, deck sign) pairs including the identity.
// Closure is checked; every non-identity element must be an involution.
CountRecord count_quotient(const FieldCtx& F, const DoubleCoverSpec& spec,
                           const std::vector<std::pair<ProjDeckMap, int>>& group,
                           u64 seed = 1, int jobs = 1);

// Composition of cover automorphisms (matrix product, deck scalars
// multiplied, normalized so the matrix is primitive with positive lead).
std::pair<ProjDeckMap, Rational> compose_maps(const ProjDeckMap& g1, Rational s1,
                                              const ProjDeckMap& g2, Rational s2,
                                              int cover_weight);

}  // namespace covercount
