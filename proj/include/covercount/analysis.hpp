#pragma once

#include <string>
#include <vector>

#include "covercount/arrangement.hpp"
#include "covercount/util.hpp"

namespace covercount {

struct SubsetReport {
    std::vector<int> subset;     // indices of a closed subset of the forms
    int intersection_dim = -1;   // projective dimension of the common zero locus
    bool near_pencil = false;
    bool ch_ok = false;
    std::vector<i64> point;      // the intersection point when the dimension is 0
};

struct CynkHulekReport {
    std::vector<SubsetReport> subsets;
    bool all_ok = true;
};

// Scans the closed subsets S (those with C_S strictly shrinking under any
// extension) of an arrangement of at most 16 forms in P^n, n <= 8, and
// evaluates near-pencil or floor(#S/2) = codim - 1 on each with exact
// integer ranks.
CynkHulekReport cynk_hulek_report(const DoubleCoverSpec& spec);

struct AutGroup {
    u64 pgl_order = 0;
    u64 cover_order = 0;  // PGL stabilizer extended by the deck involution
    // canonical integer matrices for the x-action, identity first
    std::vector<std::vector<std::vector<i64>>> elements;
    std::vector<std::vector<int>> form_perms;  // induced permutations of forms
    std::vector<size_t> generator_indices;
    std::vector<std::vector<int>> form_orbits;
};

// All projective-linear transformations permuting the dual points of the
// arrangement, found by mapping a spanning basis of dual points plus
// scalar propagation through the remaining ones.
AutGroup automorphism_group(const DoubleCoverSpec& spec);

struct GroupStructure {
    u64 order = 0;
    u64 center_order = 0;
    bool splits_c2_x_h = false;   // G = <z> x H with z central of order 2
    u64 h_center_order = 0;       // |Z(H)| for the found complement
    bool h_center_c2sq = false;   // Z(H) isomorphic to C2 x C2
    bool h_mod_center_c2cubed = false;  // H/Z(H) isomorphic to C2^3
};

GroupStructure analyze_group_structure(const AutGroup& g);

}  // namespace covercount
