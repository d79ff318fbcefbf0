#pragma once

#include <string>
#include <vector>

#include "covercount/ffcore.hpp"
#include "covercount/util.hpp"

namespace covercount {

struct Rational {
    i64 num = 0, den = 1;
};

// Hyperplane arrangement in P^dim: integer linear forms, each normalized to
// content 1 with positive leading coefficient, pairwise non-proportional
// over Q.
struct Arrangement {
    int dim = 0;
    std::vector<std::vector<i64>> forms;  // each of length dim+1
};

// Double cover t^2 = twist * prod(forms) in weighted projective space;
// the cover coordinate has weight (#forms)/2 and the ambient weights are 1.
struct DoubleCoverSpec {
    std::string name;
    Arrangement arrangement;
    Rational twist{1, 1};
    std::vector<int> weights;  // optional; leading entry is the cover weight

    int dim() const { return arrangement.dim; }
    const std::vector<std::vector<i64>>& forms() const { return arrangement.forms; }
};

// Normalizes a form in place and returns the scalar that was divided out
// (sign times content), so the caller can fold it into the twist.
i64 normalize_form(std::vector<i64>& form);

bool proportional_over_q(const std::vector<i64>& a, const std::vector<i64>& b);

// Concrete arrangement files: { name, dim, weights?, twist{num,den}, forms }.
DoubleCoverSpec load_arrangement(const std::string& json_text);
DoubleCoverSpec load_arrangement_file(const std::string& path);
std::string save_arrangement(const DoubleCoverSpec&);

// Parametric files carry polynomial coefficients in one parameter; the
// parameter slot is filled with an integer when loading.
DoubleCoverSpec load_template_file(const std::string& path, i64 lambda);
DoubleCoverSpec load_template(const std::string& json_text, i64 lambda);

// Reduces the twist mod p; throws if p divides the numerator or denominator.
u32 twist_residue(const FieldCtx& F, const Rational& twist);

}  // namespace covercount
