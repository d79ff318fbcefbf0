#include "covercount/arrangement.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace covercount {

using nlohmann::json;

i64 normalize_form(std::vector<i64>& form) {
    i64 g = 0;
    for (i64 c : form) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw domain_error("zero form in arrangement");
    i64 lead = 0;
    for (i64 c : form) {
        if (c != 0) {
            lead = c;
            break;
        }
    }
    i64 s = lead < 0 ? -g : g;
    for (i64& c : form) c /= s;
    return s;
}

bool proportional_over_q(const std::vector<i64>& a, const std::vector<i64>& b) {
    // both normalized: proportional iff equal
    return a == b;
}

static void validate_spec(DoubleCoverSpec& s) {
    if (s.arrangement.dim < 1) throw domain_error("ambient dimension must be >= 1");
    size_t w = size_t(s.arrangement.dim) + 1;
    i64 fold = 1;
    for (auto& f : s.arrangement.forms) {
        if (f.size() != w) throw domain_error("form of wrong length in " + s.name);
        fold *= normalize_form(f);
    }
    // fold normalization scalars into the twist so the variety is unchanged
    if (fold != 1) s.twist.num *= fold;
    if (s.twist.num == 0 || s.twist.den == 0) throw domain_error("twist must be nonzero");
    for (size_t i = 0; i < s.arrangement.forms.size(); ++i)
        for (size_t j = i + 1; j < s.arrangement.forms.size(); ++j)
            if (proportional_over_q(s.arrangement.forms[i], s.arrangement.forms[j]))
                throw domain_error("proportional forms in " + s.name);
    if (s.arrangement.forms.size() % 2 != 0 && s.weights.empty())
        throw domain_error("odd form count without explicit weights in " + s.name);
}

static json parse(const std::string& text) {
    json j = json::parse(text, nullptr, true);
    if (!j.is_object()) throw domain_error("arrangement document must be a JSON object");
    return j;
}

DoubleCoverSpec load_arrangement(const std::string& text) {
    json j = parse(text);
    DoubleCoverSpec s;
    s.name = j.value("name", "");
    s.arrangement.dim = j.at("dim").get<int>();
    s.twist.num = j.at("twist").at("num").get<i64>();
    s.twist.den = j.at("twist").at("den").get<i64>();
    if (j.contains("weights")) s.weights = j["weights"].get<std::vector<int>>();
    s.arrangement.forms = j.at("forms").get<std::vector<std::vector<i64>>>();
    validate_spec(s);
    return s;
}

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DoubleCoverSpec load_arrangement_file(const std::string& path) {
    return load_arrangement(slurp(path));
}

std::string save_arrangement(const DoubleCoverSpec& s) {
    json j;
    j["name"] = s.name;
    j["dim"] = s.arrangement.dim;
    j["twist"] = {{"num", s.twist.num}, {"den", s.twist.den}};
    if (!s.weights.empty()) j["weights"] = s.weights;
    j["forms"] = s.arrangement.forms;
    return j.dump(2);
}

static i64 eval_poly(const std::vector<i64>& coeffs, i64 x) {
    i64 v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

DoubleCoverSpec load_template(const std::string& text, i64 lambda) {
    json j = parse(text);
    if (!j.contains("parameter")) throw domain_error("not a parametric arrangement file");
    DoubleCoverSpec s;
    s.name = j.value("name", "") + "(" + std::to_string(lambda) + ")";
    s.arrangement.dim = j.at("dim").get<int>();
    s.twist.num = eval_poly(j.at("twist").at("num").get<std::vector<i64>>(), lambda);
    s.twist.den = eval_poly(j.at("twist").at("den").get<std::vector<i64>>(), lambda);
    if (j.contains("weights")) s.weights = j["weights"].get<std::vector<int>>();
    for (const auto& fj : j.at("forms")) {
        std::vector<i64> f;
        for (const auto& cj : fj) f.push_back(eval_poly(cj.get<std::vector<i64>>(), lambda));
        s.arrangement.forms.push_back(std::move(f));
    }
    validate_spec(s);
    return s;
}

DoubleCoverSpec load_template_file(const std::string& path, i64 lambda) {
    return load_template(slurp(path), lambda);
}

u32 twist_residue(const FieldCtx& F, const Rational& twist) {
    u32 den = F.reduce(twist.den);
    if (den == 0) throw domain_error("twist denominator divisible by p");
    u32 num = F.reduce(twist.num);
    if (num == 0) throw domain_error("twist numerator divisible by p");
    return F.mul(num, F.inv(den));
}

}  // namespace covercount
