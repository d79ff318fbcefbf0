#include "covercount/modforms.hpp"

#include "covercount/brute.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace covercount {

using nlohmann::json;

int cm_level(CMFormId id) {
    if (id.j == 3) return 16;
    if (id.j == 2 || id.j == 4 || id.j == 6) return 32;
    throw domain_error("unknown CM form weight");
}

i128 cm_coefficient(CMFormId id, i64 p) {
    cm_level(id);
    if (p == 2) throw domain_error("p = 2 is out of scope");
    if (!is_prime(p)) throw domain_error("p must be prime");
    if (p % 4 == 3) return 0;
    GaussInt w = gauss_pow(sum_of_two_squares(p), unsigned(id.j - 1));
    return i128(2) * w.a;
}

CoefIdentityReport verify_coef_identities(i64 pmax) {
    CoefIdentityReport rep;
    rep.pmax = pmax;
    for (i64 p = 3; p <= pmax; p += 2) {
        if (!is_prime(p)) continue;
        i128 a2 = cm_coefficient({2}, p);
        i128 a3 = cm_coefficient({3}, p);
        i128 a4 = cm_coefficient({4}, p);
        i128 a6 = cm_coefficient({6}, p);
        bool ok;
        if (p % 4 == 3) {
            ok = a2 == 0 && a3 == 0 && a4 == 0 && a6 == 0;
        } else {
            ok = a3 == a2 * a2 - 2 * p && a4 == a2 * (a3 - p) &&
                 a6 == a4 * a3 - i128(p) * p * a2;
        }
        ++rep.checked;
        if (!ok) {
            rep.all_pass = false;
            rep.failures.push_back(p);
        }
    }
    return rep;
}

i64 QExpansion::a(u64 n) const {
    if (n == 0 || n > coeffs.size())
        throw domain_error(label + ": coefficient a_" + std::to_string(n) +
                           " outside the loaded range");
    return coeffs[n - 1];
}

static void hecke_validate(const QExpansion& q) {
    auto fail = [&](u64 n, const std::string& what) {
        throw domain_error(q.label + ": " + what + " fails at index " + std::to_string(n));
    };
    const u64 m = q.m();
    if (m < 200) fail(m, "coefficient table shorter than 200");
    if (q.a(1) != 1) fail(1, "normalization a_1 = 1");
    // Deligne bound at good primes, exact: a_p^2 <= 4 p^(k-1)
    for (u64 p = 2; p <= m; ++p) {
        if (!is_prime(i64(p)) || q.level % int(p) == 0) continue;
        i128 bound = 4 * ipow(i128(p), unsigned(q.weight - 1));
        if (i128(q.a(p)) * q.a(p) > bound) fail(p, "Deligne bound");
    }
    // good-prime power recursion
    for (u64 p = 2; p * p <= m; ++p) {
        if (!is_prime(i64(p)) || q.level % int(p) == 0) continue;
        i128 pk = ipow(i128(p), unsigned(q.weight - 1));
        for (u64 q2 = p * p, prev = p; q2 <= m; prev = q2, q2 *= p) {
            i128 want = i128(q.a(p)) * q.a(prev) - pk * q.a(prev / p);
            if (i128(q.a(q2)) != want) fail(q2, "Hecke power recursion");
        }
    }
    // multiplicativity on coprime pairs
    for (u64 n1 = 2; n1 * 2 <= m; ++n1)
        for (u64 n2 = n1 + 1; n1 * n2 <= m; ++n2) {
            if (std::gcd(n1, n2) != 1) continue;
            if (i128(q.a(n1 * n2)) != i128(q.a(n1)) * q.a(n2))
                fail(n1 * n2, "Hecke multiplicativity");
        }
}

QExpansion load_qexpansion(const std::string& text) {
    json j = json::parse(text);
    QExpansion q;
    q.label = j.value("label", "");
    q.weight = j.at("weight").get<int>();
    q.level = j.at("level").get<int>();
    q.source_oracle = j.value("source_oracle", "");
    q.coeffs = j.at("coeffs").get<std::vector<i64>>();
    hecke_validate(q);
    return q;
}

QExpansion load_qexpansion_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_qexpansion(ss.str());
}

i128 predict_f1(const FieldCtx& F, const QExpansion& weight6, const QExpansion& weight4) {
    if (weight6.weight != 6 || weight4.weight != 4 || weight6.level != 8 ||
        weight4.level != 8)
        throw domain_error("predict_f1 needs the level-8 weight-6 and weight-4 forms");
    i64 p = F.p();
    i128 ap = weight6.a(u64(p));
    i128 bp = weight4.a(u64(p));
    return count_projective_space(p, 5) - ap - (bp + F.legendre_int(-1) * i128(p)) * p;
}

i128 predict_v32(const FieldCtx& F) {
    i64 p = F.p();
    i128 a2 = cm_coefficient({2}, p), a4 = cm_coefficient({4}, p), a6 = cm_coefficient({6}, p);
    return count_projective_space(p, 5) - a6 - i128(p) * a4 - 2 * i128(p) * p * a2;
}

}  // namespace covercount
