#include "tableaux/imbalance.hpp"

#include "tableaux/parallel.hpp"
#include "tableaux/tableau.hpp"

namespace tableaux {

long long imbalance_chess(const Shape& s) {
    long long sum = 0;
    for_each_chess_sign(s, [&](int sign) { sum = checked_add(sum, sign); });
    return sum;
}

long long imbalance_full(const Shape& s) {
    long long sum = 0;
    for_each_syt_sign(s, [&](int sign) { sum = checked_add(sum, sign); });
    return sum;
}

long long imbalance(const Shape& s) { return imbalance_chess(s); }

ImbalanceRecord imbalance_record(const Shape& s) {
    ImbalanceRecord rec;
    rec.shape = s;
    rec.imbalance = imbalance(s);
    rec.v = v_count(s);
    rec.h = h_count(s);
    rec.d = d_count(s);
    rec.vs = vs_count(s);
    rec.hs = hs_count(s);
    auto [black, white] = color_counts(s);
    rec.black = black;
    rec.white = white;
    return rec;
}

std::vector<ImbalanceRecord> imbalance_table(int n, int jobs) {
    return parallel_map(partitions_of(n), imbalance_record, jobs);
}

void MonomialMap::add(Monomial m, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

std::string MonomialMap::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest powers first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, coeff] = *it;
        std::string vars;
        auto append_var = [&](char name, int exp) {
            if (exp == 0) return;
            if (!vars.empty()) vars += '*';
            vars += name;
            if (exp != 1) vars += '^' + std::to_string(exp);
        };
        append_var('q', m.q);
        append_var('t', m.t);
        append_var('x', m.x);

        const long long magnitude = coeff < 0 ? -coeff : coeff;
        std::string term;
        if (vars.empty())
            term = std::to_string(magnitude);
        else if (magnitude == 1)
            term = vars;
        else
            term = std::to_string(magnitude) + '*' + vars;

        if (out.empty())
            out = (coeff < 0 ? "-" : "") + term;
        else
            out += (coeff < 0 ? " - " : " + ") + term;
    }
    return out;
}

MonomialMap stanley_polynomial(int n, int jobs) {
    MonomialMap poly;
    for (const ImbalanceRecord& rec : imbalance_table(n, jobs))
        poly.add({rec.v, rec.d, rec.h}, rec.imbalance);
    return poly;
}

MonomialMap expected_polynomial(int n) {
    MonomialMap poly;
    const int degree = n / 2;
    for (int k = 0; k <= degree; ++k)
        poly.add({k, 0, degree - k}, binomial(degree, k));
    return poly;
}

}  // namespace tableaux
