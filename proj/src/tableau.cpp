#include "tableaux/tableau.hpp"

#include <set>
#include <stdexcept>

namespace tableaux {

long long inversion_count(const Word& w) {
    long long count = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

int word_sign(const Word& w) { return inversion_count(w) % 2 == 0 ? 1 : -1; }

Tableau::Tableau(Shape shape, std::vector<std::vector<int>> rows, int sign,
                 detail::Unchecked)
    : shape_(std::move(shape)), rows_(std::move(rows)), sign_(sign) {}

int Tableau::at(Cell c) const {
    if (!shape_.contains(c))
        throw std::invalid_argument("tableau: cell outside shape");
    return rows_[c.row - 1][c.col - 1];
}

bool Tableau::contains_value(int value) const { return find(value).has_value(); }

std::optional<Cell> Tableau::find(int value) const {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c)
            if (rows_[r][c] == value) return Cell{r + 1, c + 1};
    return std::nullopt;
}

Word Tableau::reading_word() const {
    Word w;
    w.reserve(size());
    for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
    return w;
}

bool Tableau::is_standard() const {
    std::vector<bool> seen(size() + 1, false);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v < 1 || v > size() || seen[v]) return false;
            seen[v] = true;
        }
    return true;
}

bool Tableau::is_chess() const {
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c) {
            // 0-based (r,c) is black iff r+c is even; entry must be odd there
            const bool black = ((r + c) % 2 == 0);
            const bool odd = (rows_[r][c] % 2 != 0);
            if (black != odd) return false;
        }
    return true;
}

std::string Tableau::str() const {
    std::string out;
    for (const auto& row : rows_) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

Tableau make_tableau(const Shape& shape, const std::vector<std::vector<int>>& rows) {
    if (static_cast<int>(rows.size()) != shape.rows())
        throw std::invalid_argument("make_tableau: row count does not match shape");
    std::set<int> seen;
    for (int r = 0; r < shape.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape.parts()[r])
            throw std::invalid_argument("make_tableau: row length does not match shape");
        for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
            const int v = rows[r][c];
            if (!seen.insert(v).second)
                throw std::invalid_argument("make_tableau: duplicate entry");
            if (c > 0 && rows[r][c - 1] >= v)
                throw std::invalid_argument("make_tableau: row must increase");
            if (r > 0 && rows[r - 1][c] >= v)
                throw std::invalid_argument("make_tableau: column must increase");
        }
    }
    Word w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return Tableau(shape, rows, word_sign(w), detail::Unchecked{});
}

mpz_class syt_count(const Shape& s) {
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), s.size());
    mpz_class hooks = 1;
    const Shape conj = conjugate(s);
    for (int r = 1; r <= s.rows(); ++r)
        for (int c = 1; c <= s.row_length(r); ++c) {
            const int hook = (s.row_length(r) - c) + (conj.row_length(c) - r) + 1;
            hooks *= hook;
        }
    return numerator / hooks;
}

std::vector<Tableau> enumerate_syt(const Shape& s) {
    std::vector<Tableau> out;
    for_each_syt(s, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enumerate_chess(const Shape& s) {
    std::vector<Tableau> out;
    for_each_chess(s, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

}  // namespace tableaux
