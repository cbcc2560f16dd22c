#include "tableaux/rs.hpp"

#include <algorithm>
#include <stdexcept>

namespace tableaux {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("permutation: not a bijection on [n]");
        seen[v] = true;
    }
}

std::string Permutation::str() const {
    std::string out = "(";
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(images_[i]);
    }
    return out + ")";
}

int perm_sign(const Permutation& p) { return word_sign(p.images()); }

namespace {

Shape shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Shape(std::move(parts));
}

Tableau from_rows(std::vector<std::vector<int>> rows) {
    Word w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    Shape sh = shape_of_rows(rows);
    return Tableau(std::move(sh), std::move(rows), word_sign(w), detail::Unchecked{});
}

}  // namespace

InsertionOutcome insert(const Tableau& t, int value) {
    if (t.contains_value(value))
        throw std::invalid_argument("insert: value already present");

    InsertionOutcome out;
    for (int v : t.reading_word())
        if (v < value) ++out.smaller_entries;

    std::vector<std::vector<int>> rows = t.rows();
    int carry = value;
    size_t r = 0;
    for (; r < rows.size(); ++r) {
        auto it = std::upper_bound(rows[r].begin(), rows[r].end(), carry);
        if (it == rows[r].end()) {
            rows[r].push_back(carry);
            break;
        }
        std::swap(carry, *it);
    }
    if (r == rows.size()) rows.push_back({carry});

    out.new_cell = {static_cast<int>(r) + 1, static_cast<int>(rows[r].size())};
    out.new_cell_white = (cell_color(out.new_cell) == Color::white) ? 1 : 0;
    for (size_t rr = 0; rr < r; ++rr)
        out.cells_above += static_cast<int>(rows[rr].size());
    out.result = from_rows(std::move(rows));
    return out;
}

std::pair<Tableau, int> extract(const Tableau& t, Cell corner) {
    const Shape& sh = t.shape();
    const bool is_corner = sh.contains(corner) &&
                           corner.col == sh.row_length(corner.row) &&
                           sh.row_length(corner.row + 1) < corner.col;
    if (!is_corner)
        throw std::invalid_argument("extract: cell is not an outer corner");

    std::vector<std::vector<int>> rows = t.rows();
    int carry = rows[corner.row - 1].back();
    rows[corner.row - 1].pop_back();
    if (rows[corner.row - 1].empty()) rows.pop_back();
    for (int r = corner.row - 2; r >= 0; --r) {
        // the carried value replaces the largest entry smaller than it
        auto it = std::lower_bound(rows[r].begin(), rows[r].end(), carry);
        --it;
        std::swap(carry, *it);
    }
    return {from_rows(std::move(rows)), carry};
}

Tableau insert_word(const Tableau& t, const Word& w) {
    Tableau cur = t;
    for (int v : w) cur = insert(cur, v).result;
    return cur;
}

RsPair rs(const Permutation& p) {
    Tableau insertion;
    std::vector<std::vector<int>> recording_rows;
    for (int k = 1; k <= p.size(); ++k) {
        InsertionOutcome step = insert(insertion, p.at(k));
        insertion = std::move(step.result);
        if (step.new_cell.row > static_cast<int>(recording_rows.size()))
            recording_rows.emplace_back();
        recording_rows[step.new_cell.row - 1].push_back(k);
    }
    return {std::move(insertion), from_rows(std::move(recording_rows))};
}

Permutation rs_inverse(const Tableau& insertion, const Tableau& recording) {
    if (insertion.shape() != recording.shape())
        throw std::invalid_argument("rs_inverse: shapes differ");
    if (!insertion.is_standard() || !recording.is_standard())
        throw std::invalid_argument("rs_inverse: inputs must be standard tableaux");

    const int n = insertion.size();
    std::vector<int> images(n);
    Tableau cur = insertion;
    for (int k = n; k >= 1; --k) {
        auto cell = recording.find(k);
        auto [smaller, value] = extract(cur, *cell);
        images[k - 1] = value;
        cur = std::move(smaller);
    }
    return Permutation(std::move(images));
}

Word complementary_word(const Tableau& t, int word_length, int universe) {
    if (universe != t.size() + word_length)
        throw std::invalid_argument(
            "complementary_word: universe must equal entry count plus word length");
    std::vector<bool> present(universe + 1, false);
    for (int v : t.reading_word()) {
        if (v < 1 || v > universe)
            throw std::invalid_argument("complementary_word: entry outside universe");
        present[v] = true;
    }
    Word w;
    w.reserve(word_length);
    for (int v = 1; v <= universe; ++v)
        if (!present[v]) w.push_back(v);
    return w;
}

int sigma(const Word& w) {
    long long sum = 0;
    for (int v : w) sum += v - 1;
    return (sum % 2 == 0) ? 1 : -1;
}

int tau(const SkewShape& skew) {
    long long white = 0;
    long long above_pairs = 0;
    std::vector<long long> inner_prefix(skew.inner.rows() + 1, 0);
    for (int r = 1; r <= skew.inner.rows(); ++r)
        inner_prefix[r] = inner_prefix[r - 1] + skew.inner.row_length(r);
    for (const Cell& c : skew.cells()) {
        if (cell_color(c) == Color::white) ++white;
        above_pairs += inner_prefix[std::min(c.row - 1, skew.inner.rows())];
    }
    return ((white + above_pairs) % 2 == 0) ? 1 : -1;
}

int tau(const Shape& outer, const Shape& inner) { return tau(SkewShape(outer, inner)); }

std::vector<Word> enumerate_sorted_words(int alphabet, int length) {
    std::vector<Word> out;
    for_each_sorted_word(alphabet, length, [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace tableaux
