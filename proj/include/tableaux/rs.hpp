#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tableaux/tableau.hpp"

namespace tableaux {

/// A bijection on [n], stored as the image sequence pi_1..pi_n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // validates

    int size() const { return static_cast<int>(images_.size()); }
    int at(int i) const { return images_[i - 1]; }  ///< 1-based
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;
    std::string str() const;

private:
    std::vector<int> images_;
};

/// Parity of the inversion count, as +1 or -1.
int perm_sign(const Permutation& p);

/// Result of one row insertion, together with the three sign factors: the
/// inserted value exceeds `smaller_entries` entries of the input tableau,
/// the new square is white iff `new_cell_white` is 1, and `cells_above`
/// squares lie in rows strictly above it. The sign of the result equals
/// sign_factor() times the sign of the input.
struct InsertionOutcome {
    Tableau result;
    Cell new_cell;
    int smaller_entries = 0;
    int new_cell_white = 0;
    int cells_above = 0;

    int sign_factor() const {
        return ((smaller_entries + new_cell_white + cells_above) % 2 == 0) ? 1 : -1;
    }
};

/// Row insertion: the value bumps the smallest strictly greater entry of each
/// row downward until one lands at the end of a row. Throws if the value
/// already occurs in the tableau.
InsertionOutcome insert(const Tableau& t, int value);

/// Reverse of insertion, starting from an outer corner. Returns the smaller
/// tableau and the evicted value. Throws if the cell is not an outer corner.
std::pair<Tableau, int> extract(const Tableau& t, Cell corner);

/// Left fold of insert over the letters of the word.
Tableau insert_word(const Tableau& t, const Word& w);

struct RsPair {
    Tableau insertion;  ///< P
    Tableau recording;  ///< Q: the square added at step k holds k
};

/// The Robinson-Schensted correspondence pi -> (P, Q).
RsPair rs(const Permutation& p);

/// Inverse correspondence: both inputs must be standard tableaux of the same
/// shape.
Permutation rs_inverse(const Tableau& insertion, const Tableau& recording);

/// Sorted word of the numbers in [universe] missing from the tableau. The
/// tableau must hold exactly universe - word_length entries, all in
/// [universe]; the universe is passed explicitly because the same tableau
/// can sit inside different universes.
Word complementary_word(const Tableau& t, int word_length, int universe);

/// (-1)^L with L the sum of (letter - 1) over the word.
int sigma(const Word& w);

/// (-1)^(W+U) for a skew diagram: W counts white skew squares, U counts
/// pairs of an inner square in a row strictly above a skew square.
int tau(const SkewShape& skew);
int tau(const Shape& outer, const Shape& inner);

/// Visits all strictly increasing words of the given length over
/// [alphabet], in lexicographic order.
template <typename Visitor>
void for_each_sorted_word(int alphabet, int length, Visitor&& visit) {
    Word w(length);
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == length) {
            visit(w);
            return;
        }
        for (int v = low; v <= alphabet - (length - pos - 1); ++v) {
            w[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
}

std::vector<Word> enumerate_sorted_words(int alphabet, int length);

}  // namespace tableaux
