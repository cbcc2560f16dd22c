#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "tableaux/shape.hpp"

namespace tableaux {

/// A sequence of distinct integers.
using Word = std::vector<int>;

long long inversion_count(const Word& w);

/// +1 for an even number of inversions, -1 otherwise.
int word_sign(const Word& w);

namespace detail {
struct Unchecked {};  // tag for construction from pre-validated data
}

/// Squares of a shape filled with distinct integers that increase along rows
/// and down columns. Immutable; the reading-word sign is fixed at
/// construction, so tableaux are safe to share across threads.
class Tableau {
public:
    Tableau() = default;  // the empty tableau, sign +1
    Tableau(Shape shape, std::vector<std::vector<int>> rows, int sign, detail::Unchecked);

    const Shape& shape() const { return shape_; }
    int size() const { return shape_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(Cell c) const;  ///< entry at a 1-based cell
    bool contains_value(int value) const;
    std::optional<Cell> find(int value) const;

    /// Entries row by row, left to right, top to bottom.
    Word reading_word() const;

    /// Sign of the reading word.
    int sign() const { return sign_; }

    /// True iff the entries are exactly 1..n.
    bool is_standard() const;

    /// True iff entry parity matches the chess coloring: odd entries on
    /// black squares, even entries on white.
    bool is_chess() const;

    bool operator==(const Tableau& o) const {
        return shape_ == o.shape_ && rows_ == o.rows_;
    }

    std::string str() const;  ///< one row per line

private:
    Shape shape_;
    std::vector<std::vector<int>> rows_;
    int sign_ = 1;
};

/// Validates row lengths against the shape, distinctness, and the row/column
/// increase conditions. Throws std::invalid_argument on any violation.
Tableau make_tableau(const Shape& shape, const std::vector<std::vector<int>>& rows);

inline Word reading_word(const Tableau& t) { return t.reading_word(); }
inline int tableau_sign(const Tableau& t) { return t.sign(); }
inline bool is_chess(const Tableau& t) { return t.is_chess(); }

/// Number of standard Young tableaux on the shape, exactly (hook lengths).
mpz_class syt_count(const Shape& s);

namespace detail {

/// Backtracking placement of 1..n. Values are placed in increasing order; at
/// each step the candidate squares are the addable outer corners of the
/// partial shape, visited top row first, which fixes the output order.
///
/// The reading-word inversion parity is maintained incrementally: the value
/// being placed is the largest so far, so it inverts with exactly the
/// already-placed entries that follow its reading position.
template <bool ChessOnly, typename LeafFn>
class Filler {
public:
    Filler(const Shape& shape, LeafFn& leaf)
        : target_(shape.parts()), total_(shape.size()), leaf_(leaf) {
        filled_.assign(target_.size(), 0);
        rows_.resize(target_.size());
        for (size_t r = 0; r < target_.size(); ++r) rows_[r].assign(target_[r], 0);
    }

    void run() { place(1); }

private:
    void place(int k) {
        if (k > total_) {
            leaf_(rows_, parity_);
            return;
        }
        int above = 0;  // squares filled in rows before r
        for (size_t r = 0; r < target_.size(); ++r) {
            const int c = filled_[r];
            if (c < target_[r] && (r == 0 || filled_[r - 1] > c)) {
                // 0-based (r,c) is black iff r+c is even; k must match parity
                if (!ChessOnly || ((k + static_cast<int>(r) + c) & 1)) {
                    const int flips = (k - 1 - above - c) & 1;
                    parity_ ^= flips;
                    rows_[r][c] = k;
                    ++filled_[r];
                    place(k + 1);
                    --filled_[r];
                    parity_ ^= flips;
                }
            }
            above += filled_[r];
            if (filled_[r] == 0) break;  // rows below cannot be addable
        }
    }

    std::vector<int> target_;
    int total_;
    LeafFn& leaf_;
    std::vector<int> filled_;
    std::vector<std::vector<int>> rows_;
    int parity_ = 0;
};

template <bool ChessOnly, typename Visitor>
void visit_fillings(const Shape& s, Visitor&& visit) {
    auto leaf = [&](const std::vector<std::vector<int>>& rows, int parity) {
        visit(Tableau(s, rows, parity ? -1 : 1, Unchecked{}));
    };
    Filler<ChessOnly, decltype(leaf)> filler(s, leaf);
    filler.run();
}

template <bool ChessOnly, typename Visitor>
void visit_filling_signs(const Shape& s, Visitor&& visit) {
    auto leaf = [&](const std::vector<std::vector<int>>&, int parity) {
        visit(parity ? -1 : 1);
    };
    Filler<ChessOnly, decltype(leaf)> filler(s, leaf);
    filler.run();
}

}  // namespace detail

/// Visits every standard Young tableau of the shape exactly once, in a fixed
/// deterministic order, each carrying its precomputed sign.
template <typename Visitor>
void for_each_syt(const Shape& s, Visitor&& visit) {
    detail::visit_fillings<false>(s, std::forward<Visitor>(visit));
}

/// Visits exactly the chess tableaux of the shape (parity-pruned search).
template <typename Visitor>
void for_each_chess(const Shape& s, Visitor&& visit) {
    detail::visit_fillings<true>(s, std::forward<Visitor>(visit));
}

/// Sign-only fast path over all standard Young tableaux.
template <typename Visitor>
void for_each_syt_sign(const Shape& s, Visitor&& visit) {
    detail::visit_filling_signs<false>(s, std::forward<Visitor>(visit));
}

/// Sign-only fast path over the chess tableaux.
template <typename Visitor>
void for_each_chess_sign(const Shape& s, Visitor&& visit) {
    detail::visit_filling_signs<true>(s, std::forward<Visitor>(visit));
}

std::vector<Tableau> enumerate_syt(const Shape& s);
std::vector<Tableau> enumerate_chess(const Shape& s);

}  // namespace tableaux
