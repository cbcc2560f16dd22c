#pragma once

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tableaux {

/// 1-based coordinates of a diagram square.
struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

using CellSet = std::set<Cell>;

/// An integer partition drawn as a left-justified diagram of unit squares.
/// Parts are weakly decreasing positive row lengths; the empty shape is valid.
/// Shapes are immutable values with structural equality.
class Shape {
public:
    Shape() = default;

    /// Normalizes by stripping trailing zeros. Throws std::invalid_argument
    /// if the sequence has a negative part or is not weakly decreasing.
    explicit Shape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const { return total_; }  ///< number of squares
    bool empty() const { return total_ == 0; }

    int row_length(int row) const;  ///< 1-based; 0 past the last row
    int col_length(int col) const;  ///< 1-based column height
    bool contains(Cell c) const;
    std::vector<Cell> cells() const;  ///< row-major order

    bool operator==(const Shape&) const = default;
    auto operator<=>(const Shape&) const = default;

    std::string str() const;  ///< "(5,3,2,2,1)"; "()" for the empty shape

private:
    std::vector<int> parts_;
    int total_ = 0;
};

std::ostream& operator<<(std::ostream& out, const Shape& s);
std::ostream& operator<<(std::ostream& out, const Cell& c);

/// Reflection in the main diagonal: column heights become row lengths.
Shape conjugate(const Shape& s);

/// True iff every row of inner fits inside the corresponding row of outer.
bool is_subshape(const Shape& inner, const Shape& outer);

/// Squares of outer not in inner. Throws if inner is not a subshape of outer.
CellSet skew_cells(const Shape& outer, const Shape& inner);

/// A skew diagram outer/inner; the constructor enforces nesting.
struct SkewShape {
    SkewShape(Shape outer_shape, Shape inner_shape);
    Shape outer;
    Shape inner;
    CellSet cells() const { return skew_cells(outer, inner); }
};

enum class Color { black, white };

/// Chessboard coloring with (1,1) black: (r,c) is black iff r+c is even.
inline Color cell_color(Cell c) {
    return ((c.row + c.col) % 2 == 0) ? Color::black : Color::white;
}

/// (black, white) square counts under the chess coloring.
std::pair<int, int> color_counts(const Shape& s);

/// The set of black squares of the shape.
CellSet black_cells(const Shape& s);

/// True iff rows pair up with equal even lengths, i.e. the shape is a
/// disjoint union of 2x2 blocks. The empty shape qualifies.
bool is_fourling_shape(const Shape& s);

/// Largest subshape consisting of 2x2 blocks. Closed form: both rows of the
/// i-th row pair have length twice half the lower row, rounded down; zero
/// rows are dropped.
Shape fourling_body(const Shape& s);

/// Maximum number of disjoint 2x2 blocks that fit in the shape.
int d_count(const Shape& s);

/// Maximum number of disjoint vertical dominoes: sum over columns of half
/// the column height, rounded down.
int v_count(const Shape& s);

/// Maximum number of disjoint vertical dominoes inside an arbitrary square
/// set. Dominoes never span columns, so this is the sum of floor(run/2) over
/// the maximal runs of consecutive squares in each column.
int v_count(const CellSet& cells);

/// Maximum number of disjoint horizontal dominoes: v_count of the conjugate.
int h_count(const Shape& s);

/// Squares outside the fourling body.
CellSet strip(const Shape& s);

/// Maximum vertical dominoes fitting in the strip. The body has even column
/// heights, so strip squares form one contiguous run per column and the
/// column-difference sum is exact.
int vs_count(const Shape& s);

/// Maximum horizontal dominoes fitting in the strip: vs_count of the conjugate.
int hs_count(const Shape& s);

/// Visits every partition of n exactly once, in decreasing lexicographic
/// order: (n), (n-1,1), ..., (1^n). For n = 0 visits the empty shape.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            visit(Shape(parts));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

std::vector<Shape> partitions_of(int n);

}  // namespace tableaux
