#include "tableaux/shape.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tableaux {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("shape parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("shape parts must be weakly decreasing");
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Shape::row_length(int row) const {
    return (row >= 1 && row <= rows()) ? parts_[row - 1] : 0;
}

int Shape::col_length(int col) const {
    int h = 0;
    for (int p : parts_) {
        if (p >= col)
            ++h;
        else
            break;
    }
    return h;
}

bool Shape::contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

std::vector<Cell> Shape::cells() const {
    std::vector<Cell> out;
    out.reserve(total_);
    for (int r = 1; r <= rows(); ++r)
        for (int c = 1; c <= parts_[r - 1]; ++c) out.push_back({r, c});
    return out;
}

std::string Shape::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::ostream& operator<<(std::ostream& out, const Shape& s) { return out << s.str(); }

std::ostream& operator<<(std::ostream& out, const Cell& c) {
    return out << '(' << c.row << ',' << c.col << ')';
}

Shape conjugate(const Shape& s) {
    std::vector<int> cols;
    if (!s.empty()) {
        cols.resize(s.parts()[0]);
        for (int p : s.parts())
            for (int c = 0; c < p; ++c) ++cols[c];
    }
    return Shape(std::move(cols));
}

bool is_subshape(const Shape& inner, const Shape& outer) {
    if (inner.rows() > outer.rows()) return false;
    for (int r = 1; r <= inner.rows(); ++r)
        if (inner.row_length(r) > outer.row_length(r)) return false;
    return true;
}

CellSet skew_cells(const Shape& outer, const Shape& inner) {
    if (!is_subshape(inner, outer))
        throw std::invalid_argument("skew_cells: inner is not a subshape of outer");
    CellSet out;
    for (int r = 1; r <= outer.rows(); ++r)
        for (int c = inner.row_length(r) + 1; c <= outer.row_length(r); ++c)
            out.insert({r, c});
    return out;
}

SkewShape::SkewShape(Shape outer_shape, Shape inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
    if (!is_subshape(inner, outer))
        throw std::invalid_argument("skew shape: inner is not a subshape of outer");
}

std::pair<int, int> color_counts(const Shape& s) {
    int black = 0;
    for (int r = 1; r <= s.rows(); ++r) {
        int len = s.row_length(r);
        // black squares of a row are those with col parity matching the row's
        black += (r % 2 == 0) ? len / 2 : (len + 1) / 2;
    }
    return {black, s.size() - black};
}

CellSet black_cells(const Shape& s) {
    CellSet out;
    for (int r = 1; r <= s.rows(); ++r)
        for (int c = ((r % 2 == 0) ? 2 : 1); c <= s.row_length(r); c += 2)
            out.insert({r, c});
    return out;
}

bool is_fourling_shape(const Shape& s) {
    if (s.rows() % 2 != 0) return false;
    for (int r = 1; r <= s.rows(); r += 2) {
        int a = s.row_length(r), b = s.row_length(r + 1);
        if (a != b || a % 2 != 0) return false;
    }
    return true;
}

Shape fourling_body(const Shape& s) {
    std::vector<int> body;
    for (int r = 2; r <= s.rows(); r += 2) {
        int len = 2 * (s.row_length(r) / 2);
        if (len == 0) break;
        body.push_back(len);
        body.push_back(len);
    }
    return Shape(std::move(body));
}

int d_count(const Shape& s) { return fourling_body(s).size() / 4; }

int v_count(const Shape& s) {
    int total = 0;
    const Shape conj = conjugate(s);
    for (int h : conj.parts()) total += h / 2;
    return total;
}

int v_count(const CellSet& cells) {
    int total = 0;
    int run = 0;
    const Cell* prev = nullptr;
    // std::set orders by (row, col); walk column runs in column-major order
    std::vector<Cell> by_col(cells.begin(), cells.end());
    std::sort(by_col.begin(), by_col.end(), [](Cell a, Cell b) {
        return std::pair(a.col, a.row) < std::pair(b.col, b.row);
    });
    for (const Cell& c : by_col) {
        if (prev && prev->col == c.col && prev->row + 1 == c.row)
            ++run;
        else {
            total += run / 2;
            run = 1;
        }
        prev = &c;
    }
    total += run / 2;
    return total;
}

int h_count(const Shape& s) { return v_count(conjugate(s)); }

CellSet strip(const Shape& s) { return skew_cells(s, fourling_body(s)); }

int vs_count(const Shape& s) {
    const Shape conj = conjugate(s);
    const Shape body_conj = conjugate(fourling_body(s));
    int total = 0;
    for (int c = 1; c <= conj.rows(); ++c)
        total += (conj.row_length(c) - body_conj.row_length(c)) / 2;
    return total;
}

int hs_count(const Shape& s) { return vs_count(conjugate(s)); }

std::vector<Shape> partitions_of(int n) {
    std::vector<Shape> out;
    for_each_partition(n, [&](const Shape& s) { out.push_back(s); });
    return out;
}

}  // namespace tableaux
