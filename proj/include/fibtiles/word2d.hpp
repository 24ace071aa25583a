#pragma once

#include <string>
#include <vector>

namespace fibtiles {

// Rectangular word over an integer alphabet with Cartesian indexing:
// cell (x, y) has x increasing to the right and y increasing upwards,
// origin at the bottom-left.
struct Word2D {
    int width = 0;
    int height = 0;
    std::vector<int> cells;  // row-major from the bottom: cells[y*width + x]

    Word2D() = default;
    Word2D(int w, int h) : width(w), height(h), cells(static_cast<std::size_t>(w) * h, 0) {}

    static Word2D letter(int a);
    // Rows as displayed on paper, top row first.
    static Word2D from_rows(const std::vector<std::vector<int>>& rows_top_down);

    int at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
    int& at(int x, int y) { return cells[static_cast<std::size_t>(y) * width + x]; }

    bool operator==(const Word2D&) const = default;
    bool operator<(const Word2D& o) const;

    // Copy of the rectangle [x, x+w) x [y, y+h).
    Word2D subword(int x, int y, int w, int h) const;

    std::string to_string() const;  // rows top-down, space separated
};

// Concatenation u (.)^direction v: direction 1 appends v to the right,
// direction 2 stacks v on top.  Throws on shape mismatch.
Word2D concat(int direction, const Word2D& u, const Word2D& v);

// All subwords of the given shape, in scan order.
std::vector<Word2D> subwords_of_shape(const Word2D& u, int w, int h);

}  // namespace fibtiles
