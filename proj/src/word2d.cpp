#include "fibtiles/word2d.hpp"

#include <stdexcept>

namespace fibtiles {

Word2D Word2D::letter(int a) {
    Word2D w(1, 1);
    w.cells[0] = a;
    return w;
}

Word2D Word2D::from_rows(const std::vector<std::vector<int>>& rows_top_down) {
    if (rows_top_down.empty()) return {};
    const int h = static_cast<int>(rows_top_down.size());
    const int w = static_cast<int>(rows_top_down.front().size());
    Word2D out(w, h);
    for (int j = 0; j < h; ++j) {
        const auto& row = rows_top_down[j];
        if (static_cast<int>(row.size()) != w)
            throw std::invalid_argument("Word2D::from_rows: ragged rows");
        for (int i = 0; i < w; ++i) out.at(i, h - 1 - j) = row[i];
    }
    return out;
}

bool Word2D::operator<(const Word2D& o) const {
    if (width != o.width) return width < o.width;
    if (height != o.height) return height < o.height;
    return cells < o.cells;
}

Word2D Word2D::subword(int x, int y, int w, int h) const {
    if (x < 0 || y < 0 || x + w > width || y + h > height)
        throw std::out_of_range("Word2D::subword: rectangle out of bounds");
    Word2D out(w, h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) out.at(i, j) = at(x + i, y + j);
    return out;
}

std::string Word2D::to_string() const {
    std::string s;
    for (int y = height - 1; y >= 0; --y) {
        for (int x = 0; x < width; ++x) {
            if (x) s += ' ';
            s += std::to_string(at(x, y));
        }
        if (y) s += '\n';
    }
    return s;
}

Word2D concat(int direction, const Word2D& u, const Word2D& v) {
    if (direction == 1) {
        if (u.height != v.height)
            throw std::invalid_argument("concat e1: height mismatch");
        Word2D out(u.width + v.width, u.height);
        for (int y = 0; y < u.height; ++y) {
            for (int x = 0; x < u.width; ++x) out.at(x, y) = u.at(x, y);
            for (int x = 0; x < v.width; ++x) out.at(u.width + x, y) = v.at(x, y);
        }
        return out;
    }
    if (direction == 2) {
        if (u.width != v.width)
            throw std::invalid_argument("concat e2: width mismatch");
        Word2D out(u.width, u.height + v.height);
        for (int y = 0; y < u.height; ++y)
            for (int x = 0; x < u.width; ++x) out.at(x, y) = u.at(x, y);
        for (int y = 0; y < v.height; ++y)
            for (int x = 0; x < v.width; ++x) out.at(x, u.height + y) = v.at(x, y);
        return out;
    }
    throw std::invalid_argument("concat: direction must be 1 or 2");
}

std::vector<Word2D> subwords_of_shape(const Word2D& u, int w, int h) {
    std::vector<Word2D> out;
    for (int y = 0; y + h <= u.height; ++y)
        for (int x = 0; x + w <= u.width; ++x) out.push_back(u.subword(x, y, w, h));
    return out;
}

}  // namespace fibtiles
