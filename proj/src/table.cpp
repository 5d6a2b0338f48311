#include "radhom/table.hpp"

#include <sstream>

#include "radhom/errors.hpp"

namespace radhom {

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    Table t(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw ShapeError("table row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < c; ++j) t(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return t;
}

std::vector<std::vector<Elem>> Table::to_rows() const {
    std::vector<std::vector<Elem>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    return out;
}

void Table::require_entries_below(int bound, const std::string& what) const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Elem v = (*this)(i, j);
            if (v < 0 || v >= bound)
                throw ShapeError(what + " entry at " + witness({i, j}) + " out of range: " + std::to_string(v));
        }
}

std::string witness(std::initializer_list<Elem> elems) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (Elem e : elems) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace radhom
