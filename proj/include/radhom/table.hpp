#pragma once

#include <string>
#include <vector>

#include "radhom/subset.hpp"

namespace radhom {

/// Dense rows x cols table of element indices, row-major.
class Table {
public:
    Table() = default;
    Table(int rows, int cols, Elem fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    /// Throws ShapeError on ragged rows.
    static Table from_rows(const std::vector<std::vector<Elem>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem operator()(int r, int c) const { return data_[idx(r, c)]; }
    Elem& operator()(int r, int c) { return data_[idx(r, c)]; }

    std::vector<std::vector<Elem>> to_rows() const;

    /// Throws ShapeError unless every entry lies in [0, bound).
    void require_entries_below(int bound, const std::string& what) const;

    bool operator==(const Table&) const = default;

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Elem> data_;
};

/// "(a,b,c)" style witness text.
std::string witness(std::initializer_list<Elem> elems);

}  // namespace radhom
