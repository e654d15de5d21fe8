#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ghzcert/scalar.h"

namespace ghzcert {

template <class Field>
struct SparseEntry {
    std::uint32_t column;
    Field value;
};

/// A sparse vector with strictly increasing columns and no stored zeros.
template <class Field>
using SparseRow = std::vector<SparseEntry<Field>>;

template <class Field>
Field dot(const SparseRow<Field>& row, const SparseRow<Field>& vec) {
    Field acc{};
    auto it = vec.begin();
    for (const auto& e : row) {
        while (it != vec.end() && it->column < e.column) {
            ++it;
        }
        if (it == vec.end()) {
            break;
        }
        if (it->column == e.column) {
            acc += e.value * it->value;
        }
    }
    return acc;
}

/// Incremental row-echelon form over a field.
///
/// Rows are inserted one at a time and reduced against the current pivots in
/// increasing column order. Every stored row is normalised to a leading 1. In
/// float mode entries with magnitude at or below `tolerance` are dropped; in
/// exact mode only true zeros are.
template <class Field>
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t columns, double tolerance = 0.0)
        : columns_(columns), tolerance_(tolerance), pivot_row_(columns) {}

    std::size_t columns() const { return columns_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t nullity() const { return columns_ - rows_.size(); }
    double tolerance() const { return tolerance_; }

    /// True when some accepted pivot had magnitude within 10x of the tolerance.
    bool near_threshold() const { return near_threshold_; }

    /// Returns true if the row was independent of those already inserted.
    bool insert(SparseRow<Field> row) {
        row = reduce(std::move(row));
        if (row.empty()) {
            return false;
        }
        if (tolerance_ > 0.0 && magnitude(row.front().value) < 10.0 * tolerance_) {
            near_threshold_ = true;
        }
        const Field lead = row.front().value;
        for (auto& e : row) {
            e.value /= lead;
        }
        row.front().value = Field(1);
        pivot_row_[row.front().column] = rows_.size();
        rows_.push_back(std::move(row));
        reduced_ = false;
        return true;
    }

    /// Residual of `row` after elimination against the current pivots.
    SparseRow<Field> reduce(SparseRow<Field> row) const {
        prune(row);
        std::size_t pos = 0;
        while (pos < row.size()) {
            const auto col = row[pos].column;
            const auto& pivot = pivot_row_[col];
            if (!pivot) {
                ++pos;
                continue;
            }
            const Field factor = row[pos].value;
            row = axpy(row, factor, rows_[*pivot]);
        }
        return row;
    }

    bool in_row_space(const SparseRow<Field>& row) const { return reduce(row).empty(); }

    /// Brings the stored rows to reduced row-echelon form.
    void back_substitute() {
        if (reduced_) {
            return;
        }
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            order[r] = r;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return rows_[a].front().column > rows_[b].front().column;
        });
        for (const auto r : order) {
            auto& row = rows_[r];
            std::size_t pos = 1;
            while (pos < row.size()) {
                const auto& pivot = pivot_row_[row[pos].column];
                if (!pivot) {
                    ++pos;
                    continue;
                }
                const Field factor = row[pos].value;
                row = axpy(row, factor, rows_[*pivot]);
            }
        }
        reduced_ = true;
    }

    /// Rows currently stored; in reduced form after back_substitute().
    const std::vector<SparseRow<Field>>& rows() const { return rows_; }

    /// One basis vector per free column: x_free = 1, x_pivot = -R[pivot][free].
    std::vector<SparseRow<Field>> nullspace_basis() {
        back_substitute();
        std::vector<std::vector<std::pair<std::uint32_t, Field>>> scratch(columns_);
        for (const auto& row : rows_) {
            const auto p = row.front().column;
            for (std::size_t k = 1; k < row.size(); ++k) {
                scratch[row[k].column].emplace_back(p, -row[k].value);
            }
        }
        std::vector<SparseRow<Field>> basis;
        basis.reserve(nullity());
        for (std::uint32_t f = 0; f < columns_; ++f) {
            if (pivot_row_[f]) {
                continue;
            }
            auto& entries = scratch[f];
            entries.emplace_back(f, Field(1));
            std::sort(entries.begin(), entries.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseRow<Field> vec;
            vec.reserve(entries.size());
            for (auto& [c, v] : entries) {
                vec.push_back({c, std::move(v)});
            }
            basis.push_back(std::move(vec));
        }
        return basis;
    }

private:
    void prune(SparseRow<Field>& row) const {
        std::erase_if(row, [&](const SparseEntry<Field>& e) { return is_negligible(e.value, tolerance_); });
    }

    // row - factor * pivot_row, merged by column.
    SparseRow<Field> axpy(const SparseRow<Field>& row, const Field& factor, const SparseRow<Field>& pivot) const {
        SparseRow<Field> out;
        out.reserve(row.size() + pivot.size());
        auto a = row.begin();
        auto b = pivot.begin();
        while (a != row.end() || b != pivot.end()) {
            if (b == pivot.end() || (a != row.end() && a->column < b->column)) {
                out.push_back(*a++);
            } else if (a == row.end() || b->column < a->column) {
                Field v = -(factor * b->value);
                if (!is_negligible(v, tolerance_)) {
                    out.push_back({b->column, std::move(v)});
                }
                ++b;
            } else {
                Field v = a->value - factor * b->value;
                if (!is_negligible(v, tolerance_)) {
                    out.push_back({a->column, std::move(v)});
                }
                ++a;
                ++b;
            }
        }
        return out;
    }

    std::size_t columns_;
    double tolerance_;
    std::vector<std::optional<std::size_t>> pivot_row_;
    std::vector<SparseRow<Field>> rows_;
    bool near_threshold_ = false;
    bool reduced_ = true;
};

}  // namespace ghzcert
