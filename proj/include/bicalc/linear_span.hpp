#ifndef BICALC_LINEAR_SPAN_HPP
#define BICALC_LINEAR_SPAN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bicalc/rational_function.hpp"

namespace bicalc {

template <class Key>
using SparseVector = std::map<Key, Scalar>;

template <class Key>
void axpy(SparseVector<Key>& y, const Scalar& a, const SparseVector<Key>& x) {
    for (const auto& [k, v] : x) {
        auto it = y.find(k);
        if (it == y.end()) {
            Scalar av = a * v;
            if (!av.is_zero()) y.emplace(k, std::move(av));
        }
        else {
            it->second += a * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

/// Span of finitely many sparse vectors over the scalar field, kept in
/// reduced row echelon form.  Each echelon row remembers how it combines
/// the accepted generators, so membership queries also return explicit
/// coordinates.
template <class Key>
class LinearSpan {
public:
    /// Adds a generator; returns false (and keeps nothing) if it is
    /// already in the span.
    bool insert(const SparseVector<Key>& v) {
        const std::size_t index = generators_.size();
        Row row{v, {}};
        row.combination.resize(index + 1);
        row.combination[index] = Scalar(1);
        reduce(row);
        if (row.vec.empty()) return false;
        generators_.push_back(v);
        for (auto& [p, r] : rows_) r.combination.resize(index + 1);

        auto [pivot, lead] = *row.vec.begin();
        Scalar inv = lead.inverse();
        scale(row, inv);
        for (auto& [p, r] : rows_) {
            auto it = r.vec.find(pivot);
            if (it == r.vec.end()) continue;
            Scalar f = -it->second;
            add_scaled(r, f, row);
        }
        rows_.emplace(pivot, std::move(row));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVector<Key>>& generators() const { return generators_; }

    bool contains(const SparseVector<Key>& v) const { return coordinates(v).has_value(); }

    /// Coefficients c with v == sum c[i] * generators()[i], if v is in the span.
    std::optional<std::vector<Scalar>> coordinates(const SparseVector<Key>& v) const {
        Row row{v, std::vector<Scalar>(generators_.size())};
        // v - sum c_i g_i is tracked with negated combination entries.
        reduce(row);
        if (!row.vec.empty()) return std::nullopt;
        std::vector<Scalar> c;
        c.reserve(row.combination.size());
        for (auto& s : row.combination) c.push_back(-s);
        return c;
    }

private:
    struct Row {
        SparseVector<Key> vec;
        std::vector<Scalar> combination;
    };

    static void scale(Row& r, const Scalar& s) {
        for (auto& [k, v] : r.vec) v *= s;
        for (auto& c : r.combination) c *= s;
    }

    static void add_scaled(Row& r, const Scalar& f, const Row& other) {
        axpy(r.vec, f, other.vec);
        if (r.combination.size() < other.combination.size()) r.combination.resize(other.combination.size());
        for (std::size_t i = 0; i < other.combination.size(); ++i)
            if (!other.combination[i].is_zero()) r.combination[i] += f * other.combination[i];
    }

    void reduce(Row& row) const {
        for (const auto& [pivot, r] : rows_) {
            auto it = row.vec.find(pivot);
            if (it == row.vec.end()) continue;
            Scalar f = -it->second;
            add_scaled(row, f, r);
        }
    }

    std::vector<SparseVector<Key>> generators_;
    std::map<Key, Row> rows_;
};

/// One solution of A z = b by Gauss-Jordan elimination (free unknowns set
/// to zero), or nullopt when the system is inconsistent.
inline std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Scalar> z(cols);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) z[pivot_cols[i]] = b[i];
    return z;
}

}  // namespace bicalc

#endif
