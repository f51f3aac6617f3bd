#pragma once

#include <cstdint>
#include <vector>

#include "d2p/gf2m.hpp"

namespace d2p::detail {

/// Incremental reduced row echelon form over GF(2^m). Rows are dense
/// vectors of raw encodings; pivots are normalized to 1 and eliminated
/// above and below, so the stored basis is canonical.
class Echelon {
  public:
    Echelon(const Field& field, std::size_t cols) : field_(&field), cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduce `row` against the current basis in place.
    void reduce(std::vector<std::uint32_t>& row) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::uint32_t c = row[pivots_[k]];
            if (c == 0) continue;
            const auto& base = rows_[k];
            for (std::size_t j = pivots_[k]; j < cols_; ++j)
                if (base[j]) row[j] ^= field_->mul_bits(c, base[j]);
        }
    }

    /// Insert a row; returns true (and grows the rank) iff it was
    /// independent of the basis so far.
    bool insert(std::vector<std::uint32_t> row) {
        reduce(row);
        std::size_t piv = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (row[j]) {
                piv = j;
                break;
            }
        if (piv == cols_) return false;
        const std::uint32_t s = field_->inv_bits(row[piv]);
        for (std::size_t j = piv; j < cols_; ++j)
            if (row[j]) row[j] = field_->mul_bits(row[j], s);
        // eliminate the new pivot column from existing rows
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const std::uint32_t c = rows_[k][piv];
            if (c == 0) continue;
            for (std::size_t j = piv; j < cols_; ++j)
                if (row[j]) rows_[k][j] ^= field_->mul_bits(c, row[j]);
        }
        // keep rows ordered by pivot column
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < piv) ++at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), piv);
        return true;
    }

  private:
    const Field* field_;
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Dense square matrices of raw encodings, row-major.
using MatBits = std::vector<std::uint32_t>;

inline MatBits mat_identity(int n) {
    MatBits m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
}

inline MatBits mat_mul(int n, const MatBits& a, const MatBits& b, const Field& f) {
    MatBits out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::uint32_t aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                const std::uint32_t bkj = b[static_cast<std::size_t>(k) * n + j];
                if (bkj) out[static_cast<std::size_t>(i) * n + j] ^= f.mul_bits(aik, bkj);
            }
        }
    return out;
}

inline std::vector<std::uint32_t> mat_vec(int n, const MatBits& a,
                                          const std::vector<std::uint32_t>& v, const Field& f) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::uint32_t acc = 0;
        for (int j = 0; j < n; ++j) {
            const std::uint32_t aij = a[static_cast<std::size_t>(i) * n + j];
            if (aij && v[static_cast<std::size_t>(j)])
                acc ^= f.mul_bits(aij, v[static_cast<std::size_t>(j)]);
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

inline std::size_t mat_rank(int n, const MatBits& a, const Field& f) {
    Echelon ech(f, static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> row(a.begin() + static_cast<std::ptrdiff_t>(i) * n,
                                       a.begin() + static_cast<std::ptrdiff_t>(i + 1) * n);
        ech.insert(std::move(row));
    }
    return ech.rank();
}

}  // namespace d2p::detail
