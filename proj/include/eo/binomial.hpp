#pragma once

// Memoized Pascal triangle. The closed forms and the tree counts only ever
// need rows up to a few hundred, so a dense table is the right trade.

#include <vector>

#include "numeric.hpp"

namespace eo {

class BinomialTable {
public:
    // binom(n, k) with the usual convention: 0 outside 0 <= k <= n.
    const Integer& operator()(long n, long k) {
        static const Integer zero(0);
        if (n < 0 || k < 0 || k > n) return zero;
        grow(n);
        return rows_[size_t(n)][size_t(k)];
    }

private:
    void grow(long n) {
        while ((long)rows_.size() <= n) {
            size_t m = rows_.size();
            std::vector<Integer> row(m + 1);
            row[0] = Integer(1);
            row[m] = Integer(1);
            for (size_t k = 1; k < m; ++k) row[k] = rows_[m - 1][k - 1] + rows_[m - 1][k];
            rows_.push_back(std::move(row));
        }
    }

    std::vector<std::vector<Integer>> rows_;
};

// Shared table. Single-threaded code base; no locking.
inline BinomialTable& binom_table() {
    static BinomialTable t;
    return t;
}

inline const Integer& binom(long n, long k) { return binom_table()(n, k); }

} // namespace eo
