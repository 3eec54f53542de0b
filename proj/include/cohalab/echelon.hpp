#pragma once

#include <map>
#include <vector>

#include "cohalab/fock.hpp"

namespace cohalab {

/// Incremental row-echelon span of Fock vectors, with deterministic pivots:
/// the lexicographically smallest FockMonomial of each reduced row.
class FockEchelon {
public:
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<FockVector>& rows() const { return rows_; }

    /// Reduces v against the span; inserts the remainder if nonzero.
    /// Returns true when v enlarged the span.
    bool insert(FockVector v) {
        for (const auto& row : rows_) {
            if (v.is_zero()) break;
            const FockMonomial& piv = row.terms().begin()->first;
            auto it = v.terms().find(piv);
            if (it != v.terms().end()) v = v - row.scaled(it->second);
        }
        if (v.is_zero()) return false;
        // normalize the pivot coefficient to 1
        rows_.push_back(v.scaled(Rational(1) / v.terms().begin()->second));
        // keep rows ordered by pivot so reduction stays triangular
        for (size_t i = rows_.size(); i-- > 1;) {
            if (rows_[i].terms().begin()->first < rows_[i - 1].terms().begin()->first)
                std::swap(rows_[i], rows_[i - 1]);
            else
                break;
        }
        return true;
    }

private:
    std::vector<FockVector> rows_;
};

} // namespace cohalab
