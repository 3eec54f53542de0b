#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohalab {

/// Dimension vector d in N^I. Length equals the quiver's vertex count.
struct DimVector {
    std::vector<int> entries;

    DimVector() = default;
    explicit DimVector(std::vector<int> e) : entries(std::move(e)) {
        for (int x : entries)
            if (x < 0) throw std::invalid_argument("DimVector: negative entry");
    }
    static DimVector zero(int r) { return DimVector(std::vector<int>(r, 0)); }
    static DimVector unit(int r, int i) {
        std::vector<int> e(r, 0);
        e.at(i) = 1;
        return DimVector(std::move(e));
    }

    int size() const { return static_cast<int>(entries.size()); }
    int operator[](int i) const { return entries.at(i); }

    /// |d| = sum of entries.
    int total() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    bool is_zero() const { return total() == 0; }

    long long dot(const DimVector& w) const {
        if (w.size() != size()) throw std::invalid_argument("DimVector::dot: length mismatch");
        long long s = 0;
        for (int i = 0; i < size(); ++i) s += static_cast<long long>(entries[i]) * w.entries[i];
        return s;
    }

    friend DimVector operator+(const DimVector& a, const DimVector& b) {
        if (a.size() != b.size()) throw std::invalid_argument("DimVector: length mismatch");
        std::vector<int> e(a.entries);
        for (int i = 0; i < b.size(); ++i) e[i] += b.entries[i];
        return DimVector(std::move(e));
    }
    friend DimVector operator-(const DimVector& a, const DimVector& b) {
        if (a.size() != b.size()) throw std::invalid_argument("DimVector: length mismatch");
        std::vector<int> e(a.entries);
        for (int i = 0; i < b.size(); ++i) {
            e[i] -= b.entries[i];
            if (e[i] < 0) throw std::invalid_argument("DimVector: negative difference");
        }
        return DimVector(std::move(e));
    }

    /// Componentwise a <= b.
    bool dominated_by(const DimVector& b) const {
        if (b.size() != size()) return false;
        for (int i = 0; i < size(); ++i)
            if (entries[i] > b.entries[i]) return false;
        return true;
    }

    friend bool operator==(const DimVector& a, const DimVector& b) { return a.entries == b.entries; }
    friend bool operator!=(const DimVector& a, const DimVector& b) { return !(a == b); }
    /// Lexicographic order; used as a deterministic map key.
    friend bool operator<(const DimVector& a, const DimVector& b) { return a.entries < b.entries; }

    std::string render() const {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < size(); ++i) {
            if (i) os << ",";
            os << entries[i];
        }
        os << ")";
        return os.str();
    }
};

/// All d with componentwise 0 <= d <= cap and total degree |d| <= dmax, in lex order.
inline std::vector<DimVector> enumerate_dimvectors(int r, int dmax, const DimVector* cap = nullptr) {
    std::vector<DimVector> out;
    std::vector<int> cur(r, 0);
    while (true) {
        DimVector d{cur};
        if (d.total() <= dmax && (!cap || d.dominated_by(*cap))) out.push_back(d);
        int i = r - 1;
        while (i >= 0) {
            ++cur[i];
            int hi = cap ? std::min(cap->entries[i], dmax) : dmax;
            if (cur[i] <= hi) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cohalab
