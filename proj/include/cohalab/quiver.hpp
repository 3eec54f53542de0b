#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohalab/dimvector.hpp"

namespace cohalab {

struct QuiverValidation {
    bool ok = true;
    int bad_i = -1; // 0-based indices of the offending pair when !ok
    int bad_j = -1;
    std::string message;
};

/// Symmetric quiver given by its arrow-count matrix a_{ij} (arrows i -> j).
/// Everything in scope depends only on the counts.
struct Quiver {
    int vertex_count = 0;
    std::vector<std::vector<int>> arrows;

    Quiver() = default;
    Quiver(int r, std::vector<std::vector<int>> a) : vertex_count(r), arrows(std::move(a)) {
        QuiverValidation v = validate();
        if (!v.ok) throw std::invalid_argument(v.message);
    }

    /// One vertex, `loops` loops.
    static Quiver one_vertex(int loops) { return Quiver(1, {{loops}}); }

    QuiverValidation validate() const {
        QuiverValidation v;
        if (vertex_count <= 0) {
            v.ok = false;
            v.message = "quiver: vertex count must be positive";
            return v;
        }
        if (static_cast<int>(arrows.size()) != vertex_count) {
            v.ok = false;
            v.message = "quiver: arrow matrix has wrong number of rows";
            return v;
        }
        for (int i = 0; i < vertex_count; ++i) {
            if (static_cast<int>(arrows[i].size()) != vertex_count) {
                v.ok = false;
                v.message = "quiver: arrow matrix row " + std::to_string(i + 1) + " has wrong length";
                return v;
            }
            for (int j = 0; j < vertex_count; ++j) {
                if (arrows[i][j] < 0) {
                    v.ok = false;
                    v.bad_i = i;
                    v.bad_j = j;
                    v.message = "quiver: negative arrow count at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")";
                    return v;
                }
            }
        }
        for (int i = 0; i < vertex_count; ++i)
            for (int j = i + 1; j < vertex_count; ++j)
                if (arrows[i][j] != arrows[j][i]) {
                    v.ok = false;
                    v.bad_i = i;
                    v.bad_j = j;
                    v.message = "quiver: arrow matrix not symmetric at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")";
                    return v;
                }
        return v;
    }

    /// Euler form on basis vectors: chi(e_i, e_j) = delta_{ij} - a_{ij}.
    int euler(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return (i == j ? 1 : 0) - arrows[i][j];
    }

    /// chi(d, e) = sum_i d_i e_i - sum_{a:i->j} d_i e_j.
    long long euler_form(const DimVector& d, const DimVector& e) const {
        if (d.size() != vertex_count || e.size() != vertex_count)
            throw std::invalid_argument("euler_form: dimension vector length mismatch");
        long long s = 0;
        for (int i = 0; i < vertex_count; ++i)
            for (int j = 0; j < vertex_count; ++j)
                s += static_cast<long long>(d[i]) * e[j] * euler(i, j);
        return s;
    }

    int euler_self(const DimVector& d) const { return static_cast<int>(euler_form(d, d)); }

    /// Locality function N(i,j) = -chi(e_i, e_j). For a symmetric quiver,
    /// N(i,j) >= 0 for i != j and N(i,i) >= -1.
    int locality(int i, int j) const { return -euler(i, j); }

    /// Effective locality N_+ = max(N, 0); order -1 self-locality reduces
    /// to order 0.
    int locality_plus(int i, int j) const { return std::max(locality(i, j), 0); }

    /// chi(d,d) mod 2, in {0,1}.
    int parity(const DimVector& d) const {
        long long c = euler_form(d, d);
        return static_cast<int>(((c % 2) + 2) % 2);
    }

    std::string render() const {
        std::ostringstream os;
        os << "quiver on " << vertex_count << " vertices, arrows [";
        for (int i = 0; i < vertex_count; ++i) {
            if (i) os << "; ";
            for (int j = 0; j < vertex_count; ++j) {
                if (j) os << ",";
                os << arrows[i][j];
            }
        }
        os << "]";
        return os.str();
    }

private:
    void check_vertex(int i) const {
        if (i < 0 || i >= vertex_count) throw std::out_of_range("quiver: vertex index out of range");
    }
};

} // namespace cohalab
