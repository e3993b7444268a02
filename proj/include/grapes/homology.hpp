#ifndef GRAPES_HOMOLOGY_HPP
#define GRAPES_HOMOLOGY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "homotopy_type.hpp"
#include "simplicial.hpp"

namespace grapes {

// Dense integer matrix with exact entries.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> data_;
};

// Reduced (augmented) boundary operator ∂_k. Bases are the sorted k- and
// (k-1)-faces; for k = 0 the target basis is the single empty face, which
// realizes the augmentation row. Entry (τ, σ) is (-1)^j when τ is σ with
// its j-th smallest vertex removed.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 0) throw input_error("boundary_matrix: k must be >= 0");
    std::vector<Face> cols = enumerate_faces(c, k);
    std::vector<Face> rows = enumerate_faces(c, k - 1);
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& elems = cols[j].elements();
        for (std::size_t drop = 0; drop < elems.size(); ++drop) {
            Face tau = cols[j].without(elems[drop]);
            auto it = row_index.find(tau);
            if (it == row_index.end()) throw internal_error("boundary face missing from basis");
            m.at(it->second, j) = (drop % 2 == 0) ? BigInt(1) : BigInt(-1);
        }
    }
    return m;
}

struct SmithResult {
    std::size_t rank = 0;
    std::vector<BigInt> invariant_factors; // d1 | d2 | ..., all positive
};

namespace detail {

// Classic Smith reduction: move the smallest entry to the pivot, clear its
// row and column by exact division steps, then make the pivot divide the
// rest of the submatrix.
template <typename T>
SmithResult snf_impl(std::vector<std::vector<T>> m) {
    SmithResult out;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;

    auto swap_rows = [&](std::size_t a, std::size_t b) { std::swap(m[a], m[b]); };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    };

    while (t < rows && t < cols) {
        // smallest nonzero entry of the trailing submatrix
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j].is_zero()) continue;
                if (!found || T::abs_less(m[i][j], m[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t].is_zero()) continue;
                T q = m[i][t] / m[t][t];
                if (!q.is_zero())
                    for (std::size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
                if (!m[i][t].is_zero()) {
                    swap_rows(t, i); // strictly smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j].is_zero()) continue;
                T q = m[t][j] / m[t][t];
                if (!q.is_zero())
                    for (std::size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
                if (!m[t][j].is_zero()) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide everything that remains
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (!(m[i][j] % m[t][t]).is_zero()) {
                            for (std::size_t jj = t; jj < cols; ++jj)
                                m[t][jj] = m[t][jj] + m[i][jj];
                            clean = false;
                        }
            }
        }
        ++t;
    }

    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) {
        T d = m[i][i].abs();
        if constexpr (std::is_same_v<T, BigInt>)
            out.invariant_factors.push_back(d);
        else
            out.invariant_factors.push_back(BigInt(d.v));
    }
    return out;
}

} // namespace detail

// Rank and invariant factors over the integers. Runs in checked 64-bit
// arithmetic and retries with arbitrary precision when anything overflows,
// so the result is always exact.
inline SmithResult smith_normal_form(const IntegerMatrix& m) {
    bool small = true;
    for (std::size_t i = 0; i < m.rows() && small; ++i)
        for (std::size_t j = 0; j < m.cols() && small; ++j)
            if (!m.at(i, j).fits_int64()) small = false;
    if (small) {
        std::vector<std::vector<CheckedInt64>> w(m.rows(), std::vector<CheckedInt64>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) w[i][j] = m.at(i, j).to_int64();
        try {
            return detail::snf_impl(std::move(w));
        } catch (const std::overflow_error&) {
            // fall through to the exact path
        }
    }
    std::vector<std::vector<BigInt>> w(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) w[i][j] = m.at(i, j);
    return detail::snf_impl(std::move(w));
}

struct HomologyProfile {
    std::map<int, long long> reduced_betti; // nonzero entries only, degree >= -1
    std::set<int> torsion_degrees;

    bool torsion_present() const { return !torsion_degrees.empty(); }
    bool trivial() const { return reduced_betti.empty() && torsion_degrees.empty(); }

    bool operator==(const HomologyProfile&) const = default;
};

inline constexpr std::size_t kHomologyFaceCutoff = 1u << 16;

// Reduced simplicial homology over ℤ via Smith normal form on the
// augmented chain complex. Conventions: ∅ has trivial reduced homology
// (it is contractible); {∅} has exactly β̃_{-1} = 1.
inline HomologyProfile reduced_homology(const SimplicialComplex& c,
                                        std::size_t cutoff = kHomologyFaceCutoff) {
    HomologyProfile profile;
    if (c.is_void()) return profile;

    int top = -1;
    for (const auto& f : c.facets()) top = std::max(top, static_cast<int>(f.size()) - 1);

    std::vector<std::size_t> counts;  // counts[k+1] = number of k-faces
    std::size_t total = 0;
    for (int k = -1; k <= top; ++k) {
        std::size_t nk = enumerate_faces(c, k).size();
        counts.push_back(nk);
        total += nk;
        if (total > cutoff)
            throw resource_error("complex has more than " + std::to_string(cutoff) + " faces");
    }

    std::vector<std::size_t> ranks;              // ranks[k] = rank ∂_k, k = 0..top
    std::vector<bool> torsion_from(top + 1, false); // torsion in degree k-1 from ∂_k
    for (int k = 0; k <= top; ++k) {
        SmithResult s = smith_normal_form(boundary_matrix(c, k));
        ranks.push_back(s.rank);
        for (const auto& d : s.invariant_factors)
            if (d != BigInt(1)) torsion_from[k] = true;
    }

    for (int k = -1; k <= top; ++k) {
        long long nk = static_cast<long long>(counts[k + 1]);
        long long rk = k >= 0 ? static_cast<long long>(ranks[k]) : 0;         // rank ∂_k
        long long rk1 = k + 1 <= top ? static_cast<long long>(ranks[k + 1]) : 0; // rank ∂_{k+1}
        long long betti = nk - rk - rk1;
        if (betti < 0) throw internal_error("negative Betti number");
        if (betti != 0) profile.reduced_betti[k] = betti;
        if (k + 1 <= top && torsion_from[k + 1]) profile.torsion_degrees.insert(k);
    }
    return profile;
}

// Exact agreement between a computed homotopy type and the homology
// profile: wedge multiplicities equal the reduced Betti numbers and no
// torsion anywhere.
inline bool verify(const SimplicialComplex& c, const HomotopyType& t,
                   std::size_t cutoff = kHomologyFaceCutoff) {
    HomologyProfile profile = reduced_homology(c, cutoff);
    if (profile.torsion_present()) return false;
    std::map<int, long long> expected;
    if (!t.is_contractible())
        for (int d : t.sphere_dims()) expected[d] += 1;
    return profile.reduced_betti == expected;
}

} // namespace grapes

#endif
