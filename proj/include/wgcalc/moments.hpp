#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wgcalc/classfun.hpp"
#include "wgcalc/partitions.hpp"
#include "wgcalc/rational.hpp"
#include "wgcalc/symgroup.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

/// Query for the Haar integral of
///   u_{i_1 j_1} ... u_{i_n j_n} * conj(u_{i'_1 j'_1}) ... conj(u_{i'_n' j'_n'}).
/// The plain and conjugate halves may have different lengths (the integral then
/// vanishes).
struct MomentQuery {
    MultiIndex row, col;             // i, j
    MultiIndex row_conj, col_conj;   // i', j'
    int d = 1;

    MomentQuery(MultiIndex i, MultiIndex j, MultiIndex ip, MultiIndex jp, int dim)
        : row(std::move(i)), col(std::move(j)), row_conj(std::move(ip)),
          col_conj(std::move(jp)), d(dim) {
        if (d < 1) throw std::invalid_argument("MomentQuery: d must be >= 1");
        if (row.size() != col.size() || row_conj.size() != col_conj.size())
            throw std::invalid_argument("MomentQuery: row/column lengths differ");
        validate_multiindex(row, d, "MomentQuery i");
        validate_multiindex(col, d, "MomentQuery j");
        validate_multiindex(row_conj, d, "MomentQuery i'");
        validate_multiindex(col_conj, d, "MomentQuery j'");
    }

    int n() const { return static_cast<int>(row.size()); }
    int n_conj() const { return static_cast<int>(row_conj.size()); }
};

struct MomentDetail {
    Rational value;
    long long sigma_matches = 0;  // #{sigma : sigma(i) = i'}
    long long tau_matches = 0;    // #{tau : tau(j) = j'}
};

/// The permutation-pairing expansion of the integral:
///   sum over sigma(i) = i', tau(j) = j' of Wg(cycle_type(tau sigma^{-1}), d).
/// Matching permutations are enumerated output-sensitively, so the cost is the
/// product of the two match counts, not (n!)^2. Degenerate n = n' = 0 yields 1;
/// mismatched lengths or value multisets yield 0.
inline MomentDetail haar_moment_detail(const MomentQuery& q) {
    if (q.n() != q.n_conj()) return {Rational(0), 0, 0};
    if (q.n() == 0) return {Rational(1), 1, 1};

    const auto sigmas = matching_permutations(q.row, q.row_conj);
    if (sigmas.empty()) return {Rational(0), 0, 0};
    const auto taus = matching_permutations(q.col, q.col_conj);
    if (taus.empty()) return {Rational(0), static_cast<long long>(sigmas.size()), 0};

    const ClassFunction& wg = weingarten_class_function(q.n(), q.d);
    Rational total(0);
    for (const auto& sigma : sigmas) {
        const Permutation sigma_inv = sigma.inverse();
        for (const auto& tau : taus) total += wg.at(tau.compose(sigma_inv).cycle_type());
    }
    return {std::move(total), static_cast<long long>(sigmas.size()),
            static_cast<long long>(taus.size())};
}

inline Rational haar_moment(const MomentQuery& q) { return haar_moment_detail(q).value; }

/// Closed form for a single-row moment: for a composition a of n into exactly d
/// non-negative parts,
///   integral of prod_j |u_{1j}|^{2 a_j} = (d-1)!/(n+d-1)! * prod_j a_j!.
inline Rational hewitt_ross_row_moment(const std::vector<int>& a, int d) {
    if (d < 1) throw std::invalid_argument("hewitt_ross_row_moment: d must be >= 1");
    if (static_cast<int>(a.size()) != d)
        throw std::invalid_argument("hewitt_ross_row_moment: composition must have exactly " +
                                    std::to_string(d) + " parts");
    long n = 0;
    for (int part : a) {
        if (part < 0)
            throw std::invalid_argument("hewitt_ross_row_moment: parts must be >= 0");
        n += part;
    }
    Integer num = factorial(d - 1);
    for (int part : a) num *= factorial(part);
    return Rational(num, factorial(n + d - 1));
}

/// The multiindex pair realizing the single-row configuration: column index j
/// lists value v repeated a_v times, row index 1 everywhere.
inline MomentQuery hewitt_ross_query(const std::vector<int>& a, int d) {
    MultiIndex col;
    for (int v = 1; v <= static_cast<int>(a.size()); ++v)
        col.insert(col.end(), a[v - 1], v);
    const MultiIndex row(col.size(), 1);
    return MomentQuery(row, col, row, col, d);
}

/// integral of |u_{ij}|^{2n} = 1/binomial(d+n-1, d-1).
inline Rational single_entry_moment(int n, int d) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("single_entry_moment: n, d must be >= 1");
    return Rational(Integer(1), binomial(d + n - 1, d - 1));
}

/// integral of |tr U|^{2n} = sum over lambda of n with at most d rows of
/// dim_specht(lambda)^2. An integer.
inline Integer trace_moment(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("trace_moment: n, d must be >= 1");
    Integer total(0);
    for (const auto& lambda : enumerate_partitions(n, d)) {
        const Integer dim = dim_specht(lambda);
        total += dim * dim;
    }
    return total;
}

namespace detail {

inline long long checked_power(int d, int n, long long budget, const char* what) {
    long long p = 1;
    for (int k = 0; k < n; ++k) {
        p *= d;
        if (p > budget)
            throw std::length_error(std::string(what) + ": d^n = " + std::to_string(d) +
                                    "^" + std::to_string(n) + " exceeds the budget " +
                                    std::to_string(budget));
    }
    return p;
}

template <typename Fn>
void for_each_multiindex(int n, int d, Fn&& fn) {
    MultiIndex mi(n, 1);
    while (true) {
        fn(mi);
        int k = n - 1;
        while (k >= 0 && mi[k] == d) mi[k--] = 1;
        if (k < 0) break;
        ++mi[k];
    }
}

}  // namespace detail

/// Direct evaluation of the stabilizer-sum identity
///   integral of |tr U|^{2n} = n! * sum over i in {1..d}^n, sigma in Stab(i) of Wg(sigma).
/// Must agree with trace_moment. The sum ranges over d^n multiindices, guarded
/// by `budget`.
inline Rational trace_moment_via_sum(int n, int d, long long budget = 1'000'000) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("trace_moment_via_sum: n, d must be >= 1");
    if (n > group_cap())
        throw std::length_error("trace_moment_via_sum: n exceeds the group cap");
    detail::checked_power(d, n, budget, "trace_moment_via_sum");

    const ClassFunction& wg = weingarten_class_function(n, d);
    Rational total(0);
    detail::for_each_multiindex(n, d, [&](const MultiIndex& mi) {
        for_each_matching(mi, mi, [&](const Permutation& sigma) {
            total += wg.at(sigma.cycle_type());
        });
    });
    return Rational(factorial(n)) * total;
}

/// The block-rotation permutation gamma = gamma_1 ... gamma_n in S_{kn}: the
/// numbers 1..kn split into n blocks of length k and gamma_l rotates the l-th
/// block cyclically, gamma_l = (lk, lk-1, ..., lk-k+1). Built so that for the
/// multiindex i listing the entry chains of tr(U^k)^n, gamma(i) realigns each
/// chain by one step; k = 1 gives the identity.
inline Permutation trace_power_rotation(int k, int n) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("trace_power_rotation: k, n must be >= 1");
    std::vector<int> img(static_cast<std::size_t>(k) * n);
    for (int block = 0; block < n; ++block)
        for (int t = 0; t < k; ++t)
            img[block * k + t] = block * k + (t + k - 1) % k;
    return Permutation(std::move(img));
}

/// integral of |tr(U^k)|^{2n}, evaluated by the literal reduction
///   sum over i, j in {1..d}^{kn} of haar_moment(i, gamma(i), gamma(j), j).
/// Equals trace_moment(n, d) for k = 1 and k^n n! whenever kn <= d. The pair
/// loop runs over (d^{kn})^2 queries, most of which exit on the multiset check;
/// d^{kn} is guarded by `budget`.
inline Rational trace_power_moment(int k, int n, int d, long long budget = 2048) {
    if (k < 1 || n < 1 || d < 1)
        throw std::invalid_argument("trace_power_moment: k, n, d must be >= 1");
    if (k * n > group_cap())
        throw std::length_error("trace_power_moment: kn exceeds the group cap");
    detail::checked_power(d, k * n, budget, "trace_power_moment");

    const int kn = k * n;
    const Permutation gamma = trace_power_rotation(k, n);
    const ClassFunction& wg = weingarten_class_function(kn, d);

    std::vector<MultiIndex> indices;
    std::vector<MultiIndex> rotated;
    detail::for_each_multiindex(kn, d, [&](const MultiIndex& mi) {
        indices.push_back(mi);
        rotated.push_back(act_on_multiindex(gamma, mi));
    });

    Rational total(0);
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) {
            // haar_moment(i, gamma(i), gamma(j), j) with i = indices[a], j = indices[b]
            for_each_matching(indices[a], rotated[b], [&](const Permutation& sigma) {
                const Permutation sigma_inv = sigma.inverse();
                for_each_matching(rotated[a], indices[b], [&](const Permutation& tau) {
                    total += wg.at(tau.compose(sigma_inv).cycle_type());
                });
            });
        }
    }
    return total;
}

/// Expected power-sum traces E[tr(W^{t_1}) ... tr(W^{t_l})] of an invariant
/// Hermitian matrix, keyed by cycle type. Structurally a class function.
using SpectralMoments = ClassFunction;

/// Entry moments of a unitarily invariant Hermitian random matrix:
///   E[W_{i_1 j_1} ... W_{i_n j_n}]
///     = sum over sigma(j) = i, tau in S_n of Wg(sigma^{-1} tau) E[Tr_tau(W)].
/// The tau sum is enumerated directly, so n is capped by the group cap.
inline Rational invariant_hermitian_moment(const MultiIndex& i, const MultiIndex& j,
                                           const SpectralMoments& s, int d) {
    if (d < 1) throw std::invalid_argument("invariant_hermitian_moment: d must be >= 1");
    if (i.size() != j.size() || static_cast<int>(i.size()) != s.weight())
        throw std::invalid_argument("invariant_hermitian_moment: lengths must equal s.n");
    validate_multiindex(i, d, "invariant_hermitian_moment i");
    validate_multiindex(j, d, "invariant_hermitian_moment j");
    const int n = s.weight();
    if (n == 0) return Rational(1);

    const ClassFunction& wg = weingarten_class_function(n, d);
    const auto group = enumerate_group(n);
    std::vector<Partition> tau_types;
    tau_types.reserve(group.size());
    for (const auto& tau : group) tau_types.push_back(tau.cycle_type());

    Rational total(0);
    for_each_matching(j, i, [&](const Permutation& sigma) {
        const Permutation sigma_inv = sigma.inverse();
        for (std::size_t t = 0; t < group.size(); ++t) {
            const Rational& weight = s.at(tau_types[t]);
            if (weight.is_zero()) continue;
            total += wg.at(sigma_inv.compose(group[t]).cycle_type()) * weight;
        }
    });
    return total;
}

}  // namespace wgcalc
