#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wgcalc/partitions.hpp"
#include "wgcalc/rational.hpp"
#include "wgcalc/symgroup.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

/// The n! x n! explicit matrices exist purely as a cross-check of the
/// class-function pipeline, so the cap stays small.
inline constexpr int kGramCap = 5;

/// Dense square matrix of exact rationals. Rows and columns are labelled by the
/// permutations of S_n in enumerate_group order.
class ExactMatrix {
public:
    explicit ExactMatrix(long order)
        : order_(order), entries_(static_cast<std::size_t>(order) * order, Rational(0)) {
        if (order < 1) throw std::invalid_argument("ExactMatrix: order must be >= 1");
    }

    static ExactMatrix identity(long order) {
        ExactMatrix m(order);
        for (long k = 0; k < order; ++k) m.at(k, k) = Rational(1);
        return m;
    }

    long order() const { return order_; }

    Rational& at(long row, long col) {
        return entries_[static_cast<std::size_t>(row) * order_ + col];
    }
    const Rational& at(long row, long col) const {
        return entries_[static_cast<std::size_t>(row) * order_ + col];
    }

    ExactMatrix transpose() const {
        ExactMatrix t(order_);
        for (long r = 0; r < order_; ++r)
            for (long c = 0; c < order_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool is_symmetric() const {
        for (long r = 0; r < order_; ++r)
            for (long c = r + 1; c < order_; ++c)
                if (at(r, c) != at(c, r)) return false;
        return true;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.order_ != b.order_)
            throw std::invalid_argument("ExactMatrix: order mismatch");
        ExactMatrix out(a.order_);
        for (long r = 0; r < a.order_; ++r)
            for (long k = 0; k < a.order_; ++k) {
                const Rational& ark = a.at(r, k);
                if (ark.is_zero()) continue;
                for (long c = 0; c < a.order_; ++c) {
                    const Rational& bkc = b.at(k, c);
                    if (!bkc.is_zero()) out.at(r, c) += ark * bkc;
                }
            }
        return out;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.order_ == b.order_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
        return !(a == b);
    }

private:
    long order_;
    std::vector<Rational> entries_;
};

namespace detail {
inline void check_gram_cap(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
    if (n > kGramCap)
        throw std::length_error(std::string(what) + ": n = " + std::to_string(n) +
                                " exceeds the Gram cap " + std::to_string(kGramCap) +
                                " (matrix is n! x n!)");
}
}  // namespace detail

/// Gram matrix of the permutation operators: G[sigma][tau] = d^{#(sigma^{-1} tau)}.
/// Symmetric, diagonal d^n.
inline ExactMatrix gram_matrix(int n, int d) {
    detail::check_gram_cap(n, "gram_matrix");
    if (d < 1) throw std::invalid_argument("gram_matrix: d must be >= 1");
    const auto group = enumerate_group(n);
    ExactMatrix g(static_cast<long>(group.size()));
    for (std::size_t r = 0; r < group.size(); ++r) {
        const Permutation inv = group[r].inverse();
        for (std::size_t c = 0; c < group.size(); ++c)
            g.at(r, c) =
                Rational(pow_integer(Integer(d), inv.compose(group[c]).num_cycles()));
    }
    return g;
}

/// Matrix of the regular action of the Weingarten function:
/// W[tau][sigma] = Wg(tau^{-1} sigma). Symmetric because Wg is a class function.
inline ExactMatrix weingarten_matrix(int n, int d) {
    detail::check_gram_cap(n, "weingarten_matrix");
    if (d < 1) throw std::invalid_argument("weingarten_matrix: d must be >= 1");
    const auto group = enumerate_group(n);
    const ClassFunction& wg = weingarten_class_function(n, d);
    ExactMatrix w(static_cast<long>(group.size()));
    for (std::size_t r = 0; r < group.size(); ++r) {
        const Permutation inv = group[r].inverse();
        for (std::size_t c = 0; c < group.size(); ++c)
            w.at(r, c) = wg.at(inv.compose(group[c]).cycle_type());
    }
    return w;
}

struct MoorePenroseReport {
    bool gwg_equals_g = false;
    bool wgw_equals_w = false;
    bool wg_self_adjoint = false;
    bool gw_self_adjoint = false;
    bool inverse_checked = false;  // true when d >= n, where W must be G^{-1}
    bool inverse_holds = false;

    bool pass() const {
        return gwg_equals_g && wgw_equals_w && wg_self_adjoint && gw_self_adjoint &&
               (!inverse_checked || inverse_holds);
    }
};

/// Verifies the four Moore-Penrose identities GWG = G, WGW = W, (WG)* = WG,
/// (GW)* = GW with exact arithmetic. Entries are real rationals, so the
/// conjugate transpose reduces to the transpose. For d >= n additionally checks
/// WG = identity (the inverse and the Moore-Penrose inverse agree).
inline MoorePenroseReport verify_moore_penrose(int n, int d) {
    detail::check_gram_cap(n, "verify_moore_penrose");
    const ExactMatrix g = gram_matrix(n, d);
    const ExactMatrix w = weingarten_matrix(n, d);
    const ExactMatrix wg = w * g;
    const ExactMatrix gw = g * w;

    MoorePenroseReport report;
    report.gwg_equals_g = (gw * g == g);
    report.wgw_equals_w = (wg * w == w);
    report.wg_self_adjoint = wg.is_symmetric();
    report.gw_self_adjoint = gw.is_symmetric();
    if (d >= n) {
        report.inverse_checked = true;
        report.inverse_holds = (wg == ExactMatrix::identity(g.order()));
    }
    return report;
}

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination with
/// full pivoting. Pivots are leading principal minors of the permuted matrix,
/// so every division is exact.
inline long bareiss_rank(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    const long rows = static_cast<long>(m.size());
    const long cols = static_cast<long>(m[0].size());
    Integer previous_pivot(1);
    long rank = 0;
    for (long step = 0; step < std::min(rows, cols); ++step) {
        long pr = -1, pc = -1;
        for (long r = step; r < rows && pr < 0; ++r)
            for (long c = step; c < cols; ++c)
                if (m[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        std::swap(m[step], m[pr]);
        if (pc != step)
            for (long r = 0; r < rows; ++r) std::swap(m[r][step], m[r][pc]);
        for (long r = step + 1; r < rows; ++r) {
            for (long c = step + 1; c < cols; ++c) {
                Integer numerator = m[step][step] * m[r][c] - m[r][step] * m[step][c];
                mpz_divexact(m[r][c].get_mpz_t(), numerator.get_mpz_t(),
                             previous_pivot.get_mpz_t());
            }
            m[r][step] = 0;
        }
        previous_pivot = m[step][step];
        ++rank;
    }
    return rank;
}

/// Exact rank and nullity of the Gram matrix. Satisfies
/// rank = sum over lambda with at most d rows of dim_specht^2 and
/// nullity = n! - rank.
inline std::pair<long, long> rank_and_nullity(int n, int d) {
    detail::check_gram_cap(n, "rank_and_nullity");
    if (d < 1) throw std::invalid_argument("rank_and_nullity: d must be >= 1");
    const auto group = enumerate_group(n);
    const long order = static_cast<long>(group.size());
    std::vector<std::vector<Integer>> m(order, std::vector<Integer>(order));
    for (long r = 0; r < order; ++r) {
        const Permutation inv = group[r].inverse();
        for (long c = 0; c < order; ++c)
            m[r][c] = pow_integer(Integer(d), inv.compose(group[c]).num_cycles());
    }
    const long rank = bareiss_rank(std::move(m));
    return {rank, order - rank};
}

}  // namespace wgcalc
