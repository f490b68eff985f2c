#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "wgcalc/classfun.hpp"
#include "wgcalc/partitions.hpp"
#include "wgcalc/rational.hpp"
#include "wgcalc/symgroup.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

/// Sparse exact-rational element of the group algebra of S_n. Zero coefficients
/// are never stored; all keys share the same n.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("GroupAlgebraElement: n must be >= 0");
    }

    static GroupAlgebraElement basis(const Permutation& sigma) {
        GroupAlgebraElement e(sigma.size());
        e.terms_.emplace(sigma, Rational(1));
        return e;
    }

    int weight() const { return n_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Permutation& sigma) const {
        const auto it = terms_.find(sigma);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Permutation& sigma, const Rational& coeff) {
        if (sigma.size() != n_)
            throw std::invalid_argument("GroupAlgebraElement: permutation size mismatch");
        if (coeff.is_zero()) return;
        const auto it = terms_.find(sigma);
        if (it == terms_.end()) {
            terms_.emplace(sigma, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& other) {
        if (other.n_ != n_)
            throw std::invalid_argument("GroupAlgebraElement: weight mismatch");
        for (const auto& [sigma, coeff] : other.terms_) add_term(sigma, coeff);
        return *this;
    }

    GroupAlgebraElement& operator*=(const Rational& scalar) {
        if (scalar.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [sigma, coeff] : terms_) coeff *= scalar;
        }
        return *this;
    }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                         const GroupAlgebraElement& b) {
        return a += b;
    }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) {
        return a *= s;
    }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::map<Permutation, Rational> terms_;
};

/// Bilinear extension of the group law: the coefficient of sigma*tau picks up
/// a(sigma) b(tau).
inline GroupAlgebraElement algebra_multiply(const GroupAlgebraElement& a,
                                            const GroupAlgebraElement& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("algebra_multiply: weight mismatch");
    GroupAlgebraElement out(a.weight());
    for (const auto& [sigma, ca] : a.terms())
        for (const auto& [tau, cb] : b.terms())
            out.add_term(sigma.compose(tau), ca * cb);
    return out;
}

/// J_k = (1,k) + (2,k) + ... + (k-1,k); J_1 = 0.
inline GroupAlgebraElement jucys_murphy(int k, int n) {
    if (k < 1 || k > n)
        throw std::invalid_argument("jucys_murphy: need 1 <= k <= n");
    if (n > group_cap())
        throw std::length_error("jucys_murphy: n exceeds the group cap");
    GroupAlgebraElement jm(n);
    for (int i = 1; i < k; ++i)
        jm.add_term(Permutation::transposition(n, i - 1, k - 1), Rational(1));
    return jm;
}

/// The expanded product (d + J_1)(d + J_2)...(d + J_n). As a function on S_n it
/// equals sigma -> d^{#sigma}, for every d including d < n.
inline GroupAlgebraElement product_d_plus_jm(int n, int d) {
    if (n < 1) throw std::invalid_argument("product_d_plus_jm: n must be >= 1");
    if (d < 1) throw std::invalid_argument("product_d_plus_jm: d must be >= 1");
    if (n > group_cap())
        throw std::length_error("product_d_plus_jm: n exceeds the group cap");
    GroupAlgebraElement acc = GroupAlgebraElement::basis(Permutation::identity(n));
    acc *= Rational(d);  // d + J_1 with J_1 = 0
    for (int k = 2; k <= n; ++k) {
        GroupAlgebraElement next = acc;
        next *= Rational(d);
        next += algebra_multiply(acc, jucys_murphy(k, n));
        acc = std::move(next);
    }
    return acc;
}

/// e_r(J_1, ..., J_n), the elementary symmetric polynomial in the Jucys-Murphy
/// elements. Equals the indicator of permutations with exactly n - r cycles.
/// e_0 is the identity by the empty-product convention.
inline GroupAlgebraElement elementary_symmetric_jm(int r, int n) {
    if (n < 1) throw std::invalid_argument("elementary_symmetric_jm: n must be >= 1");
    if (r < 0 || r > n)
        throw std::invalid_argument("elementary_symmetric_jm: need 0 <= r <= n");
    if (n > group_cap())
        throw std::length_error("elementary_symmetric_jm: n exceeds the group cap");
    // DP over prefixes: e_r(J_1..J_k) = e_r(J_1..J_{k-1}) + e_{r-1}(J_1..J_{k-1}) J_k.
    std::vector<GroupAlgebraElement> e(r + 1, GroupAlgebraElement(n));
    e[0] = GroupAlgebraElement::basis(Permutation::identity(n));
    for (int k = 1; k <= n; ++k) {
        const GroupAlgebraElement jk = jucys_murphy(k, n);
        for (int s = std::min(r, k); s >= 1; --s)
            e[s] += algebra_multiply(e[s - 1], jk);
    }
    return e[r];
}

struct NovakReport {
    bool product_matches_char_pi = false;
    bool inverse_checked = false;   // false when d < n (the identity needs d >= n)
    bool inverse_holds = false;
    std::string skip_reason;

    bool pass() const {
        return product_matches_char_pi && (!inverse_checked || inverse_holds);
    }
};

/// Checks (a) that the expanded product (d+J_1)...(d+J_n) equals sigma -> d^{#sigma}
/// on all of S_n, and (b) for d >= n, that convolving its class-function image
/// with the Weingarten function gives the convolution unit exactly.
inline NovakReport check_novak_identity(int n, int d) {
    NovakReport report;
    const GroupAlgebraElement product = product_d_plus_jm(n, d);

    report.product_matches_char_pi = true;
    for (const auto& sigma : enumerate_group(n)) {
        const Rational expected(pow_integer(Integer(d), sigma.num_cycles()));
        if (product.coefficient(sigma) != expected) {
            report.product_matches_char_pi = false;
            break;
        }
    }

    if (d < n) {
        report.skip_reason = "inverse relation requires d >= n";
        return report;
    }
    report.inverse_checked = true;

    // Class-function image of the product, read off the element itself.
    ClassFunction image(n);
    bool constant_on_classes = true;
    for (const auto& mu : enumerate_partitions(n)) {
        std::optional<Rational> value;
        for (const auto& [sigma, coeff] : product.terms()) {
            if (sigma.cycle_type() != mu) continue;
            if (!value) {
                value = coeff;
            } else if (*value != coeff) {
                constant_on_classes = false;
            }
        }
        image.set(mu, value.value_or(Rational(0)));
    }
    report.inverse_holds =
        constant_on_classes &&
        convolve(image, weingarten_class_function(n, d)) == delta_e(n);
    return report;
}

struct EigenvalueBoundReport {
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    double bound = 0.0;       // k - 1
    double tolerance = 1e-9;
    bool pass = false;
};

/// Numerical spot check: the left-regular matrix of J_k is symmetric with 0/1
/// entries and row sums k-1, so its spectrum lies in [-(k-1), k-1]. Uses a
/// dense eigensolver on the n! x n! matrix; floating point with tolerance 1e-9.
inline EigenvalueBoundReport jm_eigenvalue_bound_check(int k, int n) {
    if (n > 5)
        throw std::length_error(
            "jm_eigenvalue_bound_check: capped at n <= 5 (n! x n! dense matrix)");
    if (k < 1 || k > n)
        throw std::invalid_argument("jm_eigenvalue_bound_check: need 1 <= k <= n");

    const auto group = enumerate_group(n);
    std::map<Permutation, int> index;
    for (std::size_t s = 0; s < group.size(); ++s) index.emplace(group[s], s);

    const long order = static_cast<long>(group.size());
    Eigen::MatrixXd regular = Eigen::MatrixXd::Zero(order, order);
    for (long col = 0; col < order; ++col)
        for (int i = 1; i < k; ++i) {
            const Permutation image =
                Permutation::transposition(n, i - 1, k - 1).compose(group[col]);
            regular(index.at(image), col) += 1.0;
        }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(regular,
                                                          Eigen::EigenvaluesOnly);
    EigenvalueBoundReport report;
    report.min_eigenvalue = order > 0 ? solver.eigenvalues().minCoeff() : 0.0;
    report.max_eigenvalue = order > 0 ? solver.eigenvalues().maxCoeff() : 0.0;
    report.bound = k - 1;
    report.pass = report.min_eigenvalue >= -report.bound - report.tolerance &&
                  report.max_eigenvalue <= report.bound + report.tolerance;
    return report;
}

}  // namespace wgcalc
