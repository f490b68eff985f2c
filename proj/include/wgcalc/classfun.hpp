#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wgcalc/partitions.hpp"
#include "wgcalc/rational.hpp"
#include "wgcalc/symgroup.hpp"

namespace wgcalc {

/// Weight cap for character and class-function computations. Partition counts
/// stay small here (p(12) = 77), unlike the factorial group-enumeration paths.
inline constexpr int kClassFunctionCap = 12;

/// Exact-rational function on the conjugacy classes of S_n. The map is total:
/// every partition of n is present as a key, zeros are stored explicitly, and
/// iteration follows the canonical partition order.
class ClassFunction {
public:
    explicit ClassFunction(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("ClassFunction: n must be >= 0");
        if (n > kClassFunctionCap)
            throw std::length_error("ClassFunction: n = " + std::to_string(n) +
                                    " exceeds the cap " + std::to_string(kClassFunctionCap));
        for (const auto& mu : enumerate_partitions(n)) values_[mu] = Rational(0);
    }

    int weight() const { return n_; }

    const Rational& at(const Partition& mu) const {
        const auto it = values_.find(mu);
        if (it == values_.end())
            throw std::invalid_argument("ClassFunction: " + mu.str() +
                                        " is not a class of S_" + std::to_string(n_));
        return it->second;
    }

    void set(const Partition& mu, Rational value) {
        const auto it = values_.find(mu);
        if (it == values_.end())
            throw std::invalid_argument("ClassFunction: " + mu.str() +
                                        " is not a class of S_" + std::to_string(n_));
        it->second = std::move(value);
    }

    const Rational& at_permutation(const Permutation& sigma) const {
        return at(sigma.cycle_type());
    }

    const std::map<Partition, Rational>& values() const { return values_; }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }
    friend bool operator!=(const ClassFunction& a, const ClassFunction& b) {
        return !(a == b);
    }

private:
    int n_;
    std::map<Partition, Rational> values_;
};

/// Coefficients of a central element on the isotypic blocks, keyed by the
/// partitions of n exactly like ClassFunction.
class FourierCoefficients {
public:
    explicit FourierCoefficients(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("FourierCoefficients: n must be >= 0");
        for (const auto& lambda : enumerate_partitions(n)) coeffs_[lambda] = Rational(0);
    }

    int weight() const { return n_; }

    const Rational& at(const Partition& lambda) const {
        const auto it = coeffs_.find(lambda);
        if (it == coeffs_.end())
            throw std::invalid_argument("FourierCoefficients: bad key " + lambda.str());
        return it->second;
    }

    void set(const Partition& lambda, Rational value) {
        const auto it = coeffs_.find(lambda);
        if (it == coeffs_.end())
            throw std::invalid_argument("FourierCoefficients: bad key " + lambda.str());
        it->second = std::move(value);
    }

    const std::map<Partition, Rational>& values() const { return coeffs_; }

    friend bool operator==(const FourierCoefficients& a, const FourierCoefficients& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    int n_;
    std::map<Partition, Rational> coeffs_;
};

namespace detail {

// Beta-set (Maya diagram) form of the Murnaghan-Nakayama step: removing a
// border strip of length t from lambda is moving one bead down t slots. The
// strip height is the number of beads jumped over, which fixes the sign.
inline long long mn_character(const std::vector<int>& lambda, const std::vector<int>& mu,
                              std::size_t mu_from) {
    if (lambda.empty()) return 1;

    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    static std::mutex memo_mutex;

    const std::vector<int> mu_rest(mu.begin() + mu_from, mu.end());
    const auto key = std::make_pair(lambda, mu_rest);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        const auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const int rows = static_cast<int>(lambda.size());
    std::vector<int> beta(rows);  // strictly decreasing
    for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);

    const int strip = mu[mu_from];
    long long total = 0;
    for (int i = 0; i < rows; ++i) {
        const int target = beta[i] - strip;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < rows; ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> rest;
        for (int j = 0; j < rows; ++j) {
            const int part = nb[j] - (rows - 1 - j);
            if (part > 0) rest.push_back(part);
        }
        const long long sub = mn_character(rest, mu, mu_from + 1);
        total += (jumped % 2 == 0) ? sub : -sub;
    }

    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(key, total);
    }
    return total;
}

}  // namespace detail

/// Character of the irreducible S_n representation indexed by lambda, evaluated
/// on the conjugacy class mu. Murnaghan-Nakayama recursion with memoization;
/// exact integer arithmetic throughout.
inline long long irreducible_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("irreducible_character: weights differ (" +
                                    lambda.str() + " vs " + mu.str() + ")");
    if (lambda.weight() > kClassFunctionCap)
        throw std::length_error("irreducible_character: weight exceeds cap " +
                                std::to_string(kClassFunctionCap));
    return detail::mn_character(lambda.parts(), mu.parts(), 0);
}

/// Character of the permutation action on n-fold tensors: mu -> d^{l(mu)}.
inline ClassFunction char_pi(int n, int d) {
    if (n < 1) throw std::invalid_argument("char_pi: n must be >= 1");
    if (d < 1) throw std::invalid_argument("char_pi: d must be >= 1");
    ClassFunction f(n);
    for (const auto& [mu, unused] : f.values())
        f.set(mu, Rational(pow_integer(Integer(d), mu.length())));
    return f;
}

/// Unit of convolution: 1 on the identity class, 0 elsewhere.
inline ClassFunction delta_e(int n) {
    if (n < 1) throw std::invalid_argument("delta_e: n must be >= 1");
    ClassFunction f(n);
    f.set(Partition(std::vector<int>(n, 1)), Rational(1));
    return f;
}

/// Isotypic coefficients of a central element: the scalar by which f acts on
/// the lambda-isotypic block,
///   fhat(lambda) = (1/dim_lambda) sum_mu |class mu| f(mu) chi^lambda(mu).
inline FourierCoefficients fourier(const ClassFunction& f) {
    const int n = f.weight();
    FourierCoefficients out(n);
    for (const auto& lambda : enumerate_partitions(n)) {
        Rational acc(0);
        for (const auto& [mu, value] : f.values()) {
            if (value.is_zero()) continue;
            acc += value * Rational(conjugacy_class_size(mu)) *
                   Rational(irreducible_character(lambda, mu));
        }
        out.set(lambda, acc / Rational(dim_specht(lambda)));
    }
    return out;
}

/// Inverse transform: f(mu) = sum_lambda Fhat(lambda) (dim_lambda/n!) chi^lambda(mu).
/// Round-trips fourier exactly by character orthogonality.
inline ClassFunction inverse_fourier(const FourierCoefficients& coeffs) {
    const int n = coeffs.weight();
    ClassFunction out(n);
    const Rational inv_group_order = Rational(1) / Rational(factorial(n));
    for (const auto& mu : enumerate_partitions(n)) {
        Rational acc(0);
        for (const auto& [lambda, coeff] : coeffs.values()) {
            if (coeff.is_zero()) continue;
            acc += coeff * Rational(dim_specht(lambda)) *
                   Rational(irreducible_character(lambda, mu));
        }
        out.set(mu, acc * inv_group_order);
    }
    return out;
}

/// Group-algebra convolution restricted to central elements: computed on the
/// isotypic blocks, where central elements multiply pointwise.
inline ClassFunction convolve(const ClassFunction& f, const ClassFunction& g) {
    if (f.weight() != g.weight())
        throw std::invalid_argument("convolve: weights differ");
    const auto fh = fourier(f);
    const auto gh = fourier(g);
    FourierCoefficients prod(f.weight());
    for (const auto& [lambda, value] : fh.values()) prod.set(lambda, value * gh.at(lambda));
    return inverse_fourier(prod);
}

/// Moore-Penrose pseudo-inverse on the center: isotypic coefficients are
/// inverted where nonzero and kept zero where zero, so f*w*f = f and w*f*w = w.
inline ClassFunction pseudo_inverse(const ClassFunction& f) {
    const auto fh = fourier(f);
    FourierCoefficients inv(f.weight());
    for (const auto& [lambda, value] : fh.values())
        inv.set(lambda, value.is_zero() ? Rational(0) : value.inverse());
    return inverse_fourier(inv);
}

}  // namespace wgcalc
