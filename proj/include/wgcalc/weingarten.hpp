#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "wgcalc/classfun.hpp"
#include "wgcalc/partitions.hpp"
#include "wgcalc/rational.hpp"
#include "wgcalc/symgroup.hpp"

namespace wgcalc {

namespace detail {

inline ClassFunction compute_weingarten(int n, int d) {
    ClassFunction wg(n);
    const Rational inv_nfact_sq = Rational(1) / Rational(Integer(factorial(n) * factorial(n)));
    for (const auto& lambda : enumerate_partitions(n)) {
        if (lambda.length() > d) continue;  // dim_weyl vanishes; term omitted
        const Integer ds = dim_specht(lambda);
        const Rational coeff = Rational(Integer(ds * ds), dim_weyl(lambda, d)) * inv_nfact_sq;
        for (const auto& [mu, unused] : wg.values())
            wg.set(mu, wg.at(mu) + coeff * Rational(irreducible_character(lambda, mu)));
    }
    return wg;
}

}  // namespace detail

/// The Weingarten class function of S_n at dimension d,
///   Wg(mu) = (1/n!^2) sum over lambda of n with at most d rows of
///            dim_specht(lambda)^2 / dim_weyl(lambda, d) * chi^lambda(mu).
/// Equals pseudo_inverse(char_pi(n, d)) exactly. Memoized per (n, d); the
/// returned reference stays valid for the lifetime of the program.
inline const ClassFunction& weingarten_class_function(int n, int d) {
    if (n < 1) throw std::invalid_argument("weingarten_class_function: n must be >= 1");
    if (d < 1) throw std::invalid_argument("weingarten_class_function: d must be >= 1");

    static std::map<std::pair<int, int>, ClassFunction> cache;
    static std::mutex cache_mutex;

    const auto key = std::make_pair(n, d);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        const auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    ClassFunction wg = detail::compute_weingarten(n, d);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(wg)).first->second;
}

inline Rational weingarten_value(const Partition& mu, int d) {
    return weingarten_class_function(mu.weight(), d).at(mu);
}

inline Rational weingarten_value(const Permutation& sigma, int d) {
    return weingarten_value(sigma.cycle_type(), d);
}

/// Closed form for the sum of Wg over all of S_n: 1/(d(d+1)...(d+n-1)).
inline Rational weingarten_sum(int n, int d) {
    if (n < 1) throw std::invalid_argument("weingarten_sum: n must be >= 1");
    if (d < 1) throw std::invalid_argument("weingarten_sum: d must be >= 1");
    Integer rising(1);
    for (int j = 0; j < n; ++j) rising *= (d + j);
    return Rational(Integer(1), rising);
}

/// Verification flag: recompute the sum class by class and compare with the
/// closed form.
inline bool weingarten_sum_check(int n, int d) {
    const ClassFunction& wg = weingarten_class_function(n, d);
    Rational total(0);
    for (const auto& [mu, value] : wg.values())
        total += Rational(conjugacy_class_size(mu)) * value;
    return total == weingarten_sum(n, d);
}

}  // namespace wgcalc
