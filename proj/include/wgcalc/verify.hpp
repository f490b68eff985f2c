#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wgcalc/gram.hpp"
#include "wgcalc/jucys.hpp"
#include "wgcalc/moments.hpp"
#include "wgcalc/montecarlo.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

namespace detail {

inline std::string counted(long long cases) {
    return std::to_string(cases) + " cases";
}

inline MultiIndex seeded_multiindex(int n, int d, std::mt19937& rng) {
    std::uniform_int_distribution<int> value(1, d);
    MultiIndex mi(n);
    for (auto& v : mi) v = value(rng);
    return mi;
}

inline Permutation seeded_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

}  // namespace detail

/// Wg from the dimension formula equals the pseudo-inverse of char_pi, exactly.
inline CheckResult check_dual_construction(int n_max, int d_max) {
    CheckResult r{"dual-construction", true, ""};
    long long cases = 0;
    for (int n = 1; n <= n_max && r.pass; ++n)
        for (int d = 1; d <= d_max && r.pass; ++d, ++cases)
            if (weingarten_class_function(n, d) != pseudo_inverse(char_pi(n, d))) {
                r.pass = false;
                r.details = "mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d);
            }
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// All four Moore-Penrose identities for the explicit matrices, plus the
/// identity row against the class function.
inline CheckResult check_gram_moore_penrose(int n_max, int d_max) {
    CheckResult r{"gram-moore-penrose", true, ""};
    long long cases = 0;
    for (int n = 1; n <= std::min(n_max, kGramCap) && r.pass; ++n)
        for (int d = 1; d <= d_max && r.pass; ++d, ++cases) {
            if (!verify_moore_penrose(n, d).pass()) {
                r.pass = false;
                r.details = "MP identity failed at n=" + std::to_string(n) +
                            " d=" + std::to_string(d);
                break;
            }
            const auto w = weingarten_matrix(n, d);
            const auto group = enumerate_group(n);
            const ClassFunction& wg = weingarten_class_function(n, d);
            for (std::size_t c = 0; c < group.size(); ++c)
                if (w.at(0, c) != wg.at(group[c].cycle_type())) {
                    r.pass = false;
                    r.details = "identity row mismatch at n=" + std::to_string(n) +
                                " d=" + std::to_string(d);
                    break;
                }
        }
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// sum over classes of |class| * Wg equals 1/(d(d+1)...(d+n-1)).
inline CheckResult check_weingarten_sum(int n_max, int d_max) {
    CheckResult r{"weingarten-sum", true, ""};
    long long cases = 0;
    for (int n = 1; n <= n_max && r.pass; ++n)
        for (int d = 1; d <= d_max && r.pass; ++d, ++cases)
            if (!weingarten_sum_check(n, d)) {
                r.pass = false;
                r.details = "sum identity failed at n=" + std::to_string(n) +
                            " d=" + std::to_string(d);
            }
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// The pairing formula reproduces the closed-form single-row moments for every
/// composition of n <= n_max into exactly d <= d_max parts, and with them the
/// single-entry moments 1/binomial(d+n-1, d-1).
inline CheckResult check_hewitt_ross(int n_max, int d_max) {
    CheckResult r{"hewitt-ross", true, ""};
    long long cases = 0;
    for (int d = 1; d <= d_max && r.pass; ++d) {
        std::vector<int> composition(d, 0);
        const std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (!r.pass) return;
            if (pos == d - 1) {
                composition[pos] = remaining;
                ++cases;
                if (haar_moment(hewitt_ross_query(composition, d)) !=
                    hewitt_ross_row_moment(composition, d)) {
                    r.pass = false;
                    std::ostringstream os;
                    os << "mismatch at d=" << d << " a=(";
                    for (int v : composition) os << v << ",";
                    os << ")";
                    r.details = os.str();
                }
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                composition[pos] = v;
                rec(pos + 1, remaining - v);
            }
        };
        for (int n = 1; n <= n_max && r.pass; ++n) rec(0, n);
        for (int n = 1; n <= n_max && r.pass; ++n, ++cases) {
            std::vector<int> a(d, 0);
            a[0] = n;
            if (single_entry_moment(n, d) != hewitt_ross_row_moment(a, d)) {
                r.pass = false;
                r.details = "single-entry mismatch at n=" + std::to_string(n) +
                            " d=" + std::to_string(d);
            }
        }
    }
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// Trace moments: the full double sum over diagonal queries, the dimension-sum
/// closed form, the d >= n factorial value, and the stabilizer-sum route all
/// agree.
inline CheckResult check_trace_moments(int n_max, int d_max) {
    CheckResult r{"trace-moments", true, ""};
    long long cases = 0;

    for (int n = 1; n <= std::min(n_max, 4) && r.pass; ++n)
        for (int d = 1; d <= std::min(d_max, 3) && r.pass; ++d, ++cases) {
            Rational total(0);
            detail::for_each_multiindex(n, d, [&](const MultiIndex& i) {
                detail::for_each_multiindex(n, d, [&](const MultiIndex& j) {
                    total += haar_moment(MomentQuery(i, i, j, j, d));
                });
            });
            if (total != Rational(trace_moment(n, d)) ||
                trace_moment_via_sum(n, d) != total) {
                r.pass = false;
                r.details = "trace identity failed at n=" + std::to_string(n) +
                            " d=" + std::to_string(d);
            }
        }

    for (int n = 1; n <= n_max && r.pass; ++n)
        for (int d = n; d <= std::max(n, d_max) && r.pass; ++d, ++cases)
            if (trace_moment(n, d) != factorial(n)) {
                r.pass = false;
                r.details = "expected n! at n=" + std::to_string(n) +
                            " d=" + std::to_string(d);
            }

    if (r.pass && n_max >= 3 && trace_moment(3, 2) != 5) {
        r.pass = false;
        r.details = "trace_moment(3,2) != 5";
    }
    ++cases;
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// Jucys identities: the expanded product equals the cycle-count power for all
/// d including d < n, and e_r(J) is the (n-r)-cycle indicator.
inline CheckResult check_jucys_identities(int n_max, int d_max) {
    CheckResult r{"jucys-identities", true, ""};
    long long cases = 0;
    for (int n = 1; n <= n_max && r.pass; ++n) {
        const auto group = enumerate_group(n);
        for (int d = 1; d <= d_max && r.pass; ++d, ++cases) {
            const auto product = product_d_plus_jm(n, d);
            for (const auto& sigma : group)
                if (product.coefficient(sigma) !=
                    Rational(pow_integer(Integer(d), sigma.num_cycles()))) {
                    r.pass = false;
                    r.details = "product mismatch at n=" + std::to_string(n) +
                                " d=" + std::to_string(d);
                    break;
                }
        }
        for (int rr = 0; rr <= n && r.pass; ++rr, ++cases) {
            const auto er = elementary_symmetric_jm(rr, n);
            for (const auto& sigma : group)
                if (er.coefficient(sigma) !=
                    Rational(sigma.num_cycles() == n - rr ? 1 : 0)) {
                    r.pass = false;
                    r.details = "e_r mismatch at n=" + std::to_string(n) +
                                " r=" + std::to_string(rr);
                    break;
                }
        }
    }
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// rank(G) equals the surviving dimension-square sum and nullity the rest.
inline CheckResult check_rank_nullity(int n_max, int d_max) {
    CheckResult r{"rank-nullity", true, ""};
    long long cases = 0;
    for (int n = 1; n <= std::min(n_max, kGramCap) && r.pass; ++n)
        for (int d = 1; d <= d_max && r.pass; ++d, ++cases) {
            const auto [rank, nullity] = rank_and_nullity(n, d);
            Integer expected_rank(0), expected_nullity(0);
            for (const auto& lambda : enumerate_partitions(n)) {
                const Integer sq = dim_specht(lambda) * dim_specht(lambda);
                (lambda.length() <= d ? expected_rank : expected_nullity) += sq;
            }
            if (rank != expected_rank.get_si() || nullity != expected_nullity.get_si() ||
                Integer(rank) != trace_moment(n, d)) {
                r.pass = false;
                r.details = "rank mismatch at n=" + std::to_string(n) +
                            " d=" + std::to_string(d);
            }
        }
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// Diaconis-Evans spot values: |tr(U^k)|^{2n} = k^n n! for kn <= d, through the
/// block-rotation reduction.
inline CheckResult check_diaconis_evans(int n_max, int d_max) {
    CheckResult r{"diaconis-evans", true, ""};
    long long cases = 0;
    struct Point {
        int k, n, d;
    };
    std::vector<Point> points;
    for (int n = 1; n <= std::min(n_max, 4); ++n)
        for (int d = n; d <= std::min(n + 2, d_max); ++d) points.push_back({1, n, d});
    if (n_max >= 2)
        for (int d = 2; d <= std::min(4, d_max); ++d) points.push_back({2, 1, d});
    if (n_max >= 3)
        for (int d = 3; d <= std::min(4, d_max); ++d) points.push_back({3, 1, d});

    for (const auto& p : points) {
        ++cases;
        const Rational expected =
            Rational(Integer(pow_integer(Integer(p.k), p.n) * factorial(p.n)));
        if (trace_power_moment(p.k, p.n, p.d) != expected) {
            r.pass = false;
            r.details = "mismatch at k=" + std::to_string(p.k) + " n=" +
                        std::to_string(p.n) + " d=" + std::to_string(p.d);
            break;
        }
    }
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// Randomized symmetry suite: permuting both halves, relabelling the values,
/// and swapping the plain and conjugate monomials all preserve the integral.
inline CheckResult check_symmetry_suite(int n_max, int d_max, int num_queries,
                                        std::uint64_t seed) {
    CheckResult r{"symmetry-suite", true, ""};
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    const int n_cap = std::min(n_max, 4);
    const int d_cap = std::min(d_max, 3);
    std::uniform_int_distribution<int> n_dist(1, n_cap), d_dist(1, d_cap);
    for (int t = 0; t < num_queries && r.pass; ++t) {
        const int n = n_dist(rng);
        const int d = d_dist(rng);
        const MultiIndex i = detail::seeded_multiindex(n, d, rng);
        const MultiIndex j = detail::seeded_multiindex(n, d, rng);
        const MultiIndex ip = detail::seeded_multiindex(n, d, rng);
        const MultiIndex jp = detail::seeded_multiindex(n, d, rng);
        const Rational base = haar_moment(MomentQuery(i, j, ip, jp, d));

        const Permutation sigma = detail::seeded_permutation(n, rng);
        const Permutation tau = detail::seeded_permutation(n, rng);
        const bool sym1 =
            haar_moment(MomentQuery(act_on_multiindex(sigma, i), act_on_multiindex(sigma, j),
                                    act_on_multiindex(tau, ip), act_on_multiindex(tau, jp),
                                    d)) == base;

        const Permutation pi_d = detail::seeded_permutation(d, rng);
        const Permutation rho_d = detail::seeded_permutation(d, rng);
        const auto relabel = [](const Permutation& p, const MultiIndex& mi) {
            MultiIndex out(mi.size());
            for (std::size_t k = 0; k < mi.size(); ++k) out[k] = p(mi[k] - 1) + 1;
            return out;
        };
        const bool sym2 =
            haar_moment(MomentQuery(relabel(pi_d, i), relabel(rho_d, j), relabel(pi_d, ip),
                                    relabel(rho_d, jp), d)) == base;

        const bool sym5 = haar_moment(MomentQuery(jp, ip, j, i, d)) == base;

        if (!sym1 || !sym2 || !sym5) {
            r.pass = false;
            r.details = "symmetry failed on query " + std::to_string(t);
        }
    }
    if (r.pass) r.details = detail::counted(num_queries) + ", 3 symmetries each";
    return r;
}

/// With spectral moments d^{l(mu)} (W = identity) and d >= n the entry moments
/// collapse to the Kronecker-delta product.
inline CheckResult check_invariant_hermitian(int n_max, int d_max) {
    CheckResult r{"invariant-hermitian", true, ""};
    long long cases = 0;
    for (int n = 1; n <= std::min(n_max, 3) && r.pass; ++n)
        for (int d = n; d <= std::min(4, std::max(n, d_max)) && r.pass; ++d) {
            const SpectralMoments s = char_pi(n, d);
            detail::for_each_multiindex(n, d, [&](const MultiIndex& i) {
                detail::for_each_multiindex(n, d, [&](const MultiIndex& j) {
                    ++cases;
                    if (!r.pass) return;
                    if (invariant_hermitian_moment(i, j, s, d) !=
                        Rational(i == j ? 1 : 0)) {
                        r.pass = false;
                        r.details = "collapse failed at n=" + std::to_string(n) +
                                    " d=" + std::to_string(d);
                    }
                });
            });
        }
    if (r.pass) r.details = detail::counted(cases);
    return r;
}

/// Monte-Carlo section: sampler unitarity plus 4-standard-error agreement of
/// the seeded empirical estimates with a representative family of exact moments
/// at n <= 3, d <= 4 (single-entry powers, all single-row configurations,
/// phase-sensitive queries, seeded random queries, trace and trace-power
/// moments). Estimates within one d share the sample stream.
inline std::vector<CheckResult> check_monte_carlo(long long samples, std::uint64_t seed) {
    std::vector<CheckResult> out;

    {
        CheckResult r{"mc-unitarity", true, ""};
        GaussianStream g(seed);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const ComplexMatrix u = sample_haar_unitary(5, g);
            worst = std::max(worst, (u.adjoint() * u - ComplexMatrix::Identity(5, 5))
                                        .cwiseAbs()
                                        .maxCoeff());
        }
        r.pass = worst < 1e-10;
        std::ostringstream os;
        os << "max residual " << worst;
        r.details = os.str();
        out.push_back(r);
    }

    const auto within = [](const Estimate& e, double exact) {
        return std::abs(e.mean.real() - exact) <= 4.0 * e.std_error + 1e-12 &&
               std::abs(e.mean.imag()) <= 4.0 * e.std_error + 1e-12;
    };

    for (int d = 1; d <= 4; ++d) {
        CheckResult r{"mc-moments-d" + std::to_string(d), true, ""};
        std::vector<MomentQuery> queries;
        std::vector<Rational> exact;

        for (int n = 1; n <= 3; ++n) {
            // single-entry 2n-th moment
            queries.emplace_back(MultiIndex(n, 1), MultiIndex(n, 1), MultiIndex(n, 1),
                                 MultiIndex(n, 1), d);
            exact.push_back(single_entry_moment(n, d));

            // all single-row configurations (compositions of n into d parts)
            std::vector<int> a(d, 0);
            const std::function<void(int, int)> rec = [&](int pos, int remaining) {
                if (pos == d - 1) {
                    a[pos] = remaining;
                    queries.push_back(hewitt_ross_query(a, d));
                    exact.push_back(hewitt_ross_row_moment(a, d));
                    return;
                }
                for (int v = 0; v <= remaining; ++v) {
                    a[pos] = v;
                    rec(pos + 1, remaining - v);
                }
            };
            rec(0, n);

            // seeded random queries, zero and nonzero alike
            std::mt19937 rng(static_cast<std::uint32_t>(seed + 1000 * d + n));
            for (int t = 0; t < 10; ++t) {
                MomentQuery q(detail::seeded_multiindex(n, d, rng),
                              detail::seeded_multiindex(n, d, rng),
                              detail::seeded_multiindex(n, d, rng),
                              detail::seeded_multiindex(n, d, rng), d);
                exact.push_back(haar_moment(q));
                queries.push_back(std::move(q));
            }
        }
        if (d >= 2) {
            // phase-sensitive off-diagonal pairing
            queries.emplace_back(MultiIndex{1, 2}, MultiIndex{1, 2}, MultiIndex{1, 2},
                                 MultiIndex{2, 1}, d);
            exact.push_back(weingarten_value(Partition({2}), d));
        }

        GaussianStream g(seed + d);
        const auto estimates = estimate_moments_shared(queries, d, samples, g);
        int failures = 0;
        for (std::size_t k = 0; k < queries.size(); ++k)
            if (!within(estimates[k], exact[k].to_double())) ++failures;
        r.pass = failures == 0;
        r.details = std::to_string(queries.size()) + " moments, " +
                    std::to_string(failures) + " outside 4 SE";
        out.push_back(r);
    }

    {
        CheckResult r{"mc-trace-moments", true, ""};
        struct Point {
            int k, n, d;
            double exact;
        };
        std::vector<Point> points;
        for (int n = 1; n <= 3; ++n)
            for (int d = 1; d <= 3; ++d)
                points.push_back({1, n, d, Rational(trace_moment(n, d)).to_double()});
        for (int d = 2; d <= 3; ++d)
            points.push_back({2, 1, d, trace_power_moment(2, 1, d).to_double()});
        points.push_back({3, 1, 3, trace_power_moment(3, 1, 3).to_double()});

        int failures = 0;
        for (std::size_t p = 0; p < points.size(); ++p) {
            GaussianStream g(seed + 100 + p);
            const Estimate e = estimate_trace_power_moment(
                points[p].k, points[p].n, points[p].d, samples, g);
            if (!within(e, points[p].exact)) ++failures;
        }
        r.pass = failures == 0;
        r.details = std::to_string(points.size()) + " trace moments, " +
                    std::to_string(failures) + " outside 4 SE";
        out.push_back(r);
    }

    return out;
}

}  // namespace wgcalc
