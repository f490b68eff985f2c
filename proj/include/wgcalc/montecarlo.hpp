#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "wgcalc/moments.hpp"
#include "wgcalc/symgroup.hpp"

namespace wgcalc {

using ComplexMatrix = Eigen::MatrixXcd;

/// Deterministic Gaussian stream: mt19937_64 drives 53-bit uniforms in (0, 1],
/// turned into standard normals by Box-Muller (cos first, sin cached). The
/// stream depends only on the seed, never on platform library details, so runs
/// are reproducible bit for bit in single-threaded use.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Standard complex normal: E|z|^2 = 1.
    std::complex<double> complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re * kInvSqrt2, im * kInvSqrt2};
    }

private:
    static constexpr double kPi = 3.14159265358979323846;
    static constexpr double kInvSqrt2 = 0.70710678118654752440;

    double uniform01() {
        // Top 53 bits, shifted into (0, 1] so log never sees zero.
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1p-53;
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Draws a Haar-distributed unitary: QR of a d x d standard complex Gaussian
/// matrix (entries filled row by row), with column k of Q multiplied by the
/// phase of R_kk. This makes Q the unique QR factor with positive-diagonal R,
/// which is exactly Haar; plain QR without the phase fix is not.
inline ComplexMatrix sample_haar_unitary(int d, GaussianStream& stream) {
    if (d < 1) throw std::invalid_argument("sample_haar_unitary: d must be >= 1");
    ComplexMatrix z(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) z(r, c) = stream.complex_normal();

    const Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    for (int k = 0; k < d; ++k) {
        const std::complex<double> rkk = qr.matrixQR()(k, k);
        const double mag = std::abs(rkk);
        if (mag > 0.0) q.col(k) *= rkk / mag;
    }
    return q;
}

struct Estimate {
    std::complex<double> mean;
    double std_error = 0.0;  // sample standard deviation / sqrt(samples)
    long long samples = 0;
};

namespace detail {

inline std::complex<double> monomial_value(const MomentQuery& q, const ComplexMatrix& u) {
    std::complex<double> value(1.0, 0.0);
    for (int t = 0; t < q.n(); ++t) value *= u(q.row[t] - 1, q.col[t] - 1);
    for (int t = 0; t < q.n_conj(); ++t)
        value *= std::conj(u(q.row_conj[t] - 1, q.col_conj[t] - 1));
    return value;
}

struct Accumulator {
    std::complex<double> sum{0.0, 0.0};
    double sum_sq = 0.0;

    void add(std::complex<double> z) {
        sum += z;
        sum_sq += std::norm(z);
    }

    Estimate finish(long long n) const {
        Estimate e;
        e.samples = n;
        e.mean = sum / static_cast<double>(n);
        const double centered = sum_sq - std::norm(sum) / static_cast<double>(n);
        const double variance = std::max(0.0, centered / static_cast<double>(n - 1));
        e.std_error = std::sqrt(variance / static_cast<double>(n));
        return e;
    }
};

}  // namespace detail

/// Empirical moment: sample mean of the entry monomial over independent Haar
/// samples, with its standard error.
inline Estimate estimate_moment(const MomentQuery& q, long long samples,
                                GaussianStream& stream) {
    if (samples < 2) throw std::invalid_argument("estimate_moment: samples must be >= 2");
    detail::Accumulator acc;
    for (long long s = 0; s < samples; ++s)
        acc.add(detail::monomial_value(q, sample_haar_unitary(q.d, stream)));
    return acc.finish(samples);
}

/// Batched version: all queries share one stream of Haar samples (they must
/// share the same d). Far cheaper than independent runs when verifying many
/// moments; estimates are correlated across queries but each is unbiased.
inline std::vector<Estimate> estimate_moments_shared(const std::vector<MomentQuery>& qs,
                                                     int d, long long samples,
                                                     GaussianStream& stream) {
    if (samples < 2)
        throw std::invalid_argument("estimate_moments_shared: samples must be >= 2");
    for (const auto& q : qs)
        if (q.d != d)
            throw std::invalid_argument("estimate_moments_shared: mixed dimensions");
    std::vector<detail::Accumulator> acc(qs.size());
    for (long long s = 0; s < samples; ++s) {
        const ComplexMatrix u = sample_haar_unitary(d, stream);
        for (std::size_t k = 0; k < qs.size(); ++k)
            acc[k].add(detail::monomial_value(qs[k], u));
    }
    std::vector<Estimate> out;
    out.reserve(qs.size());
    for (const auto& a : acc) out.push_back(a.finish(samples));
    return out;
}

/// Empirical |tr(U^k)|^{2n}.
inline Estimate estimate_trace_power_moment(int k, int n, int d, long long samples,
                                            GaussianStream& stream) {
    if (k < 1 || n < 1 || d < 1)
        throw std::invalid_argument("estimate_trace_power_moment: k, n, d must be >= 1");
    if (samples < 2)
        throw std::invalid_argument("estimate_trace_power_moment: samples must be >= 2");
    detail::Accumulator acc;
    for (long long s = 0; s < samples; ++s) {
        const ComplexMatrix u = sample_haar_unitary(d, stream);
        ComplexMatrix power = u;
        for (int t = 1; t < k; ++t) power = power * u;
        acc.add(std::pow(std::norm(power.trace()), n));
    }
    return acc.finish(samples);
}

}  // namespace wgcalc
