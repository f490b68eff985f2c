#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgcalc/partitions.hpp"
#include "wgcalc/rational.hpp"

namespace wgcalc {

/// Element of S_n stored as an image table: images()[k] = sigma(k), 0-based.
/// All documentation and CLI I/O use 1-based positions; only the internal
/// representation is 0-based.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Permutation: image table is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        return Permutation(std::move(img));
    }

    /// Transposition (a b) in S_n, slots 0-based.
    static Permutation transposition(int n, int a, int b) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("Permutation::transposition: slot out of range");
        Permutation p = identity(n);
        std::swap(p.img_[a], p.img_[b]);
        return p;
    }

    static Permutation from_one_based(const std::vector<int>& images) {
        std::vector<int> img(images.size());
        for (std::size_t k = 0; k < images.size(); ++k) img[k] = images[k] - 1;
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k]; }
    const std::vector<int>& images() const { return img_; }

    std::vector<int> one_based_images() const {
        std::vector<int> out(img_.size());
        for (std::size_t k = 0; k < img_.size(); ++k) out[k] = img_[k] + 1;
        return out;
    }

    bool is_identity() const {
        for (int k = 0; k < size(); ++k)
            if (img_[k] != k) return false;
        return true;
    }

    /// (this o rhs)(k) = this(rhs(k)).
    Permutation compose(const Permutation& rhs) const {
        if (size() != rhs.size())
            throw std::invalid_argument("Permutation::compose: size mismatch");
        std::vector<int> img(img_.size());
        for (int k = 0; k < size(); ++k) img[k] = img_[rhs.img_[k]];
        return Permutation(std::move(img));
    }

    Permutation inverse() const {
        std::vector<int> img(img_.size());
        for (int k = 0; k < size(); ++k) img[img_[k]] = k;
        return Permutation(std::move(img));
    }

    /// Cycle lengths in weakly decreasing order; fixed points count as parts of 1.
    Partition cycle_type() const {
        std::vector<bool> seen(img_.size(), false);
        std::vector<int> lengths;
        for (int start = 0; start < size(); ++start) {
            if (seen[start]) continue;
            int len = 0;
            for (int k = start; !seen[k]; k = img_[k]) {
                seen[k] = true;
                ++len;
            }
            lengths.push_back(len);
        }
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        return Partition(std::move(lengths));
    }

    /// Number of disjoint cycles, fixed points included.
    int num_cycles() const {
        std::vector<bool> seen(img_.size(), false);
        int cycles = 0;
        for (int start = 0; start < size(); ++start) {
            if (seen[start]) continue;
            ++cycles;
            for (int k = start; !seen[k]; k = img_[k]) seen[k] = true;
        }
        return cycles;
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (int k = 0; k < size(); ++k) {
            if (k) os << ',';
            os << img_[k] + 1;
        }
        os << ']';
        return os.str();
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) {
    return a.compose(b);
}

/// Tuple in {1,...,d}^n selecting a monomial of matrix entries. Values stay
/// 1-based; range validation happens where d is known.
using MultiIndex = std::vector<int>;

inline void validate_multiindex(const MultiIndex& mi, int d, const char* what) {
    for (int v : mi)
        if (v < 1 || v > d)
            throw std::invalid_argument(std::string(what) +
                                        ": entries must lie in 1.." + std::to_string(d));
}

/// Left action: act(sigma, i)_k = i_{sigma^{-1}(k)}, so that
/// act(sigma o tau, i) = act(sigma, act(tau, i)).
inline MultiIndex act_on_multiindex(const Permutation& sigma, const MultiIndex& mi) {
    if (sigma.size() != static_cast<int>(mi.size()))
        throw std::invalid_argument("act_on_multiindex: length mismatch");
    MultiIndex out(mi.size());
    for (int m = 0; m < sigma.size(); ++m) out[sigma(m)] = mi[m];
    return out;
}

/// Group-enumeration guard. Default 8 (40320 elements), overridable through the
/// WGCALC_GROUP_CAP environment variable (expert use).
inline int group_cap() {
    static const int cap = [] {
        if (const char* s = std::getenv("WGCALC_GROUP_CAP")) {
            const int v = std::atoi(s);
            if (v >= 1) return v;
        }
        return 8;
    }();
    return cap;
}

/// All n! permutations in lexicographic order of their image tables.
inline std::vector<Permutation> enumerate_group(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_group: n must be >= 0");
    if (n > group_cap())
        throw std::length_error(
            "enumerate_group: n = " + std::to_string(n) + " exceeds the cap " +
            std::to_string(group_cap()) +
            " (n! blow-up guard; set WGCALC_GROUP_CAP to override)");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

namespace detail {

struct MatchGroups {
    // One entry per distinct value: positions in `from` and in `to`.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    bool feasible = false;
};

inline MatchGroups matching_groups(const MultiIndex& from, const MultiIndex& to) {
    MatchGroups mg;
    if (from.size() != to.size()) return mg;
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_value;
    for (std::size_t k = 0; k < from.size(); ++k) by_value[from[k]].first.push_back(k);
    for (std::size_t k = 0; k < to.size(); ++k) by_value[to[k]].second.push_back(k);
    for (auto& [value, positions] : by_value) {
        if (positions.first.size() != positions.second.size()) return mg;
        mg.groups.push_back(std::move(positions));
    }
    mg.feasible = true;
    return mg;
}

template <typename Fn>
void for_each_matching_rec(const MatchGroups& mg, std::size_t g, std::vector<int>& image,
                           Fn&& fn) {
    if (g == mg.groups.size()) {
        fn(Permutation(image));
        return;
    }
    const auto& [from_pos, to_pos] = mg.groups[g];
    std::vector<int> assignment = to_pos;  // already sorted ascending
    do {
        for (std::size_t t = 0; t < from_pos.size(); ++t)
            image[from_pos[t]] = assignment[t];
        for_each_matching_rec(mg, g + 1, image, fn);
    } while (std::next_permutation(assignment.begin(), assignment.end()));
}

}  // namespace detail

/// Calls fn(sigma) for every sigma with act_on_multiindex(sigma, from) == to.
/// Runs in output-sensitive time: positions are grouped by value and the
/// per-value bijections enumerated directly, never by filtering all of S_n.
/// The match count is prod_v m_v! when the value multisets agree, 0 otherwise.
template <typename Fn>
void for_each_matching(const MultiIndex& from, const MultiIndex& to, Fn&& fn) {
    if (from.size() != to.size())
        throw std::invalid_argument("for_each_matching: length mismatch");
    const auto mg = detail::matching_groups(from, to);
    if (!mg.feasible) return;
    std::vector<int> image(from.size());
    detail::for_each_matching_rec(mg, 0, image, fn);
}

inline std::vector<Permutation> matching_permutations(const MultiIndex& from,
                                                      const MultiIndex& to) {
    std::vector<Permutation> out;
    for_each_matching(from, to, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

/// Centralizer order z_mu = prod_k k^{m_k} m_k! of any permutation of cycle type mu.
inline Integer centralizer_order(const Partition& mu) {
    Integer z(1);
    const auto mult = mu.multiplicities();
    for (std::size_t k = 1; k < mult.size(); ++k) {
        if (mult[k] == 0) continue;
        z *= pow_integer(Integer(static_cast<long>(k)), mult[k]);
        z *= factorial(mult[k]);
    }
    return z;
}

/// Size n!/z_mu of the conjugacy class with cycle type mu.
inline Integer conjugacy_class_size(const Partition& mu) {
    Integer size;
    mpz_divexact(size.get_mpz_t(), factorial(mu.weight()).get_mpz_t(),
                 centralizer_order(mu).get_mpz_t());
    return size;
}

}  // namespace wgcalc
