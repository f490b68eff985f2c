#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgcalc/rational.hpp"

namespace wgcalc {

/// Box (i,j) of a Young diagram; row and column are 1-based.
struct Cell {
    int row = 1;
    int col = 1;
};

/// Weakly decreasing tuple of positive integers. The empty partition (of 0)
/// is allowed everywhere and has weight 0, length 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    int weight() const {
        int n = 0;
        for (int p : parts_) n += p;
        return n;
    }

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    /// 1-based part access; parts beyond the length read as 0.
    int part(int i) const {
        if (i < 1) throw std::out_of_range("Partition::part: index is 1-based");
        return i <= length() ? parts_[i - 1] : 0;
    }

    bool contains(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.row <= length() && c.col <= parts_[c.row - 1];
    }

    /// Multiplicity of each part value, m[k] = #{i : part_i == k}, k = 1..largest.
    std::vector<int> multiplicities() const {
        std::vector<int> m(parts_.empty() ? 0 : parts_[0] + 1, 0);
        for (int p : parts_) m[p]++;
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) os << ',';
            os << parts_[k];
        }
        os << ')';
        return os.str();
    }

    /// Accepts "3,1", "(3,1)", "()" or "" (empty partition).
    static Partition parse(const std::string& text) {
        std::string s = text;
        if (!s.empty() && s.front() == '(') {
            if (s.back() != ')')
                throw std::invalid_argument("Partition::parse: unbalanced parentheses");
            s = s.substr(1, s.size() - 2);
        }
        std::vector<int> parts;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part");
            parts.push_back(std::stoi(tok));
        }
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }

    /// Canonical order: ascending weight, then decreasing lexicographic, so that
    /// map iteration and CLI output list partitions of n as (n), (n-1,1), ...,
    /// (1,...,1). This matches the order of enumerate_partitions.
    friend bool operator<(const Partition& a, const Partition& b) {
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                            a.parts_.begin(), a.parts_.end());
    }

private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
}

namespace detail {
inline void emit_partitions(int remaining, int max_part, int max_length,
                            std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (static_cast<int>(current.size()) >= max_length) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        current.push_back(p);
        emit_partitions(remaining - p, p, max_length, current, out);
        current.pop_back();
    }
}
}  // namespace detail

/// All partitions of n in decreasing lexicographic order, optionally restricted
/// to length <= max_length. n = 0 yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(
    int n, std::optional<int> max_length = std::nullopt) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    if (max_length && *max_length < 1)
        throw std::invalid_argument("enumerate_partitions: max_length must be positive");
    std::vector<Partition> out;
    std::vector<int> current;
    detail::emit_partitions(n, n, max_length ? *max_length : n, current, out);
    if (n == 0) out.assign(1, Partition());
    return out;
}

/// h(i,j) = arm + leg + 1: boxes to the right, below, and the box itself.
inline int hook_length(const Partition& lambda, Cell c) {
    if (!lambda.contains(c))
        throw std::out_of_range("hook_length: cell " + std::to_string(c.row) + "," +
                                std::to_string(c.col) + " outside diagram " + lambda.str());
    const int arm = lambda.parts()[c.row - 1] - c.col;
    int leg = 0;
    for (int r = c.row + 1; r <= lambda.length(); ++r)
        if (lambda.parts()[r - 1] >= c.col) ++leg;
    return arm + leg + 1;
}

/// Content of a box: column minus row.
inline int content(Cell c) { return c.col - c.row; }

/// Dimension of the irreducible S_n module indexed by lambda:
/// n! divided by the product of all hook lengths.
inline Integer dim_specht(const Partition& lambda) {
    Integer hooks(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) hooks *= hook_length(lambda, {i, j});
    Integer result;
    mpz_divexact(result.get_mpz_t(), factorial(lambda.weight()).get_mpz_t(),
                 hooks.get_mpz_t());
    return result;
}

/// Product of (d + content) over the boxes of lambda. Zero iff the diagram has
/// more than d rows.
inline Integer content_product(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("content_product: d must be >= 1");
    Integer prod(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) prod *= (d + content({i, j}));
    return prod;
}

/// Dimension of the irreducible U(d) module indexed by lambda:
/// product over boxes of (d + content)/hook. Zero when the diagram does not
/// fit into d rows.
inline Integer dim_weyl(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("dim_weyl: d must be >= 1");
    if (lambda.length() > d) return Integer(0);
    Integer num(1), den(1);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            num *= (d + content({i, j}));
            den *= hook_length(lambda, {i, j});
        }
    Integer result;
    mpz_divexact(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return result;
}

}  // namespace wgcalc
