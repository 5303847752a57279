#include "gdm/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace gdm {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 40;

void factorize(std::int64_t m, std::map<std::int64_t, int>& exps) {
    for (std::int64_t p = 2; p * p <= m; ++p) {
        while (m % p == 0) {
            ++exps[p];
            m /= p;
        }
    }
    if (m > 1) ++exps[m];
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// Partitions of n in descending parts, generated largest-first:
// 3 -> [3], [2,1], [1,1,1].
void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

}  // namespace

std::string to_string(const Element& e) {
    if (e.residues.size() == 1) return std::to_string(e.residues[0]);
    std::string s = "(";
    for (std::size_t k = 0; k < e.residues.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(e.residues[k]);
    }
    s += ')';
    return s;
}

GroupSpec::GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (std::int64_t f : factors_) {
        if (f < 2) throw std::invalid_argument("group factor must be at least 2");
        if (order_ > kMaxOrder / f) throw std::invalid_argument("group order too large");
        order_ *= f;
    }
    std::vector<std::tuple<std::int64_t, int, std::int64_t>> pe;  // (prime, exponent, p^exponent)
    for (std::int64_t f : factors_) {
        std::map<std::int64_t, int> exps;
        factorize(f, exps);
        for (auto [p, e] : exps) pe.emplace_back(p, e, ipow(p, e));
    }
    std::sort(pe.begin(), pe.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) > std::get<1>(b);
    });
    canonical_.reserve(pe.size());
    for (const auto& t : pe) canonical_.push_back(std::get<2>(t));
}

GroupSpec GroupSpec::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty group spec");
    if (text == "1") return GroupSpec{};
    std::vector<std::int64_t> factors;
    std::int64_t value = 0;
    bool have_digit = false;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            value = value * 10 + (ch - '0');
            if (value > kMaxOrder) throw std::invalid_argument("group factor too large");
            have_digit = true;
        } else if (ch == 'x') {
            if (!have_digit)
                throw std::invalid_argument("malformed group spec: expected a factor before 'x'");
            factors.push_back(value);
            value = 0;
            have_digit = false;
        } else {
            throw std::invalid_argument(std::string("malformed group spec: unexpected character '") +
                                        ch + "'");
        }
    }
    if (!have_digit) throw std::invalid_argument("malformed group spec: trailing 'x'");
    factors.push_back(value);
    return GroupSpec(std::move(factors));
}

std::string GroupSpec::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (k) s += 'x';
        s += std::to_string(factors_[k]);
    }
    return s;
}

Element GroupSpec::zero() const {
    return Element{std::vector<std::int64_t>(factors_.size(), 0)};
}

bool GroupSpec::contains(const Element& x) const {
    if (x.residues.size() != factors_.size()) return false;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (x.residues[k] < 0 || x.residues[k] >= factors_[k]) return false;
    return true;
}

Element GroupSpec::add(const Element& x, const Element& y) const {
    if (!contains(x) || !contains(y))
        throw std::invalid_argument("element does not belong to the group");
    Element r = x;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        r.residues[k] = (r.residues[k] + y.residues[k]) % factors_[k];
    return r;
}

Element GroupSpec::neg(const Element& x) const {
    if (!contains(x)) throw std::invalid_argument("element does not belong to the group");
    Element r = x;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        r.residues[k] = (factors_[k] - r.residues[k]) % factors_[k];
    return r;
}

Element GroupSpec::element(std::int64_t index) const {
    if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
    Element r = zero();
    for (std::size_t k = factors_.size(); k-- > 0;) {
        r.residues[k] = index % factors_[k];
        index /= factors_[k];
    }
    return r;
}

std::int64_t GroupSpec::index_of(const Element& x) const {
    if (!contains(x)) throw std::invalid_argument("element does not belong to the group");
    std::int64_t index = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) index = index * factors_[k] + x.residues[k];
    return index;
}

std::vector<Element> GroupSpec::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::int64_t i = 0; i < order_; ++i) out.push_back(element(i));
    return out;
}

std::vector<Element> GroupSpec::involutions() const {
    std::vector<std::size_t> even_pos;
    for (std::size_t k = 0; k < factors_.size(); ++k)
        if (factors_[k] % 2 == 0) even_pos.push_back(k);
    if (even_pos.size() > 24) throw std::length_error("too many involutions to enumerate");
    std::vector<Element> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << even_pos.size()); ++mask) {
        Element e = zero();
        for (std::size_t b = 0; b < even_pos.size(); ++b)
            if (mask & (std::uint64_t{1} << b)) e.residues[even_pos[b]] = factors_[even_pos[b]] / 2;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Element GroupSpec::sum_all() const {
    // Componentwise: each residue of Z_{n_k} occurs order/n_k times, and the
    // residues of Z_{n_k} sum to n_k/2 when n_k is even and to 0 otherwise.
    Element s = zero();
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        std::int64_t nk = factors_[k];
        if (nk % 2 == 0) {
            std::int64_t reps = (order_ / nk) % nk;
            s.residues[k] = (reps * (nk / 2)) % nk;
        }
    }
    return s;
}

std::vector<GroupSpec> enumerate_groups(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("group order must be positive");
    if (order > kMaxOrder) throw std::invalid_argument("group order too large");
    std::map<std::int64_t, int> exps;
    factorize(order, exps);
    if (exps.empty()) return {GroupSpec{}};

    std::vector<std::int64_t> primes;
    std::vector<std::vector<std::vector<int>>> parts;
    for (auto [p, e] : exps) {
        primes.push_back(p);
        parts.push_back(partitions(e));
    }

    std::vector<GroupSpec> out;
    std::vector<std::size_t> idx(primes.size(), 0);
    for (;;) {
        std::vector<std::int64_t> factors;
        for (std::size_t s = 0; s < primes.size(); ++s)
            for (int part : parts[s][idx[s]]) factors.push_back(ipow(primes[s], part));
        out.emplace_back(std::move(factors));

        std::size_t s = primes.size();
        while (s > 0 && ++idx[s - 1] == parts[s - 1].size()) {
            idx[s - 1] = 0;
            --s;
        }
        if (s == 0) break;
    }
    return out;
}

std::optional<std::pair<int, GroupSpec>> split_cyclic_two_factor(const GroupSpec& g, int alpha) {
    if (alpha < 1 || alpha > 40) return std::nullopt;
    std::int64_t want = std::int64_t{1} << alpha;
    const auto& canon = g.canonical_factors();
    for (std::size_t i = 0; i < canon.size(); ++i) {
        if (canon[i] == want) {
            std::vector<std::int64_t> rest;
            rest.reserve(canon.size() - 1);
            for (std::size_t k = 0; k < canon.size(); ++k)
                if (k != i) rest.push_back(canon[k]);
            return std::pair<int, GroupSpec>{static_cast<int>(i), GroupSpec(std::move(rest))};
        }
    }
    return std::nullopt;
}

bool has_z2_z2_summand(const GroupSpec& g) {
    int twos = 0;
    for (std::int64_t f : g.canonical_factors())
        if (f == 2) ++twos;
    return twos >= 2;
}

}  // namespace gdm
