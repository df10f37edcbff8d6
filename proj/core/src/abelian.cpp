#include "homcode/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace homcode {

FgAbelianGroup::FgAbelianGroup(long free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    if (free_rank_ < 0) throw std::invalid_argument("free rank must be non-negative");
    for (auto d : torsion_)
        if (d < 1) throw std::invalid_argument("torsion orders must be positive");
    normalize();
}

FgAbelianGroup FgAbelianGroup::integers(long rank) { return FgAbelianGroup(rank, {}); }
FgAbelianGroup FgAbelianGroup::cyclic(std::int64_t d) { return FgAbelianGroup(0, {d}); }
FgAbelianGroup FgAbelianGroup::trivial() { return FgAbelianGroup(); }

std::int64_t FgAbelianGroup::order() const {
    if (!is_finite()) throw std::domain_error("order() of an infinite group");
    std::int64_t n = 1;
    for (auto d : torsion_) n *= d;
    return n;
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& other) const {
    std::vector<std::int64_t> t = torsion_;
    t.insert(t.end(), other.torsion_.begin(), other.torsion_.end());
    return FgAbelianGroup(free_rank_ + other.free_rank_, std::move(t));
}

FgAbelianGroup FgAbelianGroup::tensor_with_cyclic(std::int64_t m) const {
    std::vector<std::int64_t> t(free_rank_, m);
    for (auto a : torsion_) t.push_back(std::gcd(a, m));
    return FgAbelianGroup(0, std::move(t));
}

FgAbelianGroup FgAbelianGroup::tor_with_cyclic(std::int64_t m) const {
    std::vector<std::int64_t> t;
    for (auto a : torsion_) t.push_back(std::gcd(a, m));
    return FgAbelianGroup(0, std::move(t));
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ == 1) {
        os << "Z";
        first = false;
    } else if (free_rank_ > 1) {
        os << "Z^" << free_rank_;
        first = false;
    }
    for (auto d : torsion_) {
        if (!first) os << " x ";
        os << "Z_" << d;
        first = false;
    }
    return os.str();
}

std::vector<std::int64_t> invariant_factors(std::vector<std::int64_t> orders) {
    // Split every order into prime powers, then rebuild the chain by taking,
    // for each prime, its powers in descending order and multiplying the
    // i-th largest powers together.
    std::map<std::int64_t, std::vector<std::int64_t>> powers; // prime -> prime powers, descending
    for (auto n : orders) {
        if (n <= 1) continue;
        for (std::int64_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                std::int64_t pk = 1;
                while (n % p == 0) { pk *= p; n /= p; }
                powers[p].push_back(pk);
            }
        }
        if (n > 1) powers[n].push_back(n);
    }
    std::size_t chain_len = 0;
    for (auto& [p, pk] : powers) {
        std::sort(pk.begin(), pk.end(), std::greater<>());
        chain_len = std::max(chain_len, pk.size());
    }
    std::vector<std::int64_t> chain(chain_len, 1);
    for (auto& [p, pk] : powers)
        for (std::size_t i = 0; i < pk.size(); ++i) chain[i] *= pk[i];
    std::reverse(chain.begin(), chain.end()); // ascending, d1 | d2 | ...
    return chain;
}

void FgAbelianGroup::normalize() { torsion_ = invariant_factors(std::move(torsion_)); }

} // namespace homcode
