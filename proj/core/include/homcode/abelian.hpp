#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace homcode {

/**
 * A finitely generated abelian group in invariant-factor form:
 *
 *     Z^free_rank  x  Z_{d1} x Z_{d2} x ... x Z_{dm},   d1 | d2 | ... | dm
 *
 * Used both as a coefficient group (Z, Z_d, direct sums) and as the result
 * type of homology computations. The canonical form is unique; normalize()
 * is idempotent.
 */
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    FgAbelianGroup(long free_rank, std::vector<std::int64_t> torsion);

    static FgAbelianGroup integers(long rank = 1);
    static FgAbelianGroup cyclic(std::int64_t d);
    static FgAbelianGroup trivial();

    long free_rank() const { return free_rank_; }
    const std::vector<std::int64_t>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    // Number of independent generators (free + torsion).
    long generator_count() const { return free_rank_ + static_cast<long>(torsion_.size()); }
    // Order of the group; only valid when is_finite().
    std::int64_t order() const;

    FgAbelianGroup direct_sum(const FgAbelianGroup& other) const;

    // G (x) Z_m and Tor_1(G, Z_m), via Z(x)Z_m = Z_m, Z_a(x)Z_m = Z_gcd(a,m),
    // Tor(Z, Z_m) = 0, Tor(Z_a, Z_m) = Z_gcd(a,m).
    FgAbelianGroup tensor_with_cyclic(std::int64_t m) const;
    FgAbelianGroup tor_with_cyclic(std::int64_t m) const;

    // Canonical rendering, e.g. "Z^2", "Z_2", "Z x Z_3", "0".
    std::string to_string() const;

    bool operator==(const FgAbelianGroup& other) const = default;

private:
    void normalize();

    long free_rank_ = 0;
    std::vector<std::int64_t> torsion_; // invariant factors, each >= 2, divisibility chain
};

// Rewrites an arbitrary multiset of cyclic orders (>= 1 entries allowed,
// order-1 factors are dropped) into the invariant-factor chain.
std::vector<std::int64_t> invariant_factors(std::vector<std::int64_t> orders);

} // namespace homcode
