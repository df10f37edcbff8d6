#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcode/code.hpp"

namespace homcode {

/**
 * One error configuration: x_part is a k-chain of X-type exponents (moved
 * by the boundary map, detected by the (k-1)-cell checks) and z_part a
 * k-cochain of Z-type exponents (moved by the coboundary map, detected by
 * the (k+1)-cell checks). In cohomology mode the X/Z operator roles swap
 * but the chain/cochain structure is identical.
 */
struct ErrorConfig {
    std::int64_t d = 2;
    ChainVector x_part; // degree-k chain
    ChainVector z_part; // degree-k cochain

    ErrorConfig plus(const ErrorConfig& other) const;
};

struct Syndrome {
    std::map<std::string, std::int64_t> v_violations; // (k-1)-cell -> Z_d value
    std::map<std::string, std::int64_t> p_violations; // (k+1)-cell -> Z_d value

    bool empty() const { return v_violations.empty() && p_violations.empty(); }
    long weight() const {
        return static_cast<long>(v_violations.size() + p_violations.size());
    }
    bool operator==(const Syndrome&) const = default;
};

// v_violations = boundary(x_part), p_violations = coboundary(z_part), both
// mod d; these are exactly the commutation exponents of each check with the
// error operator.
Syndrome syndrome(const HomologicalCode& code, const ErrorConfig& e);

/**
 * One maximal connected, oriented, degree-1 error component. For V-kind
 * (X-error) components adjacency runs through shared (k-1)-cells of the
 * base complex; for P-kind (Z-error) components through shared (k+1)-cells
 * (the codimension-one cells of the closed dual). `support` holds the
 * orientation of each corrupted cell as 1 or d-1; `erb` is the component's
 * boundary: the checks it violates with their Z_d values.
 */
struct ErrorComponent {
    enum class Kind { V, P };
    Kind kind = Kind::V;
    std::map<std::string, std::int64_t> support;
    std::map<std::string, std::int64_t> erb;
};

/**
 * Greedy region growing into maximal degree-1 oriented components. Adjacent
 * cells paste when the shared check sees cancelling contributions; an error
 * disagreeing with the needed orientation is re-expressed as d-1 agreeing
 * copies when that annihilates its cell. The component chains sum to the
 * error mod d, and their erbs sum to the syndrome.
 */
std::vector<ErrorComponent> decompose_error(const HomologicalCode& code, const ErrorConfig& e);

struct DistanceResult {
    enum class Status { exact, lower_bound, no_logicals };
    Status status = Status::no_logicals;
    long value = 0;                     // the distance, or cap+1 for lower bounds
    std::optional<ChainVector> witness; // a minimum-weight logical
    char witness_side = 'X';            // 'X': chain systole, 'Z': cochain systole
    std::optional<long> x_systole;      // per-side minima within the cap
    std::optional<long> z_systole;
};

// Minimum over the chain systole (min-weight cycle that is not a boundary)
// and the cochain systole, by exhaustive search in increasing weight up to
// `cap`; deterministic lexicographic enumeration.
DistanceResult code_distance(const HomologicalCode& code, long cap);

struct DecodeResult {
    ErrorConfig correction;
    bool found = false; // false when the weight cap was exhausted
};

// Minimum-weight correction with the given syndrome (ties resolved by the
// lexicographic enumeration order). Inconsistent syndromes (outside the
// image of the boundary/coboundary) raise SpecError.
DecodeResult decode_min_weight(const HomologicalCode& code, const Syndrome& s, long cap);

// Whether correcting `injected` with `correction` preserves the logical
// state: the difference must be a boundary (X side) and coboundary (Z side).
bool decode_success(const HomologicalCode& code, const ErrorConfig& injected,
                    const ErrorConfig& correction);

struct BarrierResult {
    bool has_logicals = false;
    long barrier = 0; // meaningful only when has_logicals
};

/**
 * Energy barrier for d = 2: the minimax over single-cell-increment paths
 * from the empty chain to a homologically nontrivial cycle of the maximum
 * intermediate number of violated checks. Bottleneck shortest path over the
 * 2^{n_k} chain hypercube; `site_guard` bounds n_k.
 */
BarrierResult energy_barrier(const HomologicalCode& code, int site_guard = 20);

} // namespace homcode
