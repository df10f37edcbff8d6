#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "homcode/chain.hpp"

namespace homcode {

/**
 * A product of generalized Pauli operators on the qudits of a code,
 * normal-ordered as (all X) * (all Z) with the reordering phase folded into
 * a single global zeta_d exponent:
 *
 *     zeta^phase * prod_i X_i^{x_i} * prod_i Z_i^{z_i}
 *
 * Exponents are kept reduced mod d; cells with exponent 0 are dropped.
 * Only the phase exponent is tracked (no finer d-even phase structure); all
 * commutation statements used downstream are phase-exponent arithmetic.
 */
class QuditPauliOperator {
public:
    explicit QuditPauliOperator(std::int64_t d);

    static QuditPauliOperator x_on(std::int64_t d, const std::string& cell, std::int64_t exp = 1);
    static QuditPauliOperator z_on(std::int64_t d, const std::string& cell, std::int64_t exp = 1);

    std::int64_t modulus() const { return d_; }
    const std::map<std::string, std::int64_t>& x_exponents() const { return x_; }
    const std::map<std::string, std::int64_t>& z_exponents() const { return z_; }
    std::int64_t phase_exponent() const { return phase_; }

    std::int64_t x_exponent(const std::string& cell) const;
    std::int64_t z_exponent(const std::string& cell) const;

    bool is_identity() const { return x_.empty() && z_.empty() && phase_ == 0; }

    void multiply_x(const std::string& cell, std::int64_t exp);
    void multiply_z(const std::string& cell, std::int64_t exp);
    void add_phase(std::int64_t exp);

    // Operator product (this * other), renormal-ordered.
    QuditPauliOperator times(const QuditPauliOperator& other) const;
    QuditPauliOperator inverse() const;
    QuditPauliOperator power(std::int64_t m) const;

    bool operator==(const QuditPauliOperator&) const = default;

private:
    std::int64_t reduce(std::int64_t e) const;

    std::int64_t d_;
    std::map<std::string, std::int64_t> x_, z_;
    std::int64_t phase_ = 0;
};

/**
 * Exponent e with [a, b] = a^-1 b^-1 a b = zeta_d^e I:
 *
 *     e = sum_cells (a.z * b.x - a.x * b.z)  mod d
 *
 * so that [Z_d, X_d] = zeta_d on a shared cell; e = 0 iff the operators
 * commute. Throws SpecError on modulus mismatch.
 */
std::int64_t symplectic_phase(const QuditPauliOperator& a, const QuditPauliOperator& b);

} // namespace homcode
