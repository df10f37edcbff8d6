#pragma once

#include <map>
#include <string>

#include "homcode/int_matrix.hpp"

namespace homcode {

/**
 * A k-chain (or k-cochain) as a sparse cell-id -> coefficient map.
 * Coefficients are interpreted mod d when a modulus is attached by the
 * operation consuming the chain; zero entries are dropped on normalization.
 */
struct ChainVector {
    int degree = 0;
    std::map<std::string, Int> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    // Number of cells with nonzero coefficient.
    long weight() const { return static_cast<long>(coeffs.size()); }

    void add(const std::string& cell, const Int& value) {
        if (value == 0) return;
        auto it = coeffs.find(cell);
        if (it == coeffs.end()) {
            coeffs.emplace(cell, value);
        } else {
            it->second += value;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    // Reduce every coefficient into [0, d); drops cancelled entries.
    void reduce_mod(const Int& d) {
        for (auto it = coeffs.begin(); it != coeffs.end();) {
            Int r = it->second % d;
            if (r < 0) r += d;
            if (r == 0) {
                it = coeffs.erase(it);
            } else {
                it->second = r;
                ++it;
            }
        }
    }

    ChainVector plus(const ChainVector& other) const {
        ChainVector out = *this;
        for (const auto& [cell, v] : other.coeffs) out.add(cell, v);
        return out;
    }

    ChainVector minus(const ChainVector& other) const {
        ChainVector out = *this;
        for (const auto& [cell, v] : other.coeffs) out.add(cell, -v);
        return out;
    }

    bool operator==(const ChainVector&) const = default;
};

} // namespace homcode
