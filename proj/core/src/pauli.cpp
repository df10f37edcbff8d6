#include "homcode/pauli.hpp"

#include <stdexcept>

#include "homcode/errors.hpp"

namespace homcode {

QuditPauliOperator::QuditPauliOperator(std::int64_t d) : d_(d) {
    if (d < 2) throw std::invalid_argument("qudit modulus must be >= 2");
}

QuditPauliOperator QuditPauliOperator::x_on(std::int64_t d, const std::string& cell,
                                            std::int64_t exp) {
    QuditPauliOperator op(d);
    op.multiply_x(cell, exp);
    return op;
}

QuditPauliOperator QuditPauliOperator::z_on(std::int64_t d, const std::string& cell,
                                            std::int64_t exp) {
    QuditPauliOperator op(d);
    op.multiply_z(cell, exp);
    return op;
}

std::int64_t QuditPauliOperator::reduce(std::int64_t e) const {
    e %= d_;
    return e < 0 ? e + d_ : e;
}

std::int64_t QuditPauliOperator::x_exponent(const std::string& cell) const {
    auto it = x_.find(cell);
    return it == x_.end() ? 0 : it->second;
}

std::int64_t QuditPauliOperator::z_exponent(const std::string& cell) const {
    auto it = z_.find(cell);
    return it == z_.end() ? 0 : it->second;
}

void QuditPauliOperator::multiply_x(const std::string& cell, std::int64_t exp) {
    std::int64_t e = reduce(x_exponent(cell) + exp);
    if (e == 0) {
        x_.erase(cell);
    } else {
        x_[cell] = e;
    }
}

void QuditPauliOperator::multiply_z(const std::string& cell, std::int64_t exp) {
    std::int64_t e = reduce(z_exponent(cell) + exp);
    if (e == 0) {
        z_.erase(cell);
    } else {
        z_[cell] = e;
    }
}

void QuditPauliOperator::add_phase(std::int64_t exp) { phase_ = reduce(phase_ + exp); }

QuditPauliOperator QuditPauliOperator::times(const QuditPauliOperator& other) const {
    if (d_ != other.d_) throw SpecError("qudit modulus mismatch in operator product");
    QuditPauliOperator out = *this;
    out.add_phase(other.phase_);
    // Moving other's X block left past this operator's Z block picks up
    // zeta^{z_this * x_other} per cell.
    for (const auto& [cell, xe] : other.x_) {
        out.add_phase(reduce(z_exponent(cell) * xe));
        out.multiply_x(cell, xe);
    }
    for (const auto& [cell, ze] : other.z_) out.multiply_z(cell, ze);
    return out;
}

QuditPauliOperator QuditPauliOperator::inverse() const {
    // (zeta^p X^x Z^z)^-1 = zeta^{-p} Z^-z X^-x; renormal-ordering the
    // right-hand side picks up zeta^{x*z} per cell.
    QuditPauliOperator out(d_);
    out.phase_ = reduce(-phase_);
    for (const auto& [cell, xe] : x_) out.x_[cell] = reduce(-xe);
    for (const auto& [cell, ze] : z_) out.z_[cell] = reduce(-ze);
    for (const auto& [cell, xe] : x_) out.add_phase(reduce(xe * z_exponent(cell)));
    return out;
}

QuditPauliOperator QuditPauliOperator::power(std::int64_t m) const {
    QuditPauliOperator out(d_);
    QuditPauliOperator base = m < 0 ? inverse() : *this;
    std::int64_t count = m < 0 ? -m : m;
    for (std::int64_t i = 0; i < count; ++i) out = out.times(base);
    return out;
}

std::int64_t symplectic_phase(const QuditPauliOperator& a, const QuditPauliOperator& b) {
    if (a.modulus() != b.modulus()) throw SpecError("qudit modulus mismatch in commutator");
    const std::int64_t d = a.modulus();
    std::int64_t e = 0;
    for (const auto& [cell, ze] : a.z_exponents()) e += ze * b.x_exponent(cell) % d;
    for (const auto& [cell, xe] : a.x_exponents()) e -= xe * b.z_exponent(cell) % d;
    e %= d;
    return e < 0 ? e + d : e;
}

} // namespace homcode
