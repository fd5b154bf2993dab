#include "rsauto/gf2m.hpp"

#include <stdexcept>
#include <string>

namespace rsauto {

std::uint32_t Field::default_prim_poly(int m) {
    switch (m) {
        case 3: return 0x0Bu;    // x^3 + x + 1
        case 4: return 0x13u;    // x^4 + x + 1
        case 5: return 0x25u;    // x^5 + x^2 + 1
        case 6: return 0x43u;    // x^6 + x + 1
        case 7: return 0x89u;    // x^7 + x^3 + 1
        case 8: return 0x11Du;   // x^8 + x^4 + x^3 + x^2 + 1
        case 9: return 0x211u;   // x^9 + x^4 + 1
        case 10: return 0x409u;  // x^10 + x^3 + 1
        default:
            throw std::invalid_argument("Field: m must be in 3..10, got " + std::to_string(m));
    }
}

Field::Field(int m) : Field(m, default_prim_poly(m)) {}

Field::Field(int m, std::uint32_t prim_poly) : m_(m), poly_(prim_poly) {
    if (m < 3 || m > 10)
        throw std::invalid_argument("Field: m must be in 3..10, got " + std::to_string(m));
    if (poly_ >> m != 1u)
        throw std::invalid_argument("Field: prim_poly must have degree exactly m");
    n_ = (1 << m_) - 1;
    build();
}

void Field::build() {
    alog_.assign(2 * n_, 0);
    log_.assign(n_ + 1, 0);
    Fe e = 1;
    for (int k = 0; k < n_; ++k) {
        if (e == 1 && k > 0)
            throw std::runtime_error("Field: polynomial is not primitive");
        alog_[k] = e;
        alog_[k + n_] = e;
        log_[e] = k;
        e = static_cast<Fe>(e << 1);
        if (e & (1u << m_)) e = static_cast<Fe>(e ^ poly_);
    }
    if (e != 1) throw std::runtime_error("Field: polynomial is not primitive");

    trace_.assign(n_ + 1, 0);
    for (Fe x = 0; x <= n_; ++x) {
        Fe t = 0, p = x;
        for (int k = 0; k < m_; ++k) {
            t ^= p;
            p = mul(p, p);
        }
        // trace lands in the prime field {0, 1}
        trace_[x] = static_cast<std::uint8_t>(t & 1u);
    }
}

Fe Field::inv(Fe x) const {
    if (x == 0) throw std::domain_error("Field::inv: zero has no inverse");
    return alog_[n_ - log_[x]];
}

Fe Field::pow(Fe x, long k) const {
    if (x == 0) {
        if (k == 0) return 1;
        if (k < 0) throw std::domain_error("Field::pow: negative power of zero");
        return 0;
    }
    long r = (static_cast<long>(log_[x]) * (k % n_)) % n_;
    if (r < 0) r += n_;
    return alog_[r];
}

int Field::log(Fe x) const {
    if (x == 0) throw std::domain_error("Field::log: zero has no logarithm");
    return log_[x];
}

}  // namespace rsauto
