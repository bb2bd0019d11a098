#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace liftinglab {

// Exact rational on int64. All metric ratios in this project are small
// (numerators and denominators bounded by 2^{2n}, n <= 24), so no big-integer
// backing is needed.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : p_(num), q_(den) {
        if (q_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return p_; }
    std::int64_t den() const { return q_; }

    bool operator==(const Rational& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(p_) * o.q_ < static_cast<__int128>(o.p_) * q_;
    }

    Rational operator*(const Rational& o) const {
        return Rational(p_ * o.p_, q_ * o.q_);
    }

    double to_double() const { return static_cast<double>(p_) / static_cast<double>(q_); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        if (q_ == 1) return std::to_string(p_);
        return std::to_string(p_) + "/" + std::to_string(q_);
    }

    // Fixed-point decimal with `digits` places, rounding half away from zero.
    // Exact integer arithmetic; used to compare against two-decimal table
    // entries without float noise.
    std::string decimal(int digits) const {
        std::int64_t pow10 = 1;
        for (int i = 0; i < digits; ++i) pow10 *= 10;
        __int128 scaled = static_cast<__int128>(p_) * pow10;
        bool neg = scaled < 0;
        __int128 mag = neg ? -scaled : scaled;
        __int128 rounded = (2 * mag + q_) / (2 * static_cast<__int128>(q_));
        std::int64_t whole = static_cast<std::int64_t>(rounded / pow10);
        std::int64_t frac = static_cast<std::int64_t>(rounded % pow10);
        std::string fs = std::to_string(frac);
        fs.insert(0, static_cast<std::size_t>(digits) - fs.size(), '0');
        std::string out = (neg ? "-" : "") + std::to_string(whole);
        if (digits > 0) out += "." + fs;
        return out;
    }

  private:
    void normalize() {
        if (q_ < 0) { p_ = -p_; q_ = -q_; }
        std::int64_t g = std::gcd(p_ < 0 ? -p_ : p_, q_);
        if (g > 1) { p_ /= g; q_ /= g; }
        if (p_ == 0) q_ = 1;
    }

    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
};

}  // namespace liftinglab
