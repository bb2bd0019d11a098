#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace liftinglab {

// Minimal unsigned big integer for the closed-form counting expressions,
// whose terms are powers of two up to 2^(2^{k-1}+1) and overflow u64 from
// k = 7 on. Supports exactly what those formulas need.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v) : limbs_{v} {}

    static BigUint pow2(std::uint64_t e) {
        BigUint r;
        r.limbs_.assign(e / 64 + 1, 0);
        r.limbs_[e / 64] = 1ULL << (e % 64);
        return r;
    }

    BigUint& operator+=(const BigUint& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint64_t>(s);
            carry = s >> 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    // Requires *this >= o.
    BigUint& operator-=(const BigUint& o) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 sub = (i < o.limbs_.size() ? o.limbs_[i] : 0) + static_cast<unsigned __int128>(borrow);
            if (limbs_[i] >= sub) {
                limbs_[i] -= static_cast<std::uint64_t>(sub);
                borrow = 0;
            } else {
                limbs_[i] = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) + limbs_[i] - sub);
                borrow = 1;
            }
        }
        trim();
        return *this;
    }

    BigUint& mul_small(std::uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 v = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(v);
            carry = v >> 64;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint64_t>(carry));
            carry >>= 64;
        }
        return *this;
    }

    // Exact division by a small divisor (remainder must be zero for the
    // counting formulas; it is discarded here).
    BigUint& div_small(std::uint64_t d) {
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator==(std::uint64_t v) const { return limbs_.size() == 1 && limbs_[0] == v; }

    bool fits_u64() const { return limbs_.size() == 1; }
    std::uint64_t to_u64() const { return limbs_[0]; }

    std::string str() const {
        BigUint tmp = *this;
        std::string out;
        if (tmp.limbs_.size() == 1) return std::to_string(tmp.limbs_[0]);
        while (!(tmp.limbs_.size() == 1 && tmp.limbs_[0] == 0)) {
            unsigned __int128 rem = 0;
            for (std::size_t i = tmp.limbs_.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | tmp.limbs_[i];
                tmp.limbs_[i] = static_cast<std::uint64_t>(cur / 10);
                rem = cur % 10;
            }
            tmp.trim();
            out.push_back(static_cast<char>('0' + static_cast<int>(rem)));
        }
        if (out.empty()) out = "0";
        return {out.rbegin(), out.rend()};
    }

  private:
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_;
};

}  // namespace liftinglab
