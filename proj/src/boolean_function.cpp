#include "liftinglab/boolean_function.hpp"

#include <algorithm>
#include <bit>

namespace liftinglab {

BooleanFunction::BooleanFunction(int arity, std::vector<std::uint8_t> truth_table)
    : k_(arity), tt_(std::move(truth_table)) {
    if (k_ < 1 || k_ > kMaxArity)
        throw InputError("arity must be in [1, " + std::to_string(kMaxArity) + "], got " + std::to_string(k_));
    if (tt_.size() != (1u << k_))
        throw InputError("truth table length " + std::to_string(tt_.size()) +
                         " does not match arity " + std::to_string(k_));
    for (auto& b : tt_) b &= 1;
}

BooleanFunction BooleanFunction::from_packed(int arity, std::uint64_t packed) {
    if (arity < 1 || arity > 6) throw InputError("from_packed supports arity 1..6");
    std::uint32_t size = 1u << arity;
    std::vector<std::uint8_t> tt(size);
    for (std::uint32_t i = 0; i < size; ++i)
        tt[i] = static_cast<std::uint8_t>((packed >> (size - 1 - i)) & 1);
    return BooleanFunction(arity, std::move(tt));
}

BooleanFunction BooleanFunction::constant(int arity, int value) {
    return BooleanFunction(arity, std::vector<std::uint8_t>(1u << arity, value & 1));
}

std::uint64_t BooleanFunction::packed() const {
    if (k_ > 6) throw InputError("packed() supports arity 1..6");
    std::uint64_t v = 0;
    for (std::uint32_t i = 0; i < table_size(); ++i)
        v |= static_cast<std::uint64_t>(tt_[i]) << (table_size() - 1 - i);
    return v;
}

BooleanFunction BooleanFunction::from_hex(int arity, const std::string& hex) {
    if (arity < 1 || arity > kMaxArity) throw InputError("bad arity");
    std::uint32_t bits = 1u << arity;
    std::uint32_t digits = (bits + 3) / 4;
    if (hex.size() != digits)
        throw InputError("expected " + std::to_string(digits) + " hex digits for arity " +
                         std::to_string(arity) + ", got " + std::to_string(hex.size()));
    std::vector<std::uint8_t> tt(bits);
    for (std::uint32_t d = 0; d < digits; ++d) {
        char c = hex[d];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw InputError(std::string("bad hex digit '") + c + "'");
        for (int b = 0; b < 4; ++b) {
            std::uint32_t i = 4 * d + b;
            if (i < bits) tt[i] = static_cast<std::uint8_t>((v >> (3 - b)) & 1);
        }
    }
    return BooleanFunction(arity, std::move(tt));
}

std::string BooleanFunction::to_hex() const {
    std::uint32_t bits = table_size();
    std::uint32_t digits = (bits + 3) / 4;
    std::string out(digits, '0');
    for (std::uint32_t d = 0; d < digits; ++d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            std::uint32_t i = 4 * d + b;
            v = (v << 1) | (i < bits ? tt_[i] : 0);
        }
        out[d] = "0123456789abcdef"[v];
    }
    return out;
}

int BooleanFunction::weight() const {
    int w = 0;
    for (auto b : tt_) w += b;
    return w;
}

int evaluate(const BooleanFunction& f, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != f.arity())
        throw InputError("input length " + std::to_string(x.size()) +
                         " does not match arity " + std::to_string(f.arity()));
    return f.value_at(enc(x));
}

AnfPolynomial::AnfPolynomial(int arity, std::set<std::uint32_t> monomials)
    : k_(arity), monomials_(std::move(monomials)) {
    if (k_ < 1 || k_ > kMaxArity) throw InputError("bad arity");
    for (auto m : monomials_)
        if (m >> k_) throw InputError("monomial uses a variable beyond the arity");
}

int AnfPolynomial::degree() const {
    int d = 0;
    for (auto m : monomials_) d = std::max(d, std::popcount(m));
    return d;
}

int AnfPolynomial::evaluate(std::uint32_t x_index) const {
    // x_index uses the enc() convention: variable x_j is bit (k-j).
    int acc = 0;
    for (auto m : monomials_) {
        std::uint32_t idxmask = 0;
        for (int j = 1; j <= k_; ++j)
            if (m & (1u << (j - 1))) idxmask |= 1u << (k_ - j);
        acc ^= ((x_index & idxmask) == idxmask) ? 1 : 0;
    }
    return acc;
}

BooleanFunction AnfPolynomial::to_function() const {
    std::vector<std::uint8_t> tt(1u << k_);
    for (std::uint32_t i = 0; i < tt.size(); ++i)
        tt[i] = static_cast<std::uint8_t>(evaluate(i));
    return BooleanFunction(k_, std::move(tt));
}

AnfPolynomial anf_of(const BooleanFunction& f) {
    const int k = f.arity();
    std::vector<std::uint8_t> a = f.truth_table();
    // Fast Moebius transform over the subset lattice of table indices.
    for (int p = 0; p < k; ++p) {
        std::uint32_t step = 1u << p;
        for (std::uint32_t i = 0; i < a.size(); ++i)
            if (i & step) a[i] ^= a[i ^ step];
    }
    std::set<std::uint32_t> monomials;
    for (std::uint32_t m = 0; m < a.size(); ++m) {
        if (!a[m]) continue;
        // Index bit (k-j) corresponds to variable x_j; re-express as a
        // variable mask with bit (j-1).
        std::uint32_t vars = 0;
        for (int j = 1; j <= k; ++j)
            if (m & (1u << (k - j))) vars |= 1u << (j - 1);
        monomials.insert(vars);
    }
    return AnfPolynomial(k, std::move(monomials));
}

int degree(const BooleanFunction& f) {
    return anf_of(f).degree();
}

bool depends_on(const BooleanFunction& f, int var) {
    if (var < 1 || var > f.arity()) throw InputError("variable index out of range");
    std::uint32_t bit = 1u << (f.arity() - var);
    const auto& tt = f.truth_table();
    for (std::uint32_t i = 0; i < tt.size(); ++i)
        if (tt[i] != tt[i ^ bit]) return true;
    return false;
}

int diameter(const BooleanFunction& f) {
    int first = 0, last = 0;
    for (int t = 1; t <= f.arity(); ++t) {
        if (!depends_on(f, t)) continue;
        if (!first) first = t;
        last = t;
    }
    return first ? last - first + 1 : 0;
}

BooleanFunction restrict_to_diameter(const BooleanFunction& f) {
    int first = 0, last = 0;
    for (int t = 1; t <= f.arity(); ++t) {
        if (!depends_on(f, t)) continue;
        if (!first) first = t;
        last = t;
    }
    if (!first) throw InputError("constant function has no diameter");
    int k2 = last - first + 1;
    if (k2 == f.arity()) return f;
    std::vector<std::uint8_t> tt(1u << k2);
    for (std::uint32_t i = 0; i < tt.size(); ++i) {
        // Place the window bits at variables first..last; the dropped
        // variables do not affect f, so fix them to zero.
        std::uint32_t full = i << (f.arity() - last);
        tt[i] = static_cast<std::uint8_t>(f.value_at(full));
    }
    return BooleanFunction(k2, std::move(tt));
}

std::vector<std::int32_t> walsh_spectrum(const BooleanFunction& f) {
    std::vector<std::int32_t> spec(f.table_size());
    for (std::uint32_t i = 0; i < spec.size(); ++i)
        spec[i] = f.value_at(i) ? -1 : 1;
    for (std::uint32_t h = 1; h < spec.size(); h <<= 1) {
        for (std::uint32_t i = 0; i < spec.size(); i += h << 1) {
            for (std::uint32_t j = i; j < i + h; ++j) {
                std::int32_t a = spec[j], b = spec[j + h];
                spec[j] = a + b;
                spec[j + h] = a - b;
            }
        }
    }
    return spec;
}

int nonlinearity(const BooleanFunction& f) {
    std::int32_t maxabs = 0;
    for (auto v : walsh_spectrum(f)) maxabs = std::max(maxabs, v < 0 ? -v : v);
    return (1 << (f.arity() - 1)) - maxabs / 2;
}

bool is_balanced(const BooleanFunction& f) {
    return f.weight() == 1 << (f.arity() - 1);
}

Permutivity is_permutive(const BooleanFunction& f) {
    const int k = f.arity();
    const auto& tt = f.truth_table();
    std::uint32_t msb = 1u << (k - 1);
    bool left = true, right = true;
    for (std::uint32_t i = 0; i < tt.size(); ++i) {
        if (tt[i ^ msb] != (tt[i] ^ 1)) left = false;
        if (tt[i ^ 1u] != (tt[i] ^ 1)) right = false;
        if (!left && !right) break;
    }
    if (left && right) return Permutivity::both;
    if (left) return Permutivity::left;
    if (right) return Permutivity::right;
    return Permutivity::none;
}

namespace {

std::uint32_t bit_reverse(std::uint32_t v, int k) {
    std::uint32_t r = 0;
    for (int b = 0; b < k; ++b)
        if (v & (1u << b)) r |= 1u << (k - 1 - b);
    return r;
}

}  // namespace

std::vector<BooleanFunction> elementary_orbit(const BooleanFunction& f) {
    const int k = f.arity();
    const std::uint32_t size = f.table_size();
    std::vector<BooleanFunction> out;
    for (int ref = 0; ref < 2; ++ref) {
        for (int comp = 0; comp < 2; ++comp) {
            std::vector<std::uint8_t> tt(size);
            for (std::uint32_t i = 0; i < size; ++i) {
                std::uint32_t j = i;
                if (ref) j = bit_reverse(j, k);
                if (comp) j ^= size - 1;
                tt[i] = static_cast<std::uint8_t>(f.value_at(j));
            }
            for (int out_comp = 0; out_comp < 2; ++out_comp) {
                std::vector<std::uint8_t> t2 = tt;
                if (out_comp)
                    for (auto& b : t2) b ^= 1;
                BooleanFunction cand(k, std::move(t2));
                bool seen = false;
                for (const auto& g : out)
                    if (g == cand) { seen = true; break; }
                if (!seen) out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

BooleanFunction canonical_form(const BooleanFunction& f) {
    auto orbit = elementary_orbit(f);
    return *std::min_element(orbit.begin(), orbit.end());
}

BoundaryBalance boundary_balance(const BooleanFunction& f) {
    const int k = f.arity();
    if (k < 2) throw InputError("boundary_balance requires arity >= 2");
    int target = 1 << (k - 2);
    int zeros_x1 = 0, zeros_xk = 0;
    for (std::uint32_t i = 0; i < f.table_size(); ++i) {
        if (!(i >> (k - 1)) && f.value_at(i) == 0) ++zeros_x1;
        if (!(i & 1u) && f.value_at(i) == 0) ++zeros_xk;
    }
    bool x1 = zeros_x1 == target, xk = zeros_xk == target;
    if (x1 && xk) return BoundaryBalance::both;
    if (x1) return BoundaryBalance::x1_side;
    if (xk) return BoundaryBalance::xk_side;
    return BoundaryBalance::neither;
}

namespace packed {

std::uint64_t reflect(std::uint64_t table, int k) {
    std::uint32_t size = 1u << k;
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < size; ++i) {
        std::uint32_t j = bit_reverse(i, k);
        out |= ((table >> (size - 1 - j)) & 1) << (size - 1 - i);
    }
    return out;
}

std::uint64_t complement_inputs(std::uint64_t table, int k) {
    std::uint32_t size = 1u << k;
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < size; ++i) {
        std::uint32_t j = i ^ (size - 1);
        out |= ((table >> (size - 1 - j)) & 1) << (size - 1 - i);
    }
    return out;
}

std::uint64_t canonical(std::uint64_t table, int k) {
    std::uint64_t mask = (k == 6) ? ~0ULL : ((1ULL << (1u << k)) - 1);
    std::uint64_t best = ~0ULL;
    std::uint64_t r = reflect(table, k);
    for (std::uint64_t base : {table, r, complement_inputs(table, k), complement_inputs(r, k)}) {
        best = std::min(best, base);
        best = std::min(best, base ^ mask);
    }
    return best;
}

bool has_full_diameter(std::uint64_t table, int k) {
    std::uint32_t size = 1u << k;
    std::uint32_t half = size >> 1;
    // Depends on x_1 iff the two table halves differ; on x_k iff some
    // adjacent pair differs.
    std::uint64_t hi = table >> half;
    std::uint64_t lo = table & ((half == 64) ? ~0ULL : ((1ULL << half) - 1));
    if (hi == lo) return false;
    for (std::uint32_t i = 0; i < size; i += 2)
        if (((table >> (size - 1 - i)) & 1) != ((table >> (size - 2 - i)) & 1)) return true;
    return false;
}

int degree(std::uint64_t table, int k) {
    return liftinglab::degree(BooleanFunction::from_packed(k, table));
}

bool is_permutive(std::uint64_t table, int k) {
    auto p = liftinglab::is_permutive(BooleanFunction::from_packed(k, table));
    return p != Permutivity::none;
}

}  // namespace packed

}  // namespace liftinglab
