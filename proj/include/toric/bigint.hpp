#ifndef TORIC_BIGINT_HPP
#define TORIC_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

// Unsigned big integer, base 2^32 little-endian limbs.  Only the handful of
// operations the counting code needs: multiply, power, compare, print.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v) : limbs_{static_cast<std::uint32_t>(v & 0xffffffffu), static_cast<std::uint32_t>(v >> 32)} {
        trim();
    }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    BigUint& operator*=(const BigUint& o) {
        std::vector<std::uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                std::uint64_t cur = out[i + j] + carry + std::uint64_t(limbs_[i]) * o.limbs_[j];
                out[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            out[i + o.limbs_.size()] += static_cast<std::uint32_t>(carry);
        }
        limbs_ = std::move(out);
        trim();
        return *this;
    }

    friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

    static BigUint pow(std::uint64_t base, std::uint64_t exp) {
        BigUint r(1), b(base);
        while (exp) {
            if (exp & 1) r *= b;
            b *= b;
            exp >>= 1;
        }
        return r;
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return !(*this == o); }

    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t as_u64() const {
        std::uint64_t v = limbs_[0];
        if (limbs_.size() > 1) v |= std::uint64_t(limbs_[1]) << 32;
        return v;
    }

    std::string to_string() const {
        // repeated division by 10^9
        std::vector<std::uint32_t> work(limbs_);
        std::string out;
        while (!(work.size() == 1 && work[0] == 0)) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (work.size() > 1 && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            bool last = work.size() == 1 && work[0] == 0;
            if (!last) chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return out.empty() ? "0" : out;
    }

  private:
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint32_t> limbs_;
};

}  // namespace toric

#endif
