#pragma once

#include <cstdint>
#include <vector>

#include "modisom/error.hpp"

namespace modisom {

// A residue modulo a prime. Arithmetic stays in {0, ..., p-1}.
struct FpScalar {
    uint32_t value = 0;
    uint32_t p = 2;

    FpScalar() = default;
    FpScalar(uint32_t v, uint32_t prime) : value(v % prime), p(prime) {}

    FpScalar operator+(FpScalar o) const { return {value + o.value, check(o)}; }
    FpScalar operator-(FpScalar o) const { return {value + p - o.value, check(o)}; }
    FpScalar operator*(FpScalar o) const { return {value * o.value, check(o)}; }
    bool operator==(const FpScalar& o) const { return value == o.value && p == o.p; }
    bool is_zero() const { return value == 0; }

    // Inverse by Fermat: a^(p-2). Primes here are tiny.
    FpScalar inverse() const {
        if (value == 0) throw error("FpScalar: inverse of zero");
        uint32_t r = 1, b = value, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return {r, p};
    }

private:
    uint32_t check(FpScalar o) const {
        if (p != o.p) throw dimension_mismatch("FpScalar: mixed primes");
        return p;
    }
};

// Dense vector over F_p. For p = 2 entries are bit-packed into 64-bit words,
// otherwise one byte per entry.
class FpVector {
public:
    FpVector() = default;

    FpVector(uint32_t p, uint32_t dim) : p_(p), dim_(dim) {
        if (p == 2)
            words_.assign((dim + 63) / 64, 0);
        else
            bytes_.assign(dim, 0);
    }

    static FpVector from_values(uint32_t p, const std::vector<uint32_t>& vals) {
        FpVector v(p, static_cast<uint32_t>(vals.size()));
        for (uint32_t i = 0; i < v.dim_; ++i) v.set(i, vals[i] % p);
        return v;
    }

    uint32_t prime() const { return p_; }
    uint32_t dim() const { return dim_; }

    uint32_t get(uint32_t i) const {
        if (p_ == 2) return (words_[i >> 6] >> (i & 63)) & 1u;
        return bytes_[i];
    }

    void set(uint32_t i, uint32_t v) {
        if (p_ == 2) {
            uint64_t mask = uint64_t(1) << (i & 63);
            if (v & 1)
                words_[i >> 6] |= mask;
            else
                words_[i >> 6] &= ~mask;
        } else {
            bytes_[i] = static_cast<uint8_t>(v % p_);
        }
    }

    // coeff[i] += v
    void add_at(uint32_t i, uint32_t v) {
        if (p_ == 2) {
            if (v & 1) words_[i >> 6] ^= uint64_t(1) << (i & 63);
        } else {
            bytes_[i] = static_cast<uint8_t>((bytes_[i] + v) % p_);
        }
    }

    void flip_bit(uint32_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    bool is_zero() const {
        if (p_ == 2) {
            for (uint64_t w : words_)
                if (w) return false;
        } else {
            for (uint8_t b : bytes_)
                if (b) return false;
        }
        return true;
    }

    // Index of the first nonzero entry, or -1.
    int leading() const {
        if (p_ == 2) {
            for (size_t k = 0; k < words_.size(); ++k)
                if (words_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(words_[k]));
            return -1;
        }
        for (uint32_t i = 0; i < dim_; ++i)
            if (bytes_[i]) return static_cast<int>(i);
        return -1;
    }

    // *this += c * o
    void add_scaled(const FpVector& o, uint32_t c) {
        require_compatible(o);
        if (p_ == 2) {
            if (c & 1)
                for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        } else {
            c %= p_;
            if (c)
                for (uint32_t i = 0; i < dim_; ++i)
                    bytes_[i] = static_cast<uint8_t>((bytes_[i] + c * o.bytes_[i]) % p_);
        }
    }

    void scale(uint32_t c) {
        if (p_ == 2) {
            if (!(c & 1))
                for (auto& w : words_) w = 0;
        } else {
            c %= p_;
            for (uint32_t i = 0; i < dim_; ++i) bytes_[i] = static_cast<uint8_t>(bytes_[i] * c % p_);
        }
    }

    void negate() {
        if (p_ == 2) return;
        for (uint32_t i = 0; i < dim_; ++i)
            if (bytes_[i]) bytes_[i] = static_cast<uint8_t>(p_ - bytes_[i]);
    }

    // Visit nonzero entries in index order: f(index, value).
    template <class F>
    void for_support(F&& f) const {
        if (p_ == 2) {
            for (size_t k = 0; k < words_.size(); ++k) {
                uint64_t w = words_[k];
                while (w) {
                    uint32_t i = static_cast<uint32_t>(k * 64 + __builtin_ctzll(w));
                    f(i, 1u);
                    w &= w - 1;
                }
            }
        } else {
            for (uint32_t i = 0; i < dim_; ++i)
                if (bytes_[i]) f(i, static_cast<uint32_t>(bytes_[i]));
        }
    }

    uint32_t support_size() const {
        uint32_t n = 0;
        if (p_ == 2) {
            for (uint64_t w : words_) n += static_cast<uint32_t>(__builtin_popcountll(w));
        } else {
            for (uint8_t b : bytes_) n += (b != 0);
        }
        return n;
    }

    // Sum of all entries mod p (the augmentation once indices mean group elements).
    uint32_t coeff_sum() const {
        if (p_ == 2) {
            uint64_t n = 0;
            for (uint64_t w : words_) n += __builtin_popcountll(w);
            return static_cast<uint32_t>(n & 1);
        }
        uint64_t s = 0;
        for (uint8_t b : bytes_) s += b;
        return static_cast<uint32_t>(s % p_);
    }

    bool operator==(const FpVector& o) const {
        return p_ == o.p_ && dim_ == o.dim_ && words_ == o.words_ && bytes_ == o.bytes_;
    }
    bool operator!=(const FpVector& o) const { return !(*this == o); }

    // Canonical byte string, usable as a hash key.
    std::vector<uint8_t> key_bytes() const {
        if (p_ != 2) return bytes_;
        std::vector<uint8_t> out(words_.size() * 8);
        for (size_t k = 0; k < words_.size(); ++k)
            for (int b = 0; b < 8; ++b) out[k * 8 + b] = static_cast<uint8_t>(words_[k] >> (8 * b));
        return out;
    }

    void require_compatible(const FpVector& o) const {
        if (p_ != o.p_ || dim_ != o.dim_)
            throw dimension_mismatch("FpVector: mixed dimensions or primes");
    }

private:
    uint32_t p_ = 2;
    uint32_t dim_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint8_t> bytes_;
};

} // namespace modisom
