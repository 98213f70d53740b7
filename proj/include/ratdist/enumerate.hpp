#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ratdist/numeric.hpp"

namespace ratdist {

// Calkin-Wilf walk: every positive rational exactly once, starting at 1.
class RationalEnumerator {
public:
    Rational next() {
        Rational q = cur_;
        BigInt fl = num(cur_) / den(cur_);
        cur_ = Rational(1) / (2 * Rational(fl) - cur_ + 1);
        return q;
    }

private:
    Rational cur_ = 1;
};

// Deterministic stream of nonzero rationals: Calkin-Wilf values with both
// signs, shuffled inside fixed-size blocks by a seeded generator. The first
// `plain_prefix` values come out in canonical order so the smallest
// parameters are always reached early.
class SignedRationalStream {
public:
    explicit SignedRationalStream(std::uint64_t seed, std::size_t block = 64,
                                  std::size_t plain_prefix = 16)
        : seed_(seed), block_(block), plain_left_(plain_prefix) {}

    Rational next() {
        if (plain_left_ > 0) {
            --plain_left_;
            if (pending_negation_) {
                pending_negation_ = false;
                return -last_;
            }
            last_ = enum_.next();
            pending_negation_ = true;
            return last_;
        }
        if (pos_ == buf_.size()) refill();
        return buf_[pos_++];
    }

private:
    void refill() {
        buf_.clear();
        for (std::size_t i = 0; i < block_; ++i) {
            Rational q = enum_.next();
            buf_.push_back(q);
            buf_.push_back(-q);
        }
        std::mt19937_64 rng(seed_ ^ (0x9e3779b97f4a7c15ULL * ++block_index_));
        std::shuffle(buf_.begin(), buf_.end(), rng);
        pos_ = 0;
    }

    RationalEnumerator enum_;
    std::uint64_t seed_;
    std::size_t block_;
    std::size_t plain_left_;
    bool pending_negation_ = false;
    Rational last_;
    std::uint64_t block_index_ = 0;
    std::vector<Rational> buf_;
    std::size_t pos_ = 0;
};

} // namespace ratdist
