/*
   Copyright 2026 The gmcfar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>

namespace gmcfar {

/// Philox4x64-10 counter-based block function. Maps a 256-bit counter and
/// 128-bit key to 256 pseudo-random bits.
class Philox4x64 {
public:
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    __extension__ using Wide = unsigned __int128;

    static constexpr Counter generate(Counter ctr, Key key) noexcept {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const auto p0 = static_cast<Wide>(kMul0) * ctr[0];
            const auto p1 = static_cast<Wide>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint64_t>(p1 >> 64) ^ ctr[1] ^ key[0],
                   static_cast<std::uint64_t>(p1),
                   static_cast<std::uint64_t>(p0 >> 64) ^ ctr[3] ^ key[1],
                   static_cast<std::uint64_t>(p0)};
        }
        return ctr;
    }

private:
    static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
    static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
    static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;
};

/// SplitMix64 finaliser; used to derive sub-stream ids.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Combines a base id with further indices into one 64-bit sub-stream id.
constexpr std::uint64_t derive_stream_id(std::uint64_t base, std::uint64_t index) noexcept {
    return mix64(mix64(base) ^ (index * 0xD6E8FEB86659FD93ull + 0x632BE59BD9B4E019ull));
}

/// Sequential view over the variates of one trial of a RandomStream.
///
/// Word j of trial t lives in Philox block (j / 4, t, domain, 0); nothing
/// depends on which thread draws it or in which order trials are visited.
class TrialGenerator {
public:
    TrialGenerator(Philox4x64::Key key, std::uint64_t trial, std::uint64_t domain) noexcept
        : key_(key), trial_(trial), domain_(domain) {}

    std::uint64_t next_u64() noexcept {
        if (lane_ == 4) refill();
        return buffer_[lane_++];
    }

    /// Uniform on the open interval (0, 1) with 53 random bits.
    double uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on (0, 1) with 32 random bits; half a word each, for counting
    /// estimators where the coarser grid is irrelevant.
    double uniform32() noexcept {
        if (half_pending_) {
            half_pending_ = false;
            return (static_cast<double>(half_) + 0.5) * 0x1.0p-32;
        }
        const std::uint64_t w = next_u64();
        half_ = static_cast<std::uint32_t>(w >> 32);
        half_pending_ = true;
        return (static_cast<double>(static_cast<std::uint32_t>(w)) + 0.5) * 0x1.0p-32;
    }

private:
    void refill() noexcept {
        buffer_ = Philox4x64::generate({block_++, trial_, domain_, 0}, key_);
        lane_ = 0;
    }

    Philox4x64::Key key_;
    std::uint64_t trial_;
    std::uint64_t domain_;
    std::uint64_t block_ = 0;
    unsigned lane_ = 4;
    bool half_pending_ = false;
    std::uint32_t half_ = 0;
    Philox4x64::Counter buffer_{};
};

/// Value-type handle on an independent, reproducible variate stream.
///
/// The pair (seed, stream_id) is the Philox key. Every trial index opens its
/// own counter range, so parallel and serial consumers see identical values.
struct RandomStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;

    /// Counter domain for flat sequences (sample_* functions).
    static constexpr std::uint64_t kSequenceDomain = 1;
    /// Counter domain for per-trial Monte Carlo draws.
    static constexpr std::uint64_t kTrialDomain = 0;

    Philox4x64::Key key() const noexcept { return {seed, stream_id}; }

    TrialGenerator trial(std::uint64_t index) const noexcept {
        return TrialGenerator(key(), index, kTrialDomain);
    }

    TrialGenerator sequence() const noexcept {
        return TrialGenerator(key(), 0, kSequenceDomain);
    }

    friend bool operator==(const RandomStream&, const RandomStream&) = default;
};

}  // namespace gmcfar
