#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

namespace frab {

/// Opaque 160-bit identifier attached to every unordered collection.
///
/// Equal tokens certify that two collections follow the same hidden element
/// order and may therefore be combined elementwise. Tokens are provenance
/// markers, not content hashes: collections with different items share a
/// token exactly when they were derived from the same snapshot.
class ProvenanceToken {
public:
    /// A token unequal to all previously generated ones with overwhelming
    /// probability. Safe to call from multiple threads.
    static ProvenanceToken fresh() {
        static std::atomic<std::uint64_t> stream_id{0};
        thread_local std::mt19937_64 rng = [] {
            std::random_device rd;
            std::seed_seq seed{rd(), rd(), rd(), rd(),
                               static_cast<std::uint32_t>(stream_id.fetch_add(1))};
            return std::mt19937_64(seed);
        }();
        ProvenanceToken token;
        const std::uint64_t a = rng();
        const std::uint64_t b = rng();
        const std::uint64_t c = rng();
        token.words_ = {static_cast<std::uint32_t>(a),
                        static_cast<std::uint32_t>(a >> 32),
                        static_cast<std::uint32_t>(b),
                        static_cast<std::uint32_t>(b >> 32),
                        static_cast<std::uint32_t>(c)};
        return token;
    }

    /// 40-character lowercase hex rendering.
    std::string hex() const {
        char buf[41];
        std::snprintf(buf, sizeof buf, "%08x%08x%08x%08x%08x", words_[0], words_[1],
                      words_[2], words_[3], words_[4]);
        return std::string(buf, 40);
    }

    friend bool operator==(const ProvenanceToken&, const ProvenanceToken&) = default;

private:
    std::array<std::uint32_t, 5> words_{};
};

}  // namespace frab
