#pragma once

#include <atomic>
#include <cstdint>

namespace apc {

// Working precision for float operations plus the display digit count.
// Passed explicitly to every operation that rounds.
struct PrecisionContext {
    // Count of 32-bit limbs in a float significand.
    std::uint32_t words = 8;
    // Significant decimal digits used when printing.
    std::uint32_t output_digits = 8;
    // Optional cooperative interrupt flag polled by long-running kernels.
    const std::atomic<bool>* interrupt = nullptr;

    std::uint64_t bits() const noexcept { return 32ull * words; }

    PrecisionContext with_words(std::uint32_t w) const noexcept {
        PrecisionContext c = *this;
        c.words = w;
        return c;
    }
    // Context with extra guard limbs for intermediate results.
    PrecisionContext guarded(std::uint32_t extra = 2) const noexcept {
        return with_words(words + extra);
    }
    // Throws Interrupted when the flag is raised.
    void poll() const;
};

inline constexpr std::uint32_t kMaxWords = 1u << 20;

}  // namespace apc
