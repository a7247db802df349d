#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ctn {

/// Runtime-sized bitset over 64-bit words. Only what the edge masks need.
class DynamicBitset
{
public:
    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    [[nodiscard]] std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set_all()
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        trim();
    }
    void reset_all()
    {
        for (auto& w : words_)
            w = 0;
    }

    [[nodiscard]] std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Calls f(index) for every set bit, ascending.
    template <typename F>
    void for_each_set(F&& f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                const int b = std::countr_zero(w);
                f(k * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    bool operator==(const DynamicBitset&) const = default;

private:
    void trim()
    {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ctn
