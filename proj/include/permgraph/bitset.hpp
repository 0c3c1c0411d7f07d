#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace permgraph {

// Runtime-sized bit vector used for subgroup member sets and adjacency rows.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() {
        for (auto& w : words_) {
            w = ~std::uint64_t{0};
        }
        trim();
    }

    void clear() {
        for (auto& w : words_) {
            w = 0;
        }
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    bool any() const {
        for (auto w : words_) {
            if (w != 0) {
                return true;
            }
        }
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] &= o.words_[k];
        }
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] |= o.words_[k];
        }
        return *this;
    }

    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] &= ~o.words_[k];
        }
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    Bitset complement() const {
        Bitset out(*this);
        for (auto& w : out.words_) {
            w = ~w;
        }
        out.trim();
        return out;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & ~o.words_[k]) != 0) {
                return false;
            }
        }
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & o.words_[k]) != 0) {
                return true;
            }
        }
        return false;
    }

    std::size_t intersection_count(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        }
        return c;
    }

    std::size_t first() const { return scan(0); }

    // First set bit strictly after i.
    std::size_t next(std::size_t i) const { return scan(i + 1); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(k * 64 + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    bool operator==(const Bitset& o) const = default;

    // Orders sets by their sorted element lists (lexicographic).
    bool lex_less(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            const std::uint64_t diff = words_[k] ^ o.words_[k];
            if (diff != 0) {
                const auto bit = std::countr_zero(diff);
                return (words_[k] >> bit) & 1U;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    std::size_t scan(std::size_t from) const {
        if (from >= size_) {
            return npos;
        }
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w != 0) {
                return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            }
            if (++k >= words_.size()) {
                return npos;
            }
            w = words_[k];
        }
    }

    void trim() {
        if (size_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        }
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace permgraph
