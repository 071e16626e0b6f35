#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mgh {

struct MixedGraph;

// Subset of a target graph's vertex set. Sized at construction; supports
// targets of any order (one 64-bit word per 64 vertices).
class ColorSet {
  public:
    ColorSet() = default;
    explicit ColorSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    ColorSet(int universe, std::initializer_list<int> bits) : ColorSet(universe) {
        for (int b : bits) set(b);
    }

    static ColorSet full(int universe) {
        ColorSet s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    int universe() const { return universe_; }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool subset_of(const ColorSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    ColorSet& operator&=(const ColorSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    ColorSet& operator|=(const ColorSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }
    friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }

    // Complement within the universe.
    ColorSet complement() const {
        ColorSet r(universe_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        int tail = universe_ & 63;
        if (!r.words_.empty() && tail) r.words_.back() &= (uint64_t{1} << tail) - 1;
        return r;
    }

    bool operator==(const ColorSet& o) const = default;
    bool operator<(const ColorSet& o) const {
        if (universe_ != o.universe_) return universe_ < o.universe_;
        return words_ < o.words_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = 0; i < universe_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    std::string to_string(const MixedGraph* names = nullptr) const;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

  private:
    int universe_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace mgh
