#pragma once

#include <string>
#include <vector>

namespace knotcv {

// One run of a single generator: gen 0 is a, gen 1 is b; exp is nonzero.
struct Syllable {
    int gen = 0;
    long exp = 0;
    bool operator==(const Syllable&) const = default;
};

// Freely reduced word in the rank-2 free group.
// Flat letter form: +1 = a, -1 = a^-1, +2 = b, -2 = b^-1.
class GroupWord {
public:
    GroupWord() = default;

    // Reduces as it builds; accepts any raw syllable or letter stream.
    static GroupWord from_syllables(const std::vector<Syllable>& raw);
    static GroupWord from_letters(const std::vector<int>& letters);
    // Syntax: letters a b A B (uppercase = inverse), optional ^n or ^-n,
    // whitespace ignored.
    static GroupWord parse(const std::string& text);

    const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
    std::vector<int> letters() const;
    bool empty() const noexcept { return syllables_.empty(); }
    std::size_t length() const noexcept;  // letter count

    GroupWord inverse() const;
    GroupWord operator*(const GroupWord& o) const;
    bool operator==(const GroupWord&) const = default;

    std::string str() const;

private:
    std::vector<Syllable> syllables_;
};

// Free reduction of a raw letter stream.
GroupWord reduce_word(const std::vector<int>& letters);

// Internal canonical representative used as the trace-cache key: cyclically
// reduce, then take the minimum over all rotations of w and of w^-1 under
// the key (inverse-letter count, lexicographic order). Minimizing inverse
// count first is what makes the reduction terminate: the canonical form of
// a positive word never reintroduces inverse letters.
std::vector<int> canonical_cyclic(const std::vector<int>& letters);

}  // namespace knotcv
