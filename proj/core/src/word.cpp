#include "knotcv/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "knotcv/error.hpp"

namespace knotcv {

namespace {

void push_reduced(std::vector<Syllable>& acc, int gen, long exp) {
    if (exp == 0) return;
    if (!acc.empty() && acc.back().gen == gen) {
        acc.back().exp += exp;
        if (acc.back().exp == 0) acc.pop_back();
        return;
    }
    acc.push_back({gen, exp});
}

}  // namespace

GroupWord GroupWord::from_syllables(const std::vector<Syllable>& raw) {
    GroupWord w;
    std::vector<Syllable> acc;
    for (const Syllable& s : raw) {
        if (s.gen != 0 && s.gen != 1) throw_input("word: generator index out of range");
        push_reduced(acc, s.gen, s.exp);
    }
    w.syllables_ = std::move(acc);
    return w;
}

GroupWord GroupWord::from_letters(const std::vector<int>& letters) {
    std::vector<Syllable> raw;
    for (int l : letters) {
        if (l == 0 || l > 2 || l < -2) throw_input("word: unknown letter code");
        raw.push_back({std::abs(l) - 1, l > 0 ? 1L : -1L});
    }
    return from_syllables(raw);
}

GroupWord GroupWord::parse(const std::string& text) {
    std::vector<Syllable> raw;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        int gen;
        long sign;
        switch (c) {
            case 'a': gen = 0; sign = 1; break;
            case 'A': gen = 0; sign = -1; break;
            case 'b': gen = 1; sign = 1; break;
            case 'B': gen = 1; sign = -1; break;
            default:
                throw_input(std::string("word parse: unknown letter '") + c + "'");
        }
        ++i;
        long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                neg = text[i] == '-';
                ++i;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw_input("word parse: exponent digits expected");
            exp = std::stol(text.substr(start, i - start));
            if (neg) exp = -exp;
        }
        raw.push_back({gen, sign * exp});
    }
    return from_syllables(raw);
}

std::vector<int> GroupWord::letters() const {
    std::vector<int> out;
    for (const Syllable& s : syllables_) {
        int letter = (s.gen + 1) * (s.exp > 0 ? 1 : -1);
        for (long k = 0; k < std::abs(s.exp); ++k) out.push_back(letter);
    }
    return out;
}

std::size_t GroupWord::length() const noexcept {
    std::size_t n = 0;
    for (const Syllable& s : syllables_) n += static_cast<std::size_t>(std::abs(s.exp));
    return n;
}

GroupWord GroupWord::inverse() const {
    std::vector<Syllable> rev(syllables_.rbegin(), syllables_.rend());
    for (Syllable& s : rev) s.exp = -s.exp;
    GroupWord w;
    w.syllables_ = std::move(rev);
    return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    std::vector<Syllable> cat = syllables_;
    cat.insert(cat.end(), o.syllables_.begin(), o.syllables_.end());
    return from_syllables(cat);
}

std::string GroupWord::str() const {
    if (syllables_.empty()) return "1";
    std::ostringstream os;
    for (const Syllable& s : syllables_) {
        char base = s.gen == 0 ? 'a' : 'b';
        if (s.exp == 1) {
            os << base;
        } else if (s.exp == -1) {
            os << static_cast<char>(std::toupper(base));
        } else {
            os << base << '^' << s.exp;
        }
    }
    return os.str();
}

GroupWord reduce_word(const std::vector<int>& letters) {
    return GroupWord::from_letters(letters);
}

namespace {

std::vector<int> invert_letters(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

std::vector<int> free_reduce(std::vector<int> w) {
    std::vector<int> out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

int inverse_count(const std::vector<int>& w) {
    int n = 0;
    for (int l : w) n += l < 0;
    return n;
}

}  // namespace

std::vector<int> canonical_cyclic(const std::vector<int>& letters) {
    std::vector<int> w = free_reduce(letters);
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(w);
    }
    if (w.empty()) return w;

    std::vector<int> best;
    int best_inv = 0;
    bool have = false;
    for (const std::vector<int>& base : {w, invert_letters(w)}) {
        for (std::size_t r = 0; r < base.size(); ++r) {
            std::vector<int> rot(base.begin() + static_cast<long>(r), base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(r));
            int inv = inverse_count(rot);
            if (!have || inv < best_inv || (inv == best_inv && rot < best)) {
                best = std::move(rot);
                best_inv = inv;
                have = true;
            }
        }
    }
    return best;
}

}  // namespace knotcv
