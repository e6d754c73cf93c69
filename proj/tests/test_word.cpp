#include <doctest.h>

#include "knotcv/error.hpp"
#include "knotcv/word.hpp"

using namespace knotcv;

TEST_CASE("free reduction") {
    CHECK(reduce_word({1, 2, -2, 1}) == GroupWord::parse("a^2"));
    CHECK(reduce_word({}).empty());
    CHECK(reduce_word({1, -1}).empty());
    CHECK(reduce_word({1, 2, -2, -1}).empty());
    GroupWord w = GroupWord::parse("a b B A");
    CHECK(w.empty());
}

TEST_CASE("parse syntax") {
    GroupWord r = GroupWord::parse("BAbaBabABa");
    CHECK(r.length() == 10);
    CHECK(r.letters() == std::vector<int>{-2, -1, 2, 1, -2, 1, 2, -1, -2, 1});
    CHECK(GroupWord::parse("a^3 B^2") == GroupWord::parse("aaaBB"));
    CHECK(GroupWord::parse("a^-2") == GroupWord::parse("AA"));
    CHECK(GroupWord::parse("  ") == GroupWord());
    CHECK_THROWS_AS(GroupWord::parse("c"), Error);
    CHECK_THROWS_AS(GroupWord::parse("a^"), Error);
}

TEST_CASE("reduction is idempotent") {
    GroupWord w = GroupWord::parse("a b A B a b");
    CHECK(GroupWord::from_letters(w.letters()) == w);
}

TEST_CASE("inverse and product") {
    GroupWord w = GroupWord::parse("abA");
    CHECK(w.inverse() == GroupWord::parse("aBA"));
    CHECK((w * w.inverse()).empty());
    CHECK(w.inverse().inverse() == w);
    CHECK(GroupWord::parse("ab") * GroupWord::parse("Ba") == GroupWord::parse("a^2"));
}

TEST_CASE("string round trip") {
    GroupWord w = GroupWord::parse("BabAAbaB");
    CHECK(GroupWord::parse(w.str()) == w);
    CHECK(GroupWord().str() == "1");
}

TEST_CASE("canonical cyclic representative") {
    // Conjugates share one canonical form.
    auto c1 = canonical_cyclic({1, 2, -1});
    auto c2 = canonical_cyclic({2});
    CHECK(c1 == c2);
    // Inversion invariance of the representative.
    CHECK(canonical_cyclic({1, 2, 1, -2}) == canonical_cyclic({2, -1, -2, -1}));
    // The representative of a positive word never carries inverse letters.
    auto c3 = canonical_cyclic({2, 1});
    CHECK(c3 == std::vector<int>{1, 2});
    for (int l : canonical_cyclic({1, 1, 2, 1, 2})) CHECK(l > 0);
}
