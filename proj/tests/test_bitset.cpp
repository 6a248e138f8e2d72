#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gnorm/bitset.hpp"

using gnorm::Bitset;

TEST_CASE("construction and membership") {
    Bitset b(70);
    CHECK(b.universe() == 70);
    CHECK(b.count() == 0);
    CHECK(b.none());
    b.set(0);
    b.set(63);
    b.set(64);
    b.set(69);
    CHECK(b.count() == 4);
    CHECK(b.test(63));
    CHECK(b.test(64));
    CHECK_FALSE(b.test(1));
    b.reset(63);
    CHECK_FALSE(b.test(63));
    CHECK(b.any());
    b.clear();
    CHECK(b.none());

    CHECK_THROWS_AS(b.test(70), std::out_of_range);
    CHECK_THROWS_AS(b.set(-1), std::out_of_range);
    CHECK_THROWS_AS(Bitset(-1), std::invalid_argument);
}

TEST_CASE("of, full and members") {
    auto b = Bitset::of(10, {7, 2, 5});
    CHECK(b.members() == std::vector<int>{2, 5, 7});
    CHECK_THROWS_AS(Bitset::of(3, {3}), std::out_of_range);

    auto f = Bitset::full(66);
    CHECK(f.count() == 66);
    CHECK(f.complement_set().none());

    Bitset zero(0);
    CHECK(zero.count() == 0);
    CHECK(zero.first() == -1);
    CHECK(Bitset::full(0) == zero);
}

TEST_CASE("iteration crosses word boundaries") {
    auto b = Bitset::of(130, {0, 63, 64, 127, 128, 129});
    std::vector<int> seen;
    for (int v = b.first(); v >= 0; v = b.next(v)) seen.push_back(v);
    CHECK(seen == std::vector<int>{0, 63, 64, 127, 128, 129});
    CHECK(b.next(129) == -1);
    CHECK(b.next(0) == 63);
}

TEST_CASE("set algebra") {
    auto a = Bitset::of(8, {0, 1, 4});
    auto b = Bitset::of(8, {1, 4, 6});
    CHECK((a & b) == Bitset::of(8, {1, 4}));
    CHECK((a | b) == Bitset::of(8, {0, 1, 4, 6}));
    CHECK(a.and_not(b) == Bitset::of(8, {0}));
    CHECK(a.intersects(b));
    CHECK_FALSE(Bitset::of(8, {0}).intersects(Bitset::of(8, {7})));
    CHECK(Bitset::of(8, {1, 4}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(a.complement_set() == Bitset::of(8, {2, 3, 5, 6, 7}));

    CHECK_THROWS_AS((void)a.intersects(Bitset(9)), std::invalid_argument);
    CHECK_THROWS_AS((void)(a & Bitset(9)), std::invalid_argument);
}

TEST_CASE("value order sorts by numeric weight") {
    auto lo = Bitset::of(70, {0, 1});  // weight 3
    auto hi = Bitset::of(70, {2});     // weight 4
    auto top = Bitset::of(70, {69});
    CHECK(Bitset::value_less(lo, hi));
    CHECK_FALSE(Bitset::value_less(hi, lo));
    CHECK_FALSE(Bitset::value_less(lo, lo));
    CHECK(Bitset::value_less(hi, top));

    std::vector<Bitset> fam{top, hi, lo};
    std::sort(fam.begin(), fam.end(), Bitset::value_less);
    CHECK(fam == std::vector<Bitset>{lo, hi, top});
}
