#include "doctest.h"

#include <random>

#include "mzvlab/harmonic.hpp"
#include "mzvlab/index_algebra.hpp"

using namespace mzvlab;

TEST_CASE("admissibility") {
    CHECK(admissible(Index{2, 1}));
    CHECK(!admissible(Index{1, 2}));
    CHECK(admissible(Index{}));
}

TEST_CASE("hoffman dual examples") {
    CHECK(hoffman_dual(Index{1, 1, 2, 1}) == Index{3, 2});
    CHECK(hoffman_dual(Index{1, 2, 1, 1}) == Index{2, 3});
    for (int m = 1; m <= 6; ++m)
        CHECK(hoffman_dual(Index{m}) == repeat(1, m));
    CHECK_THROWS_AS(hoffman_dual(Index{}), domain_error);
}

TEST_CASE("hoffman dual is a weight-preserving involution, weight <= 10") {
    for (int w = 1; w <= 10; ++w) {
        for (const Index& k : all_indices_of_weight(w)) {
            const Index d = hoffman_dual(k);
            CHECK(d.weight() == w);
            CHECK(hoffman_dual(d) == k);
        }
    }
}

TEST_CASE("star expansion") {
    FormalIndexSum s = star_expand(Index{2, 1});
    FormalIndexSum expect;
    expect.add(Index{2, 1}, 1);
    expect.add(Index{3}, 1);
    CHECK(s == expect);

    CHECK(star_expand(Index{1}) == FormalIndexSum::single(Index{1}));

    FormalIndexSum s3 = star_expand(Index{2, 1, 1});
    FormalIndexSum expect3;
    expect3.add(Index{2, 1, 1}, 1);
    expect3.add(Index{3, 1}, 1);
    expect3.add(Index{2, 2}, 1);
    expect3.add(Index{4}, 1);
    CHECK(s3 == expect3);
}

TEST_CASE("star expansion term counts, exhaustive weight <= 10") {
    for (int w = 1; w <= 10; ++w) {
        for (const Index& k : all_indices_of_weight(w)) {
            const FormalIndexSum s = star_expand(k);
            CHECK(s.size() == (1ul << (k.depth() - 1)));
            for (const auto& [term, coeff] : s.terms()) {
                CHECK(coeff == 1);
                CHECK(term.weight() == w);
            }
        }
    }
}

TEST_CASE("signed star expansion") {
    {
        FormalSignedSum s = star_expand_signed(SignedIndex{-1, -1});
        FormalSignedSum expect;
        expect.add(SignedIndex{-1, -1}, 1);
        expect.add(SignedIndex{2}, 1);  // (-)(-) merges to +
        CHECK(s == expect);
    }
    {
        FormalSignedSum s = star_expand_signed(SignedIndex{2, -1});
        FormalSignedSum expect;
        expect.add(SignedIndex{2, -1}, 1);
        expect.add(SignedIndex{-3}, 1);
        CHECK(s == expect);
    }
    CHECK(star_expand_signed(SignedIndex{-2}) ==
          FormalSignedSum::single(SignedIndex{-2}));
}

TEST_CASE("stuffle base cases and small products") {
    const Index k{3, 1};
    CHECK(stuffle(Index{}, k) == FormalIndexSum::single(k));
    CHECK(stuffle(k, Index{}) == FormalIndexSum::single(k));

    FormalIndexSum s11 = stuffle(Index{1}, Index{1});
    FormalIndexSum expect11;
    expect11.add(Index{1, 1}, 2);
    expect11.add(Index{2}, 1);
    CHECK(s11 == expect11);

    FormalIndexSum s21 = stuffle(Index{2}, Index{1});
    FormalIndexSum expect21;
    expect21.add(Index{2, 1}, 1);
    expect21.add(Index{1, 2}, 1);
    expect21.add(Index{3}, 1);
    CHECK(s21 == expect21);
}

namespace {

std::vector<Index> random_indices(int count, int max_weight, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Index> out;
    while (static_cast<int>(out.size()) < count) {
        int w = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_weight));
        auto all = all_indices_of_weight(w);
        out.push_back(all[rng() % all.size()]);
    }
    return out;
}

}  // namespace

TEST_CASE("stuffle is commutative and associative") {
    auto pool = random_indices(12, 6, 20240811u);
    for (size_t i = 0; i + 2 < pool.size(); i += 3) {
        const Index &a = pool[i], &b = pool[i + 1], &c = pool[i + 2];
        CHECK(stuffle(a, b) == stuffle(b, a));
        const FormalIndexSum left = stuffle(stuffle(a, b), FormalIndexSum::single(c));
        const FormalIndexSum right = stuffle(FormalIndexSum::single(a), stuffle(b, c));
        CHECK(left == right);
    }
}

TEST_CASE("circled product") {
    CHECK(circled_product(Index{2}, Index{1}) == FormalIndexSum::single(Index{3}));
    CHECK(circled_product(Index{1}, Index{1}) == FormalIndexSum::single(Index{2}));
    FormalIndexSum s = circled_product(Index{2, 1}, Index{1, 1});
    FormalIndexSum expect;
    expect.add(Index{3, 1, 1}, 2);
    expect.add(Index{3, 2}, 1);
    CHECK(s == expect);
    CHECK_THROWS_AS(circled_product(Index{}, Index{1}), domain_error);
}

TEST_CASE("index transforms") {
    CHECK(index_transform_mj({1, 1, 1}, 3) == Index{1, 2, 2});
    CHECK(index_transform_mj({1, 1, 1}, 1) == Index{1});
    CHECK(index_transform_mj({2, 0}, 2) == Index{2, 1});
    CHECK_THROWS_AS(index_transform_mj({1, 1}, 3), domain_error);

    CHECK(rev_slice_plus({1, 2, 3}, 1, 3, {1, 1, 1}) == Index{4, 3, 2});
    CHECK(rev_slice_plus({1, 2, 3}, 3, 2, {}) == Index{});
    CHECK(rev_slice_plus({1, 1}, 1, 2, {0, 2}) == Index{3, 1});
    CHECK_THROWS_AS(rev_slice_plus({1, 2}, 1, 2, {1}), domain_error);
    CHECK(rev_slice_plus1({1, 2, 3}, 2, 3) == Index{4, 3});
}

TEST_CASE("compositions") {
    CHECK(compositions(1, 2) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
    CHECK(compositions(2, 2) ==
          std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(compositions(3, 3).size() == 10);  // C(5,2)
    CHECK(compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
    for (int total = 0; total <= 5; ++total)
        for (int parts = 1; parts <= 4; ++parts)
            CHECK(compositions(total, parts).size() ==
                  static_cast<size_t>(binomial(total + parts - 1, parts - 1)));
}

TEST_CASE("c_partitions") {
    {
        auto got = c_partitions(2);
        CHECK(got.size() == 2);
        // sum j*c_j = 2 in every tuple
        for (auto& c : got) {
            int s = 0;
            for (size_t j = 0; j < c.size(); ++j) s += static_cast<int>(j + 1) * c[j];
            CHECK(s == 2);
        }
    }
    {
        auto got = c_partitions(3);
        std::vector<std::vector<int>> expect = {{3, 0, 0}, {1, 1, 0}, {0, 0, 1}};
        for (auto& e : expect)
            CHECK(std::find(got.begin(), got.end(), e) != got.end());
        CHECK(got.size() == 3);
    }
    const int partition_counts[] = {1, 2, 3, 5, 7, 11, 15, 22};  // p(1..8)
    for (int p = 1; p <= 8; ++p)
        CHECK(c_partitions(p).size() == static_cast<size_t>(partition_counts[p - 1]));
}

TEST_CASE("star expansion matches exact star sums, n <= 30, weight <= 6") {
    for (int w = 1; w <= 6; ++w) {
        for (const Index& k : all_indices_of_weight(w)) {
            const FormalIndexSum exp = star_expand(k);
            for (int n : {1, 2, 3, 7, 15, 30}) {
                Rational lhs = mhss(n, k);
                Rational rhs = 0;
                for (const auto& [term, coeff] : exp.terms())
                    rhs += coeff * mhs(n, term);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("signed convergence predicate") {
    CHECK(convergent(SignedIndex{-1}));
    CHECK(!convergent(SignedIndex{1}));
    CHECK(convergent(SignedIndex{2}));
    CHECK(!convergent(SignedIndex{-1, 1}));
    CHECK(!convergent(SignedIndex{-1, -1}));
    CHECK(convergent(SignedIndex{-1, 2}));
    CHECK(convergent(SignedIndex{2, -1}));
    CHECK(convergent(SignedIndex{-2, 3, -1, 4}));
    CHECK(!convergent(SignedIndex{1, 2}));
}
