#include <random>

#include "doctest.h"
#include "modisom/echelon.hpp"
#include "modisom/kernels.hpp"

using namespace modisom;

namespace {

// Independent oracle: naive Gaussian elimination rank over F_p on plain
// integer matrices.
uint32_t naive_rank(uint32_t p, std::vector<std::vector<uint32_t>> m) {
    uint32_t rank = 0;
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][col] % p == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        uint32_t inv = 1;
        for (uint32_t t = 1; t < p; ++t)
            if (m[rank][col] * t % p == 1) inv = t;
        for (auto& e : m[rank]) e = e * inv % p;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank) continue;
            uint32_t c = m[r][col] % p;
            if (c)
                for (size_t j = 0; j < cols; ++j) m[r][j] = (m[r][j] + (p - c) * m[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

FpVector vec(uint32_t p, std::initializer_list<uint32_t> vals) {
    return FpVector::from_values(p, std::vector<uint32_t>(vals));
}

std::vector<FpVector> random_vectors(uint32_t p, uint32_t dim, uint32_t count, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, p - 1);
    std::vector<FpVector> out;
    for (uint32_t i = 0; i < count; ++i) {
        FpVector v(p, dim);
        for (uint32_t j = 0; j < dim; ++j) v.set(j, dist(rng));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

TEST_CASE("echelonize matches a hand Gaussian elimination oracle") {
    // {(1,1,0),(0,1,1),(1,0,-1)} over F_3 spans a plane.
    std::vector<FpVector> vs{vec(3, {1, 1, 0}), vec(3, {0, 1, 1}), vec(3, {1, 0, 2})};
    CHECK(naive_rank(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 2}}) == 2);
    auto s = echelonize(3, 3, vs);
    CHECK(s.dim() == 2);
}

TEST_CASE("echelonize degenerate inputs") {
    CHECK(echelonize(2, 5, {}).dim() == 0);
    CHECK(echelonize(2, 5, {FpVector(2, 5)}).dim() == 0);
    CHECK(echelonize(3, 4, {FpVector(3, 4), FpVector(3, 4)}).dim() == 0);
}

TEST_CASE("echelonize is a closure operator") {
    std::mt19937 rng(12345);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int round = 0; round < 20; ++round) {
            auto vs = random_vectors(p, 12, 6, rng);
            auto s = echelonize(p, 12, vs);
            // extensive in span
            for (const auto& v : vs) CHECK(s.contains(v));
            // idempotent
            CHECK(echelonize(p, 12, s.rows()) == s);
            // monotone
            auto more = vs;
            auto extra = random_vectors(p, 12, 2, rng);
            more.insert(more.end(), extra.begin(), extra.end());
            CHECK(echelonize(p, 12, more).contains_subspace(s));
        }
    }
}

TEST_CASE("mixed dimensions or primes are rejected") {
    auto s = echelonize(2, 4, {vec(2, {1, 0, 0, 0})});
    CHECK_THROWS_AS(s.contains(vec(2, {1, 0})), dimension_mismatch);
    CHECK_THROWS_AS(s.contains(vec(3, {1, 0, 0, 0})), dimension_mismatch);
    auto t = echelonize(2, 3, {vec(2, {1, 1, 0})});
    CHECK_THROWS_AS(subspace_sum(s, t), dimension_mismatch);
    CHECK_THROWS_AS(subspace_intersection(s, t), dimension_mismatch);
}

TEST_CASE("sum and intersection basics") {
    auto a = echelonize(2, 2, {vec(2, {1, 0})});
    auto b = echelonize(2, 2, {vec(2, {0, 1})});
    SUBCASE("complementary lines in F_2^2") {
        CHECK(subspace_sum(a, b).dim() == 2);
        CHECK(subspace_intersection(a, b).dim() == 0);
    }
    SUBCASE("idempotence") {
        CHECK(subspace_sum(a, a) == a);
        CHECK(subspace_intersection(a, a) == a);
    }
}

TEST_CASE("dimension identity on random subspaces of F_2^50") {
    std::mt19937 rng(987);
    for (int round = 0; round < 25; ++round) {
        auto a = echelonize(2, 50, random_vectors(2, 50, 20, rng));
        auto b = echelonize(2, 50, random_vectors(2, 50, 20, rng));
        auto sum = subspace_sum(a, b);
        auto cap = subspace_intersection(a, b);
        CHECK(sum.dim() + cap.dim() == a.dim() + b.dim());
        for (const auto& row : cap.rows()) {
            CHECK(a.contains(row));
            CHECK(b.contains(row));
        }
        CHECK(sum.contains_subspace(a));
        CHECK(sum.contains_subspace(b));
    }
}

TEST_CASE("dimension identity over F_3") {
    std::mt19937 rng(555);
    for (int round = 0; round < 15; ++round) {
        auto a = echelonize(3, 20, random_vectors(3, 20, 8, rng));
        auto b = echelonize(3, 20, random_vectors(3, 20, 8, rng));
        CHECK(subspace_sum(a, b).dim() + subspace_intersection(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("contains agrees with exhaustive membership") {
    std::mt19937 rng(321);
    for (uint32_t p : {2u, 3u}) {
        uint32_t dim = (p == 2) ? 10 : 6;
        auto s = echelonize(p, 16, random_vectors(p, 16, dim, rng));
        REQUIRE(s.dim() <= 12);
        // enumerate all |A| = p^dim elements
        uint64_t total = 1;
        for (uint32_t i = 0; i < s.dim(); ++i) total *= p;
        uint64_t members_found = 0;
        for (uint64_t idx = 0; idx < total; ++idx) {
            FpVector x(p, 16);
            uint64_t rest = idx;
            for (const auto& row : s.rows()) {
                uint32_t digit = static_cast<uint32_t>(rest % p);
                rest /= p;
                if (digit) x.add_scaled(row, digit);
            }
            CHECK(s.contains(x));
            ++members_found;
        }
        CHECK(members_found == total);
        // and a few vectors outside
        for (int t = 0; t < 50; ++t) {
            auto v = random_vectors(p, 16, 1, rng)[0];
            CHECK(s.contains(v) == s.reduce(v).is_zero());
        }
    }
}

TEST_CASE("reduce gives canonical coset representatives") {
    std::mt19937 rng(777);
    auto s = echelonize(2, 24, random_vectors(2, 24, 10, rng));
    for (int t = 0; t < 40; ++t) {
        auto v = random_vectors(2, 24, 1, rng)[0];
        auto r = s.reduce(v);
        // v - r lies in the subspace, and r has no pivot-coordinate support
        auto diff = v;
        diff.add_scaled(r, 1); // p = 2
        CHECK(s.contains(diff));
        for (uint32_t c : s.pivots()) CHECK(r.get(c) == 0);
        // representatives are stable under further reduction
        CHECK(s.reduce(r) == r);
    }
}

TEST_CASE("nullspace vectors annihilate the matrix rows") {
    std::mt19937 rng(999);
    for (uint32_t p : {2u, 3u}) {
        auto rows = random_vectors(p, 15, 7, rng);
        auto basis = nullspace(p, 15, rows);
        auto row_space = echelonize(p, 15, rows);
        CHECK(basis.size() == 15 - row_space.dim());
        for (const auto& x : basis) {
            for (const auto& r : rows) {
                uint64_t dot = 0;
                for (uint32_t i = 0; i < 15; ++i) dot += r.get(i) * x.get(i);
                CHECK(dot % p == 0);
            }
        }
    }
}

TEST_CASE("kernels: serial and parallel agree") {
    std::mt19937 rng(2024);
    SUBCASE("insert_batch") {
        auto batch = random_vectors(2, 128, 300, rng);
        EchelonSubspace s1(2, 128), s2(2, 128);
        kernels::insert_batch(s1, batch, kernels::Mode::serial);
        kernels::insert_batch(s2, batch, kernels::Mode::parallel);
        CHECK(s1 == s2);
        CHECK(s1.dim() > 0);
    }
    SUBCASE("count_points and span_points") {
        auto basis = echelonize(3, 12, random_vectors(3, 12, 5, rng));
        std::vector<FpVector> rows = basis.rows();
        auto pred = [](const FpVector& v) { return v.get(0) == 0; };
        auto c1 = kernels::count_points(3, 12, rows, pred, kernels::Mode::serial);
        auto c2 = kernels::count_points(3, 12, rows, pred, kernels::Mode::parallel);
        CHECK(c1 == c2);
        auto map = [](const FpVector& v) {
            FpVector w = v;
            w.scale(2);
            return w;
        };
        auto s1 = kernels::span_points(3, 12, rows, map, kernels::Mode::serial);
        auto s2 = kernels::span_points(3, 12, rows, map, kernels::Mode::parallel);
        CHECK(s1 == s2);
        CHECK(s1 == basis);
    }
}
