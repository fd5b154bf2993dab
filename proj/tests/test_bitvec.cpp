#include <doctest.h>

#include "rsauto/bitvec.hpp"
#include "rsauto/rng.hpp"

using namespace rsauto;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.below(2)) m.row(r).set(c, true);
    return m;
}

}  // namespace

TEST_CASE("bit accessors, xor, count, dot") {
    BitVec v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.count() == 3);
    CHECK(v.get(64));
    CHECK_FALSE(v.get(63));
    CHECK(v.first_set() == 0);
    BitVec w(130);
    w.set(64, true);
    CHECK(v.dot(w));
    w.set(129, true);
    CHECK_FALSE(v.dot(w));
    v ^= w;
    CHECK(v.count() == 1);
    CHECK(v.first_set() == 0);
}

TEST_CASE("rank and rref of a known matrix") {
    // rows: 110, 011, 101 -> rank 2 (third row is the sum)
    BitMatrix m(3, 3);
    m.row(0).set(0, true);
    m.row(0).set(1, true);
    m.row(1).set(1, true);
    m.row(1).set(2, true);
    m.row(2).set(0, true);
    m.row(2).set(2, true);
    CHECK(m.rank() == 2);
    CHECK(m.rref().rows() == 2);
}

TEST_CASE("rref is invariant under row operations") {
    SplitMix64 rng(11);
    BitMatrix m = random_matrix(8, 20, rng);
    BitMatrix shuffled = m;
    shuffled.row(0) ^= shuffled.row(3);
    shuffled.row(5) ^= shuffled.row(1);
    std::swap(shuffled.row(2), shuffled.row(6));
    CHECK(m.rref() == shuffled.rref());
    // appending a row from the span changes nothing
    BitVec extra = m.row(0);
    extra ^= m.row(4);
    shuffled.append_row(extra);
    CHECK(m.rref() == shuffled.rref());
}

TEST_CASE("nullspace vectors satisfy M x = 0 and have the right count") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix m = random_matrix(6 + rng.below(5), 16, rng);
        const auto basis = m.nullspace();
        CHECK(basis.size() == m.cols() - m.rank());
        for (const auto& x : basis) {
            for (std::size_t r = 0; r < m.rows(); ++r) CHECK_FALSE(m.row(r).dot(x));
            CHECK(x.any());
        }
    }
}
