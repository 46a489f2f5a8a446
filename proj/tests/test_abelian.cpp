#include "seifert/abelian.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace seifert;
using oracles::cls;
using oracles::signature;

namespace {
const FuchsianSignature sig237 = signature(0, {2, 3, 7});
}

TEST_CASE("class normal form") {
    CHECK(class_normal_form(cls(sig237, {1, -1, -1, -1})) == cls(sig237, {-2, 1, 2, 6}));
    CHECK(class_normal_form(cls(sig237, {0, 0, 0, 0})) == cls(sig237, {0, 0, 0, 0}));
    CHECK(class_normal_form(cls(sig237, {0, 2, 0, 0})) == cls(sig237, {1, 0, 0, 0}));

    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        const CohomologyClass v =
            cls(sig237, {coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
        const CohomologyClass nf = class_normal_form(v);
        CHECK(nf.is_normal_form());
        CHECK(class_normal_form(nf) == nf);
        CHECK(class_equal(v, nf));
    }
}

TEST_CASE("class equality") {
    CHECK(class_equal(cls(sig237, {-1, 1, 1, 1}), cls(sig237, {-1, 1, 1, 1})));
    CHECK_FALSE(class_equal(cls(sig237, {-1, 1, 1, 1}), cls(sig237, {-2, 1, 2, 6})));
    CHECK(class_equal(cls(sig237, {1, -1, -1, -1}), cls(sig237, {-2, 1, 2, 6})));
    CHECK_THROWS_AS(class_equal(cls(sig237, {0, 0, 0, 0}), cls(signature(0, {2, 3, 5}), {0, 0, 0, 0})),
                    SignatureMismatch);
}

TEST_CASE("class negation") {
    CHECK(class_negate(cls(sig237, {-1, 1, 1, 1})) == cls(sig237, {-2, 1, 2, 6}));
    CHECK(class_negate(cls(sig237, {0, 0, 0, 0})) == cls(sig237, {0, 0, 0, 0}));

    std::mt19937 rng(37);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const CohomologyClass v =
            class_normal_form(cls(sig237, {coeff(rng), coeff(rng), coeff(rng), coeff(rng)}));
        CHECK(class_negate(class_negate(v)) == v);
    }
}

TEST_CASE("smith normal form on frozen examples") {
    const IntegerMatrix id3 = IntegerMatrix::identity(3);
    CHECK(smith_normal_form(id3).s == id3);

    IntegerMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    const SmithDecomposition snf = smith_normal_form(m);
    CHECK(snf.s.at(0, 0) == 1);
    CHECK(snf.s.at(1, 1) == 6);

    // relation matrix of [2,3,7]: diagonal (1,1,1), cokernel of rank 1
    const SmithDecomposition rel = smith_normal_form(relation_matrix(sig237));
    CHECK(rel.s.at(0, 0) == 1);
    CHECK(rel.s.at(1, 1) == 1);
    CHECK(rel.s.at(2, 2) == 1);
    CHECK(rel.s.cols() - rel.s.rows() == 1);
}

TEST_CASE("smith normal form postconditions on random matrices") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> dim(1, 5), entry(-20, 20);
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        IntegerMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = entry(rng);

        const SmithDecomposition snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.s);
        const Integer du = oracles::determinant(snf.u);
        const Integer dv = oracles::determinant(snf.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j)
                    CHECK(snf.s.at(i, j) == 0);
        const std::size_t dim_min = std::min(rows, cols);
        for (std::size_t i = 0; i + 1 < dim_min; ++i) {
            const Integer &d0 = snf.s.at(i, i), &d1 = snf.s.at(i + 1, i + 1);
            CHECK(d0 >= 0);
            if (d0 == 0)
                CHECK(d1 == 0);
            else
                CHECK(d1 % d0 == 0);
        }
    }
}

TEST_CASE("membership in 2G on the worked classes") {
    // difference of the two Brieskorn lift classes
    const CohomologyClass diff = cls(sig237, {1, 0, -1, -5});
    CHECK(is_in_double(diff));
    CHECK(oracles::member_bounded_search(diff, 10));

    CHECK(is_in_double(cls(sig237, {0, 0, 0, 0})));

    // an even alpha forces an even coefficient
    CHECK_FALSE(is_in_double(cls(sig237, {0, 1, 0, 0})));
    CHECK_FALSE(oracles::member_parity_form(cls(sig237, {0, 1, 0, 0})));
}

TEST_CASE("ext2 equivalence on the worked classes") {
    CHECK(ext2_equivalent(cls(sig237, {-1, 1, 1, 1}), cls(sig237, {-2, 1, 2, 6})));
    CHECK(ext2_equivalent(cls(sig237, {-1, 1, 1, 1}), cls(sig237, {-1, 1, 1, 1})));
    CHECK_FALSE(ext2_equivalent(cls(sig237, {-1, 1, 1, 1}), cls(sig237, {-1, 0, 1, 1})));
    CHECK_THROWS_AS(
        ext2_equivalent(cls(sig237, {0, 0, 0, 0}), cls(signature(0, {2, 3, 5}), {0, 0, 0, 0})),
        SignatureMismatch);
}

TEST_CASE("ext2 equivalence is an equivalence relation") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> coeff(-4, 4);
    const std::vector<FuchsianSignature> sigs = {sig237, signature(0, {3, 5, 7}),
                                                 signature(1, {4, 6})};
    for (const FuchsianSignature& sig : sigs) {
        const std::size_t n = sig.branch_indices.size();
        auto random_class = [&] {
            std::vector<long long> c;
            for (std::size_t i = 0; i <= n; ++i)
                c.push_back(coeff(rng));
            return cls(sig, c);
        };
        for (int trial = 0; trial < 60; ++trial) {
            const CohomologyClass a = random_class(), b = random_class(), c = random_class();
            CHECK(ext2_equivalent(a, a));
            CHECK(ext2_equivalent(a, b) == ext2_equivalent(b, a));
            if (ext2_equivalent(a, b) && ext2_equivalent(b, c))
                CHECK(ext2_equivalent(a, c));
        }
    }
}

TEST_CASE("doubling any class lands in 2G") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> coeff(-10, 10);
    for (int trial = 0; trial < 200; ++trial) {
        CohomologyClass v = cls(sig237, {coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
        for (Integer& c : v.coeffs)
            c *= 2;
        CHECK(is_in_double(v));
    }
}

TEST_CASE("membership agrees with both oracles on a small exhaustive slice") {
    // acceptance criterion 4 runs the full n <= 3, alpha <= 8 sweep
    for (long long a1 = 2; a1 <= 5; ++a1)
        for (long long a2 = a1; a2 <= 5; ++a2) {
            const FuchsianSignature sig = signature(0, {a1, a2});
            for (long long c0 = -3; c0 <= 3; ++c0)
                for (long long c1 = 0; c1 < a1; ++c1)
                    for (long long c2 = 0; c2 < a2; ++c2) {
                        const CohomologyClass v = cls(sig, {c0, c1, c2});
                        const bool got = is_in_double(v);
                        CHECK(got == oracles::member_bounded_search(v, 6));
                        CHECK(got == oracles::member_parity_form(v));
                    }
        }
}
