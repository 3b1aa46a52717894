#include <catch_amalgamated.hpp>

#include <set>

#include <dtc/algebra.hpp>
#include <dtc/rng.hpp>
#include <dtc/search.hpp>

using namespace dtc;

namespace {

FMatrix from_rows(FieldSpec spec, std::vector<std::vector<Felt>> rows) {
    FMatrix m(spec, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

ToeplitzGen random_gen(FieldSpec spec, std::size_t n, std::uint64_t seed, std::uint64_t instance) {
    std::vector<Felt> digits(2 * n - 1);
    for (std::size_t j = 0; j < digits.size(); ++j)
        digits[j] = Felt(stream_mod(seed, instance * digits.size() + j, spec.q()));
    return detail::gen_from_digits(spec, n, digits);
}

} // namespace

TEST_CASE("toeplitz expansion examples") {
    FieldSpec f4 = FieldSpec::make(4);
    ToeplitzGen g1(f4, 2, 2, {1}, {1});
    CHECK(toeplitz_matrix(g1) == from_rows(f4, {{2, 1}, {1, 2}}));

    FieldSpec f7 = FieldSpec::make(7);
    CHECK(toeplitz_matrix(ToeplitzGen(f7, 1, 5, {}, {})) == from_rows(f7, {{5}}));

    FieldSpec f2 = FieldSpec::make(2);
    ToeplitzGen g3(f2, 3, 1, {0, 1}, {1, 0});
    CHECK(toeplitz_matrix(g3) == from_rows(f2, {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
}

TEST_CASE("reversal permutation") {
    FieldSpec f2 = FieldSpec::make(2);
    CHECK(reversal_permutation(f2, 3) == from_rows(f2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK(reversal_permutation(f2, 1) == from_rows(f2, {{1}}));
    FieldSpec f5 = FieldSpec::make(5);
    CHECK(reversal_permutation(f5, 2) == from_rows(f5, {{0, 1}, {1, 0}}));
    for (std::size_t n : {1, 2, 5, 8}) {
        FMatrix q = reversal_permutation(f5, n);
        CHECK(mat_mul(q, q) == FMatrix::identity(f5, n));
    }
}

TEST_CASE("matrix operations") {
    FieldSpec f4 = FieldSpec::make(4);
    FMatrix sym = from_rows(f4, {{2, 1}, {1, 2}});
    CHECK(transpose(sym) == sym);

    FieldSpec f2 = FieldSpec::make(2);
    FMatrix q3 = reversal_permutation(f2, 3);
    CHECK(mat_mul(q3, q3) == FMatrix::identity(f2, 3));

    FieldSpec f5 = FieldSpec::make(5);
    CHECK(mat_negate(FMatrix::identity(f5, 2)) == from_rows(f5, {{4, 0}, {0, 4}}));

    CHECK_THROWS_AS(mat_mul(q3, FMatrix::identity(f2, 2)), error);
    CHECK_THROWS_AS(mat_add(q3, FMatrix::identity(f2, 2)), error);
}

TEST_CASE("circulant and negacirculant predicates") {
    FieldSpec f3 = FieldSpec::make(3);
    CHECK(is_circulant(ToeplitzGen(f3, 3, 1, {1, 2}, {2, 1})));
    CHECK(is_negacirculant(ToeplitzGen(f3, 3, 1, {1, 2}, {1, 2})));
    CHECK_FALSE(is_negacirculant(ToeplitzGen(f3, 3, 1, {1, 2}, {2, 1})));

    FieldSpec f2 = FieldSpec::make(2);
    ToeplitzGen g(f2, 2, 1, {1}, {1});
    CHECK(is_circulant(g));
    CHECK(is_negacirculant(g)); // characteristic 2: the predicates coincide
}

TEST_CASE("AQ = QA^T for every Toeplitz matrix") {
    // exhaustive small cases
    for (unsigned q : {2u, 3u}) {
        FieldSpec spec = FieldSpec::make(q);
        for (std::size_t n = 1; n <= 3; ++n) {
            FMatrix Q = reversal_permutation(spec, n);
            for_each_tuple(spec, n, Reduction::none, Shard{}, [&](std::uint64_t, const std::vector<Felt>& d) {
                FMatrix A = toeplitz_matrix(detail::gen_from_digits(spec, n, d));
                CHECK(mat_mul(A, Q) == mat_mul(Q, transpose(A)));
            });
        }
    }
    // randomized large cases
    for (unsigned q : {4u, 5u, 7u}) {
        FieldSpec spec = FieldSpec::make(q);
        for (std::uint64_t i = 0; i < 50; ++i) {
            std::size_t n = 1 + stream_mod(q * 1000, i, 16);
            ToeplitzGen g = random_gen(spec, n, q, i);
            FMatrix A = toeplitz_matrix(g);
            FMatrix Q = reversal_permutation(spec, n);
            CHECK(mat_mul(A, Q) == mat_mul(Q, transpose(A)));
        }
    }
}

TEST_CASE("transpose swaps the generator tails") {
    FieldSpec f5 = FieldSpec::make(5);
    for (std::uint64_t i = 0; i < 20; ++i) {
        ToeplitzGen g = random_gen(f5, 5, 7, i);
        ToeplitzGen swapped(f5, g.n, g.t, g.b, g.a);
        CHECK(transpose(toeplitz_matrix(g)) == toeplitz_matrix(swapped));
    }
}

TEST_CASE("toeplitz_matrix is injective") {
    FieldSpec f3 = FieldSpec::make(3);
    std::set<std::vector<Felt>> seen;
    for_each_tuple(f3, 3, Reduction::none, Shard{}, [&](std::uint64_t, const std::vector<Felt>& d) {
        seen.insert(toeplitz_matrix(detail::gen_from_digits(f3, 3, d)).a);
    });
    CHECK(seen.size() == 3u * 3 * 3 * 3 * 3);
}

TEST_CASE("generator text form") {
    FieldSpec f4 = FieldSpec::make(4);
    ToeplitzGen g(f4, 3, 2, {1, 0}, {3, 1});
    CHECK(to_string(g) == "q=4 n=3 t=w a=1,0 b=w^2,1");
    CHECK(parse_toeplitz_gen(to_string(g)) == g);

    ToeplitzGen one(FieldSpec::make(7), 1, 5, {}, {});
    CHECK(parse_toeplitz_gen(to_string(one)) == one);

    CHECK_THROWS_AS(parse_toeplitz_gen("q=4 n=3 t=w"), error);
    CHECK_THROWS_AS(parse_toeplitz_gen("q=4 n=3 t=w a=1,0 b=9,9"), error);

    CHECK(to_string(toeplitz_matrix(g)) == "w,1,0\nw^2,w,1\n1,w^2,w");
}
