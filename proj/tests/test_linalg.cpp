#include <random>

#include "doctest.h"
#include "genstab/linalg.hpp"

using namespace genstab;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const FieldDescriptor& f, int rows, int cols) {
    auto elems = all_elements(f);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = elems[pick(rng)];
    return m;
}

bool equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool is_zero_matrix(const Matrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

// Number of x in GF(q)^n with m x = 0, by enumeration.
long brute_kernel_size(const Matrix& m, const FieldDescriptor& f) {
    auto elems = all_elements(f);
    auto n = m.cols();
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    long count = 0;
    while (true) {
        Vector x(n);
        for (Eigen::Index i = 0; i < n; ++i) x(i) = elems[idx[static_cast<std::size_t>(i)]];
        if (is_zero_matrix(Matrix(m * x))) ++count;
        Eigen::Index i = 0;
        while (i < n && ++idx[static_cast<std::size_t>(i)] == elems.size()) idx[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return count;
}

Matrix unit_rows(const std::vector<std::vector<int>>& rows, int n) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m(static_cast<Eigen::Index>(i), j) = FieldElement(rows[i][static_cast<std::size_t>(j)]);
    return m;
}

}  // namespace

TEST_CASE("rref of the identity is the identity") {
    auto id = identity(4, FieldDescriptor::rational());
    auto r = rref(id);
    CHECK(equal(r.reduced, id));
    CHECK(r.rank() == 4);
}

TEST_CASE("dependent rows collapse in a subspace") {
    auto s = FieldSubspace::from_rows(unit_rows({{0, 1}, {0, 2}}, 2));
    CHECK(s.dim() == 1);
    CHECK(equal(s.rows(), unit_rows({{0, 1}}, 2)));
}

TEST_CASE("rref is idempotent on random GF(3) matrices") {
    std::mt19937_64 rng(7);
    auto f = FieldDescriptor::finite(3);
    for (int i = 0; i < 200; ++i) {
        auto m = random_matrix(rng, f, 4, 4);
        auto r = rref(m);
        CHECK(equal(rref(r.reduced).reduced, r.reduced));
    }
}

TEST_CASE("kernel dimension matches brute-force enumeration") {
    std::mt19937_64 rng(11);
    for (auto f : {FieldDescriptor::finite(2), FieldDescriptor::finite(3), FieldDescriptor::finite(2, 2)}) {
        long q = static_cast<long>(f.order());
        for (int i = 0; i < 60; ++i) {
            int rows = static_cast<int>(rng() % 4) + 1, cols = static_cast<int>(rng() % 4) + 1;
            auto m = random_matrix(rng, f, rows, cols);
            auto k = kernel(m);
            long expected = brute_kernel_size(m, f);
            long size = 1;
            for (Eigen::Index j = 0; j < k.cols(); ++j) size *= q;
            CHECK(size == expected);
            CHECK(is_zero_matrix(Matrix(m * k)));
            CHECK(rank(k) == k.cols());
            CHECK(rank(m) + k.cols() == cols);
        }
    }
}

TEST_CASE("kernel edge cases") {
    auto f = FieldDescriptor::rational();
    CHECK(kernel(identity(3, f)).cols() == 0);
    CHECK(kernel(zeros(3, 3, f)).cols() == 3);
    auto m = unit_rows({{1, 2}, {2, 4}}, 2);
    auto k = kernel(m);
    REQUIRE(k.cols() == 1);
    CHECK(is_zero_matrix(Matrix(m * k)));
}

TEST_CASE("solve_exact") {
    auto a = unit_rows({{1, 1}, {0, 1}, {1, 0}}, 2);
    auto b = unit_rows({{3}, {1}, {2}}, 1);
    auto x = solve_exact(a, b);
    CHECK(equal(x, unit_rows({{2}, {1}}, 1)));
    CHECK_THROWS_AS(solve_exact(a, unit_rows({{1}, {1}, {1}}, 1)), std::domain_error);
    CHECK_THROWS_AS(solve_exact(unit_rows({{1, 1}, {2, 2}}, 2), unit_rows({{1}, {2}}, 1)), std::domain_error);
}

TEST_CASE("subspace intersection and sum") {
    auto a = FieldSubspace::from_rows(unit_rows({{1, 0, 0}, {0, 1, 0}}, 3));
    auto b = FieldSubspace::from_rows(unit_rows({{0, 1, 0}, {0, 0, 1}}, 3));
    CHECK(subspace_intersect(a, b) == FieldSubspace::from_rows(unit_rows({{0, 1, 0}}, 3)));
    CHECK(subspace_intersect(a, a) == a);
    CHECK(subspace_sum(a, b).dim() == 3);
    CHECK_THROWS_AS(subspace_sum(a, FieldSubspace(4)), std::invalid_argument);
}

TEST_CASE("modular law on random subspaces") {
    std::mt19937_64 rng(13);
    for (auto f : {FieldDescriptor::finite(2), FieldDescriptor::finite(5), FieldDescriptor::finite(3, 2)}) {
        for (int i = 0; i < 100; ++i) {
            int n = 6;
            auto a = FieldSubspace::from_rows(random_matrix(rng, f, static_cast<int>(rng() % 5) + 1, n));
            auto b = FieldSubspace::from_rows(random_matrix(rng, f, static_cast<int>(rng() % 5) + 1, n));
            auto s = subspace_sum(a, b), t = subspace_intersect(a, b);
            CHECK(s.dim() + t.dim() == a.dim() + b.dim());
            CHECK(a.contains(t));
            CHECK(b.contains(t));
            CHECK(s.contains(a));
            CHECK(s.contains(b));
        }
    }
}

TEST_CASE("subspace equality is basis independent") {
    std::mt19937_64 rng(17);
    auto f = FieldDescriptor::finite(7);
    for (int i = 0; i < 50; ++i) {
        auto m = random_matrix(rng, f, 3, 5);
        Matrix p;
        do p = random_matrix(rng, f, 3, 3);
        while (rank(p) != 3);
        CHECK(FieldSubspace::from_rows(m) == FieldSubspace::from_rows(Matrix(p * m)));
        CHECK(FieldSubspace::from_columns(m.transpose()) == FieldSubspace::from_rows(m));
    }
}
