#include <doctest.h>

#include <random>

#include "precompact/lattice.hpp"

using namespace precompact;

namespace {

Mat make_mat(std::initializer_list<std::initializer_list<Int>> rows) {
  Mat m(static_cast<Int>(rows.size()), rows.size() ? static_cast<Int>(rows.begin()->size()) : 0);
  Int i = 0;
  for (auto& row : rows) {
    Int j = 0;
    for (Int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Vec make_vec(std::initializer_list<Int> vals) {
  Vec v(static_cast<Int>(vals.size()));
  Int i = 0;
  for (Int x : vals) v[i++] = x;
  return v;
}

// Bareiss fraction-free determinant, test-side oracle for unimodularity.
Int det_oracle(Mat a) {
  const Int n = a.rows();
  REQUIRE(a.cols() == n);
  std::vector<std::vector<Wide>> m(static_cast<std::size_t>(n),
                                   std::vector<Wide>(static_cast<std::size_t>(n)));
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
  Wide prev = 1;
  Int sign = 1;
  for (Int k = 0; k < n - 1; ++k) {
    if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      Int swap = -1;
      for (Int i = k + 1; i < n; ++i)
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap)]);
      sign = -sign;
    }
    for (Int i = k + 1; i < n; ++i)
      for (Int j = k + 1; j < n; ++j) {
        Wide num = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                   m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                       m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
      }
    prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  return sign * static_cast<Int>(m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]);
}

}  // namespace

TEST_CASE("normal form of cyclic generators") {
  Vec moduli = make_vec({4});
  Mat r = lattice_normal_form(make_mat({{2}}), moduli);
  CHECK(r(0, 0) == 2);
  CHECK(lattice_contains(r, make_vec({2})));
  CHECK(!lattice_contains(r, make_vec({1})));
}

TEST_CASE("normal form is generator-order independent") {
  Vec moduli = make_vec({2, 4});
  // (1,2) - (0,2) = (1,0): both lists span the same lattice.
  Mat a = lattice_normal_form(make_mat({{1, 2}, {0, 2}}), moduli);
  Mat b = lattice_normal_form(make_mat({{0, 2}, {1, 0}, {1, 2}}), moduli);
  Mat c = lattice_normal_form(make_mat({{1, 0}, {0, 2}}), moduli);
  CHECK(mat_eq(b, c));
  CHECK(mat_eq(a, c));
  // The diagonal span is strictly smaller than the full lattice.
  Mat diag = lattice_normal_form(make_mat({{1, 1}}), moduli);
  CHECK(!mat_eq(diag, c));
  CHECK(diag(0, 0) == 1);
  CHECK(diag(0, 1) == 1);
  CHECK(diag(1, 1) == 2);
}

TEST_CASE("empty generators give the full-moduli diagonal") {
  Vec moduli = make_vec({2, 6});
  Mat r = lattice_normal_form(Mat(0, 2), moduli);
  CHECK(r(0, 0) == 2);
  CHECK(r(1, 1) == 6);
  CHECK(r(0, 1) == 0);
}

TEST_CASE("smith normal form: transforms multiply back and diagonal divides") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> dist(-6, 6);
  for (int iter = 0; iter < 200; ++iter) {
    Int m = 1 + static_cast<Int>(rng() % 4), n = 1 + static_cast<Int>(rng() % 4);
    Mat a(m, n);
    for (Int i = 0; i < m; ++i)
      for (Int j = 0; j < n; ++j) a(i, j) = dist(rng);
    SmithResult snf = smith_normal_form(a);
    CHECK(mat_eq(snf.u * a * snf.v, snf.s));
    CHECK(std::abs(det_oracle(snf.u)) == 1);
    CHECK(std::abs(det_oracle(snf.v)) == 1);
    for (Int i = 0; i + 1 < std::min(m, n); ++i) {
      CHECK(snf.s(i, i) >= 0);
      if (snf.s(i, i) != 0) CHECK(snf.s(i + 1, i + 1) % snf.s(i, i) == 0);
      if (snf.s(i, i) == 0) CHECK(snf.s(i + 1, i + 1) == 0);
    }
    for (Int i = 0; i < m; ++i)
      for (Int j = 0; j < n; ++j)
        if (i != j) CHECK(snf.s(i, j) == 0);
  }
}

TEST_CASE("congruence kernel matches residue enumeration") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    Int rows = 1 + static_cast<Int>(rng() % 2);
    Int cols = 1 + static_cast<Int>(rng() % 3);
    Int modulus = 2 + static_cast<Int>(rng() % 7);
    Mat m(rows, cols);
    for (Int i = 0; i < rows; ++i)
      for (Int j = 0; j < cols; ++j) m(i, j) = static_cast<Int>(rng() % 12) - 6;
    Mat kern = congruence_kernel(m, modulus);
    Vec moduli = Vec::Constant(cols, modulus);
    Mat lattice = lattice_normal_form(kern, moduli);

    std::vector<Int> x(static_cast<std::size_t>(cols), 0);
    while (true) {
      Vec v(cols);
      for (Int j = 0; j < cols; ++j) v[j] = x[static_cast<std::size_t>(j)];
      bool solves = true;
      for (Int i = 0; i < rows; ++i) {
        Int acc = 0;
        for (Int j = 0; j < cols; ++j) acc += m(i, j) * v[j];
        if (((acc % modulus) + modulus) % modulus != 0) solves = false;
      }
      CHECK(solves == lattice_contains(lattice, v));
      Int j = cols - 1;
      for (; j >= 0; --j) {
        if (++x[static_cast<std::size_t>(j)] < modulus) break;
        x[static_cast<std::size_t>(j)] = 0;
      }
      if (j < 0) break;
    }
  }
}

TEST_CASE("integer kernel annihilates its coefficient matrix") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    Int rows = 1 + static_cast<Int>(rng() % 2);
    Int cols = 2 + static_cast<Int>(rng() % 3);
    Mat m(rows, cols);
    for (Int i = 0; i < rows; ++i)
      for (Int j = 0; j < cols; ++j) m(i, j) = static_cast<Int>(rng() % 9) - 4;
    Mat kern = integer_kernel(m);
    for (Int r = 0; r < kern.rows(); ++r) {
      Vec prod = m * kern.row(r).transpose();
      CHECK((prod.size() == 0 || (prod.array() == 0).all()));
    }
    // Every small integer solution is a combination of the kernel rows:
    // membership over huge moduli avoids wraparound inside the probe box.
    std::vector<Int> x(static_cast<std::size_t>(cols), 0);
    const Int box = 5;
    Vec big = Vec::Constant(cols, 1000003);
    Mat lattice = lattice_normal_form(kern, big);
    while (true) {
      Vec v(cols);
      for (Int j = 0; j < cols; ++j) v[j] = x[static_cast<std::size_t>(j)] - box / 2;
      Vec prod = m * v;
      bool solves = (prod.array() == 0).all();
      if (solves) {
        Vec lifted(cols);
        for (Int j = 0; j < cols; ++j) lifted[j] = ((v[j] % 1000003) + 1000003) % 1000003;
        CHECK(lattice_contains(lattice, lifted));
      }
      Int j = cols - 1;
      for (; j >= 0; --j) {
        if (++x[static_cast<std::size_t>(j)] < box) break;
        x[static_cast<std::size_t>(j)] = 0;
      }
      if (j < 0) break;
    }
  }
}

TEST_CASE("nontrivial smith diagonal reads cyclic structure") {
  std::vector<Int> d = nontrivial_smith_diagonal(make_mat({{1, 2}, {0, 4}}));
  CHECK(d == std::vector<Int>{4});
  d = nontrivial_smith_diagonal(make_mat({{2, 0}, {0, 2}}));
  CHECK(d == std::vector<Int>{2, 2});
}
