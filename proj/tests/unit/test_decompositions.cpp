#include <doctest.h>

#include <random>
#include <set>
#include <tuple>

#include "starramsey/decompositions.hpp"
#include "starramsey/error.hpp"

using namespace starramsey;

namespace {

std::set<Edge> as_set(const std::vector<Edge>& edges) { return {edges.begin(), edges.end()}; }

}  // namespace

TEST_CASE("one-factorization by the circle method") {
  const auto f2 = one_factorization(2);
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0] == std::vector<Edge>{Edge(0, 1)});

  const auto f4 = one_factorization(4);
  REQUIRE(f4.factors.size() == 3);
  CHECK(as_set(f4.factors[0]) == std::set<Edge>{Edge(0, 3), Edge(1, 2)});
  CHECK(as_set(f4.factors[1]) == std::set<Edge>{Edge(1, 3), Edge(0, 2)});
  CHECK(as_set(f4.factors[2]) == std::set<Edge>{Edge(2, 3), Edge(0, 1)});

  const auto f6 = one_factorization(6);
  CHECK(f6.factors.size() == 5);
  for (const auto& m : f6.factors) CHECK(m.size() == 3);
  CHECK_FALSE(check_factorization(f6));
}

TEST_CASE("Hamiltonian and two-factorizations") {
  const auto h3 = hamiltonian_decomposition(3);
  REQUIRE(h3.factors.size() == 1);
  CHECK(cycle_vertices(h3.factors[0]) == std::vector<int>{0, 1, 2});
  for (int n : {5, 7, 9, 11}) {
    const auto h = hamiltonian_decomposition(n);
    CHECK(h.factors.size() == static_cast<std::size_t>((n - 1) / 2));
    CHECK_FALSE(check_factorization(h));
    const auto two = two_factorization(n);
    CHECK(two.kind == FactorKind::TwoFactor);
    CHECK(two.factors == h.factors);
    for (const auto& c : two.factors) CHECK(c.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("order errors") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInconsistency;
  };
  CHECK(code([] { one_factorization(5); }) == ErrorCode::OddOrder);
  CHECK(code([] { one_factorization(0); }) == ErrorCode::InvalidInput);
  CHECK(code([] { hamiltonian_decomposition(6); }) == ErrorCode::EvenOrder);
  CHECK(code([] { two_factorization(8); }) == ErrorCode::EvenOrder);
  CHECK(code([] { hamiltonian_decomposition(1); }) == ErrorCode::InvalidInput);
}

TEST_CASE("path splitting") {
  const std::vector<Edge> p4 = {Edge(0, 1), Edge(1, 2), Edge(2, 3)};
  auto [a, b] = split_path_into_matchings(p4);
  CHECK(as_set(a) == std::set<Edge>{Edge(0, 1), Edge(2, 3)});
  CHECK(as_set(b) == std::set<Edge>{Edge(1, 2)});

  const std::vector<Edge> p3 = {Edge(1, 2), Edge(0, 1)};
  std::tie(a, b) = split_path_into_matchings(p3);
  CHECK(a == std::vector<Edge>{Edge(0, 1)});
  CHECK(b == std::vector<Edge>{Edge(1, 2)});

  const std::vector<Edge> p5 = {Edge(3, 1), Edge(1, 4), Edge(4, 0), Edge(0, 2)};
  std::tie(a, b) = split_path_into_matchings(p5);
  CHECK(a.size() == 2);
  CHECK(b.size() == 2);

  const std::vector<Edge> star = {Edge(0, 1), Edge(0, 2), Edge(0, 3)};
  const std::vector<Edge> cycle = {Edge(0, 1), Edge(1, 2), Edge(0, 2)};
  const std::vector<Edge> split = {Edge(0, 1), Edge(2, 3)};
  for (const auto* bad : {&star, &cycle, &split}) {
    try {
      split_path_into_matchings(*bad);
      FAIL("expected NotAPath");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotAPath);
    }
  }
}

TEST_CASE("validator rejects broken factorizations") {
  auto f = one_factorization(6);
  f.factors[0][0] = f.factors[1][0];
  CHECK(check_factorization(f));

  auto h = hamiltonian_decomposition(7);
  h.factors.pop_back();
  CHECK(check_factorization(h));

  // Two triangles on six vertices form a 2-factor but not a Hamiltonian cycle.
  Factorization tri{6, FactorKind::Hamiltonian,
                    {{Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)}}};
  CHECK(check_factorization(tri));
}

TEST_CASE("factorizations are deterministic and valid on random orders") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 60);
    const auto first = n % 2 == 0 ? one_factorization(n) : hamiltonian_decomposition(n);
    const auto second = n % 2 == 0 ? one_factorization(n) : hamiltonian_decomposition(n);
    CHECK(first == second);
    CHECK_FALSE(check_factorization(first));
  }
}
