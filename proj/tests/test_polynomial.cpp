#include <catch2/catch_amalgamated.hpp>

#include "conjcount/polynomial.hpp"

using namespace conjcount;

TEST_CASE("basic arithmetic and zero-term invariant") {
    auto x = SparsePolynomial::variable(2, 0);
    auto y = SparsePolynomial::variable(2, 1);
    auto p = x + y;
    auto q = p - x - y;
    CHECK(q.is_zero());
    CHECK(q.term_count() == 0);
    CHECK((p * p).total_degree() == 2);
    CHECK_THROWS_AS(x + SparsePolynomial::variable(3, 0), std::invalid_argument);
}

TEST_CASE("eval and compose") {
    auto x = SparsePolynomial::variable(1, 0);
    auto p = x.pow(2) + SparsePolynomial::constant(1, Rat(2)); // x^2 + 2
    CHECK(p.eval({Rat(3)}) == Rat(11));
    auto q = p.compose({x + SparsePolynomial::constant(1, Rat(1))}); // (x+1)^2 + 2
    CHECK(q.eval({Rat(2)}) == Rat(11));
}

TEST_CASE("derivative") {
    auto x = SparsePolynomial::variable(2, 0);
    auto y = SparsePolynomial::variable(2, 1);
    auto p = x.pow(3) * y + x * y;
    auto px = p.derivative(0);
    CHECK(px == SparsePolynomial::constant(2, Rat(3)) * x.pow(2) * y + y);
}

TEST_CASE("exact division") {
    auto x = SparsePolynomial::variable(2, 0);
    auto y = SparsePolynomial::variable(2, 1);
    auto num = x.pow(2) - y.pow(2);
    auto quot = num.divide_exact(x - y);
    CHECK(quot == x + y);
    CHECK_THROWS_AS((x.pow(2) + y).divide_exact(x - y), std::runtime_error);
}

TEST_CASE("symmetry check and variable swap") {
    auto x = SparsePolynomial::variable(2, 0);
    auto y = SparsePolynomial::variable(2, 1);
    CHECK((x * y + x + y).is_symmetric());
    CHECK(!(x * y + x).is_symmetric());
    CHECK((x - y).swap_vars(0, 1) == y - x);
}

TEST_CASE("to_string format") {
    auto x = SparsePolynomial::variable(2, 0);
    auto y = SparsePolynomial::variable(2, 1);
    CHECK((x.pow(2) * y + x * y.pow(2)).to_string() == "T0^2*T1 + T0*T1^2");
    CHECK((x - y).to_string() == "T0 - T1");
    CHECK(SparsePolynomial(2).to_string() == "0");
    CHECK((SparsePolynomial::constant(1, Rat(1, 2)) * SparsePolynomial::variable(1, 0)).to_string() ==
          "1/2*T0");
}

TEST_CASE("widen and restrict_prefix") {
    auto x = SparsePolynomial::variable(2, 0);
    auto y = SparsePolynomial::variable(2, 1);
    auto p = x * y + x;
    auto w = p.widen(4);
    CHECK(w.arity() == 4);
    CHECK(w.restrict_prefix(2) == p);
    // restricting kills terms that use the dropped variable
    CHECK(p.restrict_prefix(1) == SparsePolynomial::variable(1, 0));
}
