// Copyright (c) 2026 the qclone authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qclone/diagram.hpp"
#include "qclone/diagram_algebra.hpp"
#include "qclone/random.hpp"
#include "qclone/tensor_rep.hpp"

using namespace qclone;

TEST_CASE("composition of the worked k=3 example") {
  auto [r, loops] = compose(Diagram::parse("1,3|2,6|4,5"),
                            Diagram::parse("1,2|3,5|4,6"));
  CHECK(r.to_string() == "1,2|3,6|4,5");
  CHECK(loops == 1);
}

TEST_CASE("composition of the worked k=5 example removes two loops") {
  auto [r, loops] = compose(Diagram::parse("1,4|2,8|3,5|6,7|9,10"),
                            Diagram::parse("1,2|3,5|4,7|6,9|8,10"));
  CHECK(r.to_string() == "1,2|3,5|4,8|6,7|9,10");
  CHECK(loops == 2);
}

TEST_CASE("identity is neutral for composition") {
  Diagram p = Diagram::parse("1,3|2,6|4,5");
  auto [left, l1] = compose(Diagram::identity(3), p);
  auto [right, l2] = compose(p, Diagram::identity(3));
  CHECK(left == p);
  CHECK(right == p);
  CHECK(l1 == 0);
  CHECK(l2 == 0);
}

TEST_CASE("monoid orders") {
  CHECK(enumerate_family(Family::partition_monoid(), 2).size() == 15);
  CHECK(enumerate_family(Family::partition_monoid(), 3).size() == 203);
  CHECK(enumerate_family(Family::brauer(), 3).size() == 15);
  CHECK(enumerate_family(Family::brauer(), 4).size() == 105);
  CHECK(enumerate_family(Family::uniform_block(), 1).size() == 1);
  CHECK(enumerate_family(Family::uniform_block(), 2).size() == 3);
  CHECK(enumerate_family(Family::uniform_block(), 3).size() == 16);
  CHECK(enumerate_family(Family::walled_brauer(1), 2).size() == 2);
  CHECK(enumerate_family(Family::walled_brauer(2), 4).size() == 24);
  CHECK(enumerate_family(Family::walled_brauer(3), 6).size() == 720);
}

TEST_CASE("walled Brauer wall rule") {
  // vertical pairs must cross the wall, horizontal pairs must not
  Family wb = Family::walled_brauer(1);
  CHECK(is_member(Diagram::parse("1,3|2,4"), wb));  // identity
  CHECK(is_member(Diagram::parse("1,2|3,4"), wb));  // contraction
  // cross-column pair joining opposite sides of the wall is excluded
  CHECK(!is_member(Diagram::parse("1,4|2,3"), wb));
}

TEST_CASE("permutation diagrams compose contravariantly through psi") {
  // from_permutation(sigma) has blocks {i, k+sigma(i)}
  Perm sigma{1, 2, 0};
  Diagram d = Diagram::from_permutation(sigma);
  CHECK(d.to_string() == "1,5|2,6|3,4");
  // diagram composition mirrors (sigma tau)(i) = sigma(tau(i))
  Perm tau{1, 0, 2};
  auto [st, loops] = compose(Diagram::from_permutation(sigma),
                             Diagram::from_permutation(tau));
  CHECK(loops == 0);
  CHECK(st == Diagram::from_permutation(perm_compose(sigma, tau)));
}

TEST_CASE("closure loop count gives the representation trace") {
  CHECK(Diagram::identity(3).closure_loop_count() == 3);
  CHECK(trace_rep(Diagram::identity(3), 2) == 8);
  Diagram cup = Diagram::parse("1,2|3,4");
  CHECK(cup.closure_loop_count() == 1);
  CHECK(trace_rep(cup, 3) == 3);
  for (int d : {2, 3})
    for (const Diagram& p : enumerate_family(Family::brauer(), 2))
      CHECK(std::abs(std::real(tensor_rep(p, d).trace()) -
                     static_cast<double>(trace_rep(p, d))) < 1e-12);
}

TEST_CASE("psi is a monoid homomorphism up to d^loops") {
  Rng rng = make_rng(99);
  std::vector<Family> families{Family::symmetric(), Family::partition_monoid(),
                               Family::brauer(), Family::uniform_block(),
                               Family::walled_brauer(1)};
  for (const Family& fam : families) {
    int k = fam.kind == Family::WalledBrauer ? 2 : 3;
    auto members = enumerate_family(fam, k);
    std::uniform_int_distribution<size_t> pick(0, members.size() - 1);
    for (int d : {2, 3}) {
      for (int trial = 0; trial < 100; ++trial) {
        const Diagram& p = members[pick(rng)];
        const Diagram& q = members[pick(rng)];
        auto [pq, loops] = compose(p, q);
        Mat lhs = tensor_rep(p, d) * tensor_rep(q, d);
        Mat rhs = std::pow(d, loops) * tensor_rep(pq, d);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("partial transpose of a diagram swaps row vertices") {
  Diagram t01 = Diagram::parse("1,5|2,4|3,6");
  Diagram cup = t01.partial_transpose_rows({1});
  CHECK(cup.to_string() == "1,2|3,6|4,5");
  // psi of the partially transposed diagram is the partially transposed psi
  for (int d : {2, 3}) {
    TensorSpace space{d, 3};
    Mat direct = tensor_rep(cup, d);
    Mat viaOp = partial_transpose(tensor_rep(t01, d), space, {0});
    CHECK((direct - viaOp).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("parse accepts @k suffix and rejects malformed input") {
  CHECK(Diagram::parse("1,2|3,4@k=2").k() == 2);
  CHECK_THROWS_AS(Diagram::parse("1,2|3"), ParseError);
  CHECK_THROWS_AS(Diagram::parse("1,x|2,3"), ParseError);
  CHECK_THROWS_AS(Diagram::parse("1,2|2,3|1,4"), ParseError);
  CHECK(Diagram::parse("1,3|2,6|4,5").to_string_full() == "1,3|2,6|4,5@k=3");
}

TEST_CASE("delta polynomial algebra tracks removed loops") {
  DiagramAlgebraElement cup = DiagramAlgebraElement::from_diagram(
      Diagram::parse("1,2|3,4"));
  DiagramAlgebraElement sq = cup * cup;
  // e^2 = delta * e
  REQUIRE(sq.terms().size() == 1);
  const auto& [diag, poly] = *sq.terms().begin();
  CHECK(diag == Diagram::parse("1,2|3,4"));
  CHECK(poly.evaluate(3) == 3);
  CHECK(poly.evaluate(5) == 5);
}

TEST_CASE("alternating sum over S_3 vanishes on two-dimensional factors") {
  // d = 2 cannot support the sign representation of S_3
  Mat acc = Mat::Zero(8, 8);
  for (const Perm& sigma : all_perms(3))
    acc += perm_sign(sigma) * perm_rep(sigma, 2);
  CHECK(acc.cwiseAbs().maxCoeff() == 0.0);
}
