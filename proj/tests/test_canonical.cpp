#include <doctest.h>

#include "sympencil/canonical.hpp"
#include "sympencil/json_io.hpp"

using namespace sympencil;

namespace {

GaussianRational q(long n, long d = 1) { return GaussianRational(mpq_class(n, d)); }

}  // namespace

TEST_CASE("primitive matrices") {
  CHECK(lambda_matrix(1, q(7)) == ExactMatrix::from_rows({{q(7)}}));
  CHECK(lambda_matrix(2, q(1, 2)) ==
        ExactMatrix::from_rows({{q(0), q(1, 2)}, {q(1, 2), q(1)}}));
  CHECK(lambda_matrix(3, q(5)) ==
        ExactMatrix::from_rows({{q(0), q(0), q(5)}, {q(0), q(5), q(1)}, {q(5), q(1), q(0)}}));
  CHECK(delta_matrix(3) ==
        ExactMatrix::from_rows({{q(0), q(0), q(1)}, {q(0), q(1), q(0)}, {q(1), q(0), q(0)}}));
  CHECK_THROWS_AS(lambda_matrix(0, q(1)), input_error);
  CHECK_THROWS_AS(delta_matrix(0), input_error);

  auto [f1, g1] = fg_matrices(1);
  CHECK(f1 == ExactMatrix::from_rows({{q(1), q(0)}}));
  CHECK(g1 == ExactMatrix::from_rows({{q(0), q(1)}}));
  auto [f0, g0] = fg_matrices(0);
  CHECK(f0.rows() == 0);
  CHECK(f0.cols() == 1);
  CHECK(g0.cols() == 1);

  CHECK(delta_matrix(4) * delta_matrix(4) == ExactMatrix::identity(4));
}

TEST_CASE("block specs validate") {
  CHECK(BlockSpec::h(2, q(1, 2)).size() == 2);
  CHECK(BlockSpec::k(3).size() == 3);
  CHECK(BlockSpec::l(0).size() == 1);
  CHECK(BlockSpec::l(2).size() == 5);
  CHECK_THROWS_AS(BlockSpec::h(0, q(1)), input_error);
  CHECK_THROWS_AS(BlockSpec::k(0), input_error);
  CHECK(BlockSpec::h(2, q(1, 2)).str() == "H2(1/2)");
  CHECK(BlockSpec::k(3).str() == "K3");
  CHECK(BlockSpec::l(0).str() == "L0");
}

TEST_CASE("single blocks") {
  SymPair h = make_block(BlockSpec::h(2, q(1, 2)));
  CHECK(h.a() == delta_matrix(2));
  CHECK(h.b() == lambda_matrix(2, q(1, 2)));

  for (std::size_t n = 1; n <= 4; ++n) {
    SymPair k = make_block(BlockSpec::k(n));
    SymPair h0 = make_block(BlockSpec::h(n, q(0)));
    CHECK(k.a() == h0.b());
    CHECK(k.b() == h0.a());
  }

  SymPair l1 = make_block(BlockSpec::l(1));
  CHECK(l1.a() == ExactMatrix::from_rows(
                      {{q(0), q(0), q(1)}, {q(0), q(0), q(0)}, {q(1), q(0), q(0)}}));
  CHECK(l1.b() == ExactMatrix::from_rows(
                      {{q(0), q(0), q(0)}, {q(0), q(0), q(1)}, {q(0), q(1), q(0)}}));

  SymPair l0 = make_block(BlockSpec::l(0));
  CHECK(l0.size() == 1);
  CHECK(l0.is_zero());
}

TEST_CASE("assembly concatenates blocks diagonally") {
  CanonicalStructure s{{BlockSpec::h(1, q(3)), BlockSpec::l(0)}};
  SymPair p = assemble(s);
  CHECK(p.a() == ExactMatrix::from_rows({{q(1), q(0)}, {q(0), q(0)}}));
  CHECK(p.b() == ExactMatrix::from_rows({{q(3), q(0)}, {q(0), q(0)}}));
  CHECK(s.total_size() == 2);
  CHECK(s.offsets() == std::vector<std::size_t>{0, 1});
  CHECK(s.str() == "H1(3) + L0");

  SymPair split = direct_sum(assemble(CanonicalStructure{{s.blocks[0]}}),
                             assemble(CanonicalStructure{{s.blocks[1]}}));
  CHECK(p == split);

  CanonicalStructure empty;
  CHECK(assemble(empty).size() == 0);
  CHECK(empty.total_size() == 0);
  CHECK(empty.str() == "(empty)");

  CanonicalStructure three{{BlockSpec::k(2), BlockSpec::h(1, q(-1)), BlockSpec::l(1)}};
  CHECK(assemble(three).size() == 6);
  CHECK(three.offsets() == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("structure json round trip") {
  CanonicalStructure s{{BlockSpec::h(2, GaussianRational(mpq_class(1), mpq_class(1))),
                        BlockSpec::k(1), BlockSpec::l(0)}};
  nlohmann::json j = structure_to_json(s);
  CHECK(j["blocks"][0]["lambda"] == "1+1i");
  CHECK(structure_from_json(j) == s);

  CanonicalStructure parsed = structure_from_json(nlohmann::json::parse(
      R"({"blocks":[{"kind":"H","n":2,"lambda":"1/2"},{"kind":"K","n":1},{"kind":"L","n":0}]})"));
  CHECK(parsed.blocks.size() == 3);
  CHECK(parsed.blocks[0] == BlockSpec::h(2, q(1, 2)));
  CHECK(parsed.blocks[2] == BlockSpec::l(0));

  auto bad = [](const char* text) {
    CHECK_THROWS_AS(structure_from_json(nlohmann::json::parse(text)), input_error);
  };
  bad(R"({"blocks":[{"kind":"H","n":2}]})");                  // H without lambda
  bad(R"({"blocks":[{"kind":"K","n":1,"lambda":"0"}]})");     // K with lambda
  bad(R"({"blocks":[{"kind":"X","n":1}]})");                  // unknown kind
  bad(R"({"blocks":[{"kind":"H","n":0,"lambda":"1"}]})");     // H needs n >= 1
  bad(R"({"blocks":[{"kind":"L"}]})");                        // missing n
  bad(R"({"blocks":{}})");
  bad(R"([])");
}
