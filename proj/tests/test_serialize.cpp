#include <doctest.h>

#include "deborder/oracle.hpp"
#include "deborder/serialize.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("canonical text") {
  const std::string poly_text = serialize(Document(poly(2, 3, {{{2, 1}, q(1, 2)}, {{3, 0}, -1}})));
  CHECK(poly_text ==
        R"({"kind":"polynomial","payload":{"degree":3,"nvars":2,"terms":[{"coef":"-1/1","exps":[3,0]},{"coef":"1/2","exps":[2,1]}]},"version":1})");
  CHECK(serialize_rational(q(0)) == R"("0/1")");
  CHECK(serialize_eps(EpsScalar(q(-1, 3)) * eps(-1)) == R"({"den":[[1,"1/1"]],"num":[[0,"-1/3"]]})");
  CHECK(serialize_eps(ep({0, 2, 0, q(1, 2)})) == R"({"den":[[0,"1/1"]],"num":[[1,"2/1"],[3,"1/2"]]})");
}

TEST_CASE("round trips of generated documents") {
  for (const auto fam : {Family::Tangent, Family::Multibase, Family::Random}) {
    const auto inst = gen_family({fam, 5, 1, 3, 0, 3});
    const Document f = inst.f;
    const Document b = inst.border;
    CHECK(serialize(parse_document(serialize(f))) == serialize(f));
    CHECK(std::get<BorderDecomposition>(parse_document(serialize(b))) == inst.border);
    auto [w, rep] = deborder::deborder(inst.f, inst.border);
    const Document wd = w;
    CHECK(std::get<WaringDecomposition>(parse_document(serialize(wd))) == w);
    DeborderConfig cfg;
    cfg.y_size = 3;
    const Document rd = ReportDocument{rep, cfg};
    const auto back = std::get<ReportDocument>(parse_document(serialize(rd)));
    CHECK(back.report.trace == rep.trace);
    CHECK(back.report.rank_bound == rep.rank_bound);
    CHECK(back.config.y_size == 3u);
    CHECK(serialize(Document(back)) == serialize(rd));
  }
}

TEST_CASE("malformed documents are rejected") {
  const char* bad[] = {
      "{",
      "[]",
      R"({"kind":"polynomial","version":2,"payload":{"nvars":1,"degree":0,"terms":[]}})",
      R"({"kind":"matrix","version":1,"payload":{}})",
      R"({"kind":"polynomial","version":1,"payload":{"nvars":2,"degree":2,"terms":[{"exps":[1,0],"coef":"1/1"}]}})",
      R"({"kind":"polynomial","version":1,"payload":{"nvars":2,"degree":1,"terms":[{"exps":[1],"coef":"1/1"}]}})",
      R"({"kind":"polynomial","version":1,"payload":{"nvars":1,"degree":1,"terms":[{"exps":[1],"coef":"1/0"}]}})",
      R"({"kind":"polynomial","version":1,"payload":{"nvars":1,"degree":1,"terms":[{"exps":[1],"coef":1}]}})",
      R"({"kind":"polynomial","version":1,"payload":{"nvars":1,"degree":1,"terms":[{"exps":[1],"coef":"1/1"},{"exps":[1],"coef":"2/1"}]}})",
      R"({"kind":"waring","version":1,"payload":{"nvars":2,"degree":1,"summands":[{"weight":"1/1","form":{"coefs":["0/1","0/1"]}}]}})",
      R"({"kind":"waring","version":1,"payload":{"nvars":2,"degree":1,"summands":[{"weight":"0/1","form":{"coefs":["1/1","0/1"]}}]}})",
      R"({"kind":"border","version":1,"payload":{"nvars":1,"degree":1,"summands":[{"weight":{"num":[[1,"1/1"],[0,"1/1"]],"den":[[0,"1/1"]]},"form":{"coefs":[{"num":[[0,"1/1"]],"den":[[0,"1/1"]]}]}}]}})",
      R"({"kind":"border","version":1,"payload":{"nvars":1,"degree":1,"summands":[{"weight":{"num":[[0,"1/1"]],"den":[]},"form":{"coefs":[{"num":[[0,"1/1"]],"den":[[0,"1/1"]]}]}}]}})",
      R"({"kind":"border","version":1,"payload":{"nvars":1,"degree":1,"summands":[{"weight":{"num":[[0,"0/1"]],"den":[[0,"1/1"]]},"form":{"coefs":[{"num":[[0,"1/1"]],"den":[[0,"1/1"]]}]}}]}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_document(text), ParseError);
  }
}

TEST_CASE("parsing normalizes eps-scalars") {
  const auto doc = parse_document(
      R"({"kind":"border","version":1,"payload":{"nvars":1,"degree":1,"summands":[{"weight":{"num":[[1,"2/1"]],"den":[[1,"4/1"],[2,"4/1"]]},"form":{"coefs":[{"num":[[0,"1/1"]],"den":[[0,"1/1"]]}]}}]}})");
  const auto& b = std::get<BorderDecomposition>(doc);
  CHECK(b.summands()[0].weight == EpsScalar(q(1, 2)) / ep({1, 1}));
}
