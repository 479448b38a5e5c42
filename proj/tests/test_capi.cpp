#include <doctest.h>

#include <string>

#include "deborder.h"

namespace {

struct Owned {
  dbr_document* doc = nullptr;
  ~Owned() { dbr_document_free(doc); }
};

}  // namespace

TEST_CASE("C API pipeline") {
  dbr_family_spec spec{"tangent", 4, 1, 1, 0, 3};
  Owned f, b, w, r;
  REQUIRE(dbr_generate(&spec, &f.doc, &b.doc) == DBR_OK);
  CHECK(dbr_document_kind(f.doc) == DBR_POLYNOMIAL);
  CHECK(dbr_document_kind(b.doc) == DBR_BORDER);
  int order = -2;
  CHECK(dbr_verify_border(b.doc, f.doc, &order) == DBR_OK);
  CHECK(order == 1);

  dbr_deborder_config cfg;
  dbr_deborder_config_default(&cfg);
  CHECK(cfg.base_threshold == 4);
  CHECK(cfg.y_size == 0);
  REQUIRE(dbr_deborder(b.doc, f.doc, &cfg, &w.doc, &r.doc) == DBR_OK);
  CHECK(dbr_verify_waring(w.doc, f.doc) == DBR_OK);
  CHECK(dbr_document_kind(r.doc) == DBR_REPORT);

  char* text = nullptr;
  REQUIRE(dbr_serialize(w.doc, &text) == DBR_OK);
  Owned again;
  CHECK(dbr_parse(text, &again.doc) == DBR_OK);
  char* text2 = nullptr;
  REQUIRE(dbr_serialize(again.doc, &text2) == DBR_OK);
  CHECK(std::string(text) == std::string(text2));
  dbr_string_free(text);
  dbr_string_free(text2);

  // wrong document kinds are argument errors
  CHECK(dbr_verify_waring(b.doc, f.doc) == DBR_INVALID_ARGUMENT);
  CHECK(dbr_verify_waring(w.doc, b.doc) == DBR_INVALID_ARGUMENT);
}

TEST_CASE("C API errors and diagnostics") {
  Owned d;
  CHECK(dbr_parse("{not json", &d.doc) == DBR_PARSE_ERROR);
  CHECK(d.doc == nullptr);
  CHECK(std::string(dbr_last_diagnostic()).find("\"message\"") != std::string::npos);
  CHECK(dbr_load("/nonexistent/file.json", &d.doc) == DBR_PARSE_ERROR);

  dbr_family_spec bad{"osculating", 3, 5, 1, 0, 3};
  Owned f, b;
  CHECK(dbr_generate(&bad, &f.doc, &b.doc) == DBR_INVALID_ARGUMENT);
  dbr_family_spec unknown{"spiral", 3, 1, 1, 0, 3};
  CHECK(dbr_generate(&unknown, &f.doc, &b.doc) == DBR_INVALID_ARGUMENT);

  Owned target, pole;
  REQUIRE(dbr_parse(R"({"kind":"polynomial","version":1,"payload":{"nvars":2,"degree":2,"terms":[{"exps":[2,0],"coef":"1/1"}]}})",
                    &target.doc) == DBR_OK);
  REQUIRE(dbr_parse(R"({"kind":"border","version":1,"payload":{"nvars":2,"degree":2,"summands":[{"weight":{"num":[[0,"1/1"]],"den":[[1,"1/1"]]},"form":{"coefs":[{"num":[[0,"1/1"]],"den":[[0,"1/1"]]},{"num":[],"den":[[0,"1/1"]]}]}}]}})",
                    &pole.doc) == DBR_OK);
  CHECK(dbr_verify_border(pole.doc, target.doc, nullptr) == DBR_VERIFY_FAILED);
  CHECK(std::string(dbr_last_diagnostic()).find("[2,0]") != std::string::npos);
  Owned w;
  CHECK(dbr_deborder(pole.doc, target.doc, nullptr, &w.doc, nullptr) == DBR_VERIFY_FAILED);
  CHECK(w.doc == nullptr);

  dbr_oracle_result res{};
  size_t bounds[8] = {};
  CHECK(dbr_oracle(target.doc, 1, &res, bounds, 8) == DBR_OK);
  CHECK(res.wr == 1);
  CHECK(res.bwr == 1);
  CHECK(bounds[0] == 1);
  Owned three;
  REQUIRE(dbr_parse(R"({"kind":"polynomial","version":1,"payload":{"nvars":3,"degree":1,"terms":[{"exps":[1,0,0],"coef":"1/1"}]}})",
                    &three.doc) == DBR_OK);
  CHECK(dbr_oracle(three.doc, 1, &res, nullptr, 0) == DBR_INVALID_ARGUMENT);
  CHECK(dbr_oracle(three.doc, 0, &res, nullptr, 0) == DBR_OK);

  char* bound = nullptr;
  REQUIRE(dbr_rank_bound(3, 2, &bound) == DBR_OK);
  CHECK(std::string(bound) == "54242");
  dbr_string_free(bound);
  CHECK(dbr_rank_bound(0, 2, &bound) == DBR_INVALID_ARGUMENT);
}
