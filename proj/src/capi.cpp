#include "deborder.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "deborder/oracle.hpp"
#include "deborder/serialize.hpp"

struct dbr_document {
  deborder::Document doc;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_diagnostic = "{}";

void set_error(const std::string& lemma, const std::string& message, const std::string& witness) {
  last_error = message;
  nlohmann::json j{{"lemma", lemma.empty() ? nlohmann::json(nullptr) : nlohmann::json(lemma)},
                   {"message", message},
                   {"witness", witness}};
  last_diagnostic = j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

void clear_error() {
  last_error.clear();
  last_diagnostic = "{}";
}

template <class F>
dbr_status guarded(F&& body) {
  using namespace deborder;
  clear_error();
  try {
    return body();
  } catch (const LemmaCheckFailed& e) {
    set_error(e.lemma(), e.what(), e.witness());
    return DBR_LEMMA_FAILED;
  } catch (const ParseError& e) {
    set_error("", e.what(), e.witness());
    return DBR_PARSE_ERROR;
  } catch (const VerificationFailed& e) {
    set_error("", e.what(), e.witness());
    return DBR_VERIFY_FAILED;
  } catch (const DegenerateInput& e) {
    set_error("", e.what(), e.witness());
    return DBR_VERIFY_FAILED;
  } catch (const AssertionViolation& e) {
    set_error("", e.what(), e.witness());
    return DBR_INTERNAL_ERROR;
  } catch (const RetryLimitExceeded& e) {
    set_error("", e.what(), e.witness());
    return DBR_INTERNAL_ERROR;
  } catch (const Error& e) {
    set_error("", e.what(), e.witness());
    return DBR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error("", e.what(), "");
    return DBR_INTERNAL_ERROR;
  } catch (...) {
    set_error("", "unknown failure", "");
    return DBR_INTERNAL_ERROR;
  }
}

dbr_status invalid(const char* message) {
  set_error("", message, "");
  return DBR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dbr_document* wrap(deborder::Document doc) { return new dbr_document{std::move(doc)}; }

template <class T>
const T* as(const dbr_document* d) {
  return d == nullptr ? nullptr : std::get_if<T>(&d->doc);
}

deborder::DeborderConfig to_config(const dbr_deborder_config* c) {
  deborder::DeborderConfig out;
  if (c == nullptr) return out;
  out.seed = c->seed;
  out.base_threshold = c->base_threshold;
  out.strengthened = c->strengthened != 0;
  if (c->y_size > 0) out.y_size = c->y_size;
  out.jobs = c->jobs == 0 ? 1 : c->jobs;
  return out;
}

}  // namespace

extern "C" {

const char* dbr_last_error(void) { return last_error.c_str(); }
const char* dbr_last_diagnostic(void) { return last_diagnostic.c_str(); }

dbr_status dbr_parse(const char* json, dbr_document** out) {
  if (json == nullptr || out == nullptr) return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = wrap(deborder::parse_document(json));
    return DBR_OK;
  });
}

dbr_status dbr_load(const char* path, dbr_document** out) {
  if (path == nullptr || out == nullptr) return invalid("null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    set_error("", std::string("cannot open ") + path, path);
    return DBR_PARSE_ERROR;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return dbr_parse(text.str().c_str(), out);
}

dbr_status dbr_serialize(const dbr_document* doc, char** out) {
  if (doc == nullptr || out == nullptr) return invalid("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(deborder::serialize(doc->doc));
    return DBR_OK;
  });
}

dbr_status dbr_save(const dbr_document* doc, const char* path) {
  if (doc == nullptr || path == nullptr) return invalid("null argument");
  return guarded([&] {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw deborder::PreconditionViolated(std::string("cannot write ") + path, path);
    out << deborder::serialize(doc->doc) << '\n';
    if (!out) throw deborder::PreconditionViolated(std::string("write failed for ") + path, path);
    return DBR_OK;
  });
}

dbr_kind dbr_document_kind(const dbr_document* doc) {
  return static_cast<dbr_kind>(deborder::kind_of(doc->doc));
}

void dbr_document_free(dbr_document* doc) { delete doc; }
void dbr_string_free(char* s) { std::free(s); }

void dbr_deborder_config_default(dbr_deborder_config* config) {
  if (config == nullptr) return;
  const deborder::DeborderConfig d;
  config->seed = d.seed;
  config->base_threshold = d.base_threshold;
  config->strengthened = d.strengthened ? 1 : 0;
  config->y_size = 0;
  config->jobs = d.jobs;
}

dbr_status dbr_deborder(const dbr_document* border, const dbr_document* target,
                        const dbr_deborder_config* config, dbr_document** waring,
                        dbr_document** report) {
  using namespace deborder;
  const auto* b = as<BorderDecomposition>(border);
  const auto* f = as<HomoPoly<Rational>>(target);
  if (b == nullptr || f == nullptr) return invalid("expected a border document and a polynomial document");
  if (waring == nullptr) return invalid("null output");
  *waring = nullptr;
  if (report != nullptr) *report = nullptr;
  return guarded([&] {
    const DeborderConfig cfg = to_config(config);
    auto [w, rep] = deborder::deborder(*f, *b, cfg);
    *waring = wrap(std::move(w));
    if (report != nullptr) *report = wrap(ReportDocument{std::move(rep), cfg});
    return DBR_OK;
  });
}

dbr_status dbr_verify_waring(const dbr_document* waring, const dbr_document* target) {
  using namespace deborder;
  const auto* w = as<WaringDecomposition>(waring);
  const auto* f = as<HomoPoly<Rational>>(target);
  if (w == nullptr || f == nullptr) return invalid("expected a waring document and a polynomial document");
  return guarded([&] {
    const VerifyResult r = verify_waring(*w, *f);
    if (r) return DBR_OK;
    set_error("", r.reason, r.witness);
    return DBR_VERIFY_FAILED;
  });
}

dbr_status dbr_verify_border(const dbr_document* border, const dbr_document* target, int* order) {
  using namespace deborder;
  const auto* b = as<BorderDecomposition>(border);
  const auto* f = as<HomoPoly<Rational>>(target);
  if (b == nullptr || f == nullptr) return invalid("expected a border document and a polynomial document");
  return guarded([&] {
    const VerifyResult r = verify_border(*b, *f);
    if (!r) {
      set_error("", r.reason, r.witness);
      return DBR_VERIFY_FAILED;
    }
    if (order != nullptr) *order = r.order ? *r.order : -1;
    return DBR_OK;
  });
}

dbr_status dbr_generate(const dbr_family_spec* spec, dbr_document** target, dbr_document** border) {
  using namespace deborder;
  if (spec == nullptr || spec->family == nullptr || target == nullptr || border == nullptr)
    return invalid("null argument");
  *target = *border = nullptr;
  return guarded([&] {
    FamilySpec s;
    s.family = parse_family(spec->family);
    s.d = spec->d;
    s.j = spec->j;
    s.seed = spec->seed;
    s.nvars = spec->nvars;
    s.rank = spec->rank;
    FamilyInstance inst = gen_family(s);
    *target = wrap(std::move(inst.f));
    *border = wrap(std::move(inst.border));
    return DBR_OK;
  });
}

dbr_status dbr_oracle(const dbr_document* target, int binary, dbr_oracle_result* result,
                      size_t* bounds, size_t bounds_len) {
  using namespace deborder;
  const auto* f = as<HomoPoly<Rational>>(target);
  if (f == nullptr || result == nullptr) return invalid("expected a polynomial document");
  if (f->is_zero()) return invalid("zero polynomial");
  if (binary && f->nvars() != 2) {
    set_error("", "binary oracle needs exactly 2 variables", std::to_string(f->nvars()));
    return DBR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *result = dbr_oracle_result{0, 0, 0, 0};
    if (binary) {
      const SylvesterRanks s = sylvester_rank(BinaryForm::from_poly(*f));
      result->is_binary = 1;
      result->wr = s.wr;
      result->bwr = s.bwr;
    }
    for (unsigned s = 0; s <= f->degree(); ++s) {
      const std::size_t c = catalecticant_bound(*f, s);
      if (bounds != nullptr && s < bounds_len) bounds[s] = c;
      result->max_catalecticant = std::max(result->max_catalecticant, c);
    }
    return DBR_OK;
  });
}

dbr_status dbr_rank_bound(unsigned d, unsigned r, char** out) {
  if (out == nullptr) return invalid("null argument");
  *out = nullptr;
  if (d == 0 || r == 0) return invalid("rank bound needs d >= 1 and r >= 1");
  return guarded([&] {
    *out = copy_string(deborder::rank_bound(d, r).get_str());
    return DBR_OK;
  });
}

}  // extern "C"
