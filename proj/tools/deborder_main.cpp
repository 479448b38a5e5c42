#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deborder.h"

namespace {

enum Exit { kOk = 0, kVerify = 1, kInput = 2, kLemma = 3 };

struct DocDeleter {
  void operator()(dbr_document* d) const { dbr_document_free(d); }
};
using Doc = std::unique_ptr<dbr_document, DocDeleter>;

int exit_code(dbr_status s) {
  switch (s) {
    case DBR_OK: return kOk;
    case DBR_VERIFY_FAILED: return kVerify;
    case DBR_PARSE_ERROR: return kInput;
    case DBR_LEMMA_FAILED: return kLemma;
    case DBR_INVALID_ARGUMENT: return kInput;
    case DBR_INTERNAL_ERROR: return kVerify;
  }
  return kVerify;
}

int report_failure(dbr_status s) {
  std::cerr << dbr_last_diagnostic() << std::endl;
  return exit_code(s);
}

/// Returns an exit code; diagnostics already written on failure.
int load(const std::string& path, dbr_kind expected, Doc& out) {
  dbr_document* raw = nullptr;
  const dbr_status s = dbr_load(path.c_str(), &raw);
  out.reset(raw);
  if (s != DBR_OK) return report_failure(s);
  if (dbr_document_kind(raw) != expected) {
    std::cerr << "{\"lemma\":null,\"message\":\"unexpected document kind\",\"witness\":\"" << path
              << "\"}" << std::endl;
    return kInput;
  }
  return kOk;
}

dbr_status save(const Doc& doc, const std::string& path) { return dbr_save(doc.get(), path.c_str()); }

struct DeborderArgs {
  std::string border, target, out, report;
  dbr_deborder_config config{};
};

int cmd_deborder(DeborderArgs& a) {
  Doc border, target;
  if (int e = load(a.border, DBR_BORDER, border); e != kOk) return e;
  if (int e = load(a.target, DBR_POLYNOMIAL, target); e != kOk) return e;
  dbr_document* w = nullptr;
  dbr_document* r = nullptr;
  const dbr_status s = dbr_deborder(border.get(), target.get(), &a.config, &w, &r);
  Doc waring(w), report(r);
  if (s != DBR_OK) return report_failure(s);
  if (auto e = save(waring, a.out); e != DBR_OK) return report_failure(e);
  if (!a.report.empty())
    if (auto e = save(report, a.report); e != DBR_OK) return report_failure(e);
  char* text = nullptr;
  if (auto e = dbr_serialize(report.get(), &text); e != DBR_OK) return report_failure(e);
  std::cout << text << std::endl;
  dbr_string_free(text);
  return kOk;
}

int cmd_verify(const std::string& type, const std::string& decomp, const std::string& target_path) {
  const bool border = type == "border";
  Doc d, target;
  if (int e = load(decomp, border ? DBR_BORDER : DBR_WARING, d); e != kOk) return e;
  if (int e = load(target_path, DBR_POLYNOMIAL, target); e != kOk) return e;
  int order = -1;
  const dbr_status s = border ? dbr_verify_border(d.get(), target.get(), &order)
                              : dbr_verify_waring(d.get(), target.get());
  if (s != DBR_OK) {
    std::cout << "FAIL " << dbr_last_error() << std::endl;
    return report_failure(s);
  }
  if (border)
    std::cout << "OK q=" << (order < 0 ? std::string("exact") : std::to_string(order)) << std::endl;
  else
    std::cout << "OK" << std::endl;
  return kOk;
}

int cmd_gen(dbr_family_spec spec, const std::string& family, const std::string& out_target,
            const std::string& out_border) {
  spec.family = family.c_str();
  dbr_document* f = nullptr;
  dbr_document* b = nullptr;
  const dbr_status s = dbr_generate(&spec, &f, &b);
  Doc target(f), border(b);
  if (s != DBR_OK) return report_failure(s);
  if (auto e = save(target, out_target); e != DBR_OK) return report_failure(e);
  if (auto e = save(border, out_border); e != DBR_OK) return report_failure(e);
  return kOk;
}

int cmd_oracle(const std::string& path, bool binary) {
  Doc target;
  if (int e = load(path, DBR_POLYNOMIAL, target); e != kOk) return e;
  std::vector<size_t> bounds(64, 0);
  dbr_oracle_result r{};
  const dbr_status s = dbr_oracle(target.get(), binary ? 1 : 0, &r, bounds.data(), bounds.size());
  if (s != DBR_OK) return report_failure(s);
  if (r.is_binary) std::cout << "wr=" << r.wr << " bwr=" << r.bwr << std::endl;
  std::cout << "catalecticant=" << r.max_catalecticant << " by_order=[";
  // bounds past the degree stay zero
  std::size_t last = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i)
    if (bounds[i] != 0) last = i;
  for (std::size_t i = 0; i <= last; ++i) std::cout << (i ? "," : "") << bounds[i];
  std::cout << "]" << std::endl;
  return kOk;
}

int cmd_bound(unsigned d, unsigned r) {
  char* text = nullptr;
  if (auto s = dbr_rank_bound(d, r, &text); s != DBR_OK) return report_failure(s);
  std::cout << text << std::endl;
  dbr_string_free(text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turn border decompositions of forms into exact Waring decompositions"};
  app.require_subcommand(1);

  DeborderArgs da;
  dbr_deborder_config_default(&da.config);
  bool strengthened = false;
  unsigned y_size = 0;
  auto* deb = app.add_subcommand("deborder", "Waring decomposition from a border certificate");
  deb->add_option("--border", da.border, "border decomposition document")->required();
  deb->add_option("--target", da.target, "polynomial document")->required();
  deb->add_option("--out", da.out, "output Waring decomposition")->required();
  deb->add_option("--report", da.report, "output report document");
  deb->add_option("--seed", da.config.seed, "seed for the dense base case");
  deb->add_option("--base-threshold", da.config.base_threshold, "ranks at or below go to the dense base case");
  deb->add_flag("--strengthened", strengthened, "take derivatives one order at a time");
  deb->add_option("--y-size", y_size, "size of the Y block (default floor(10 sqrt r))")->check(CLI::PositiveNumber);
  deb->add_option("--jobs", da.config.jobs, "parallel recursion branches")->check(CLI::PositiveNumber);

  std::string vtype, vdecomp, vtarget;
  auto* ver = app.add_subcommand("verify", "exact verification of a decomposition");
  ver->add_option("--type", vtype, "waring or border")->required()->check(CLI::IsMember({"waring", "border"}));
  ver->add_option("--decomp", vdecomp, "decomposition document")->required();
  ver->add_option("--target", vtarget, "polynomial document")->required();

  dbr_family_spec spec{nullptr, 3, 1, 1, 0, 3};
  std::string family, out_target, out_border;
  auto* gen = app.add_subcommand("gen", "generate a certificate family");
  gen->add_option("--family", family, "tangent, osculating, multibase or random")
      ->required()
      ->check(CLI::IsMember({"tangent", "osculating", "multibase", "random"}));
  gen->add_option("--d", spec.d, "degree")->required();
  gen->add_option("--j", spec.j, "osculating order");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--nvars", spec.nvars, "number of variables");
  gen->add_option("--rank", spec.rank, "certificate rank (random family)");
  gen->add_option("--out-target", out_target, "polynomial output")->required();
  gen->add_option("--out-border", out_border, "border decomposition output")->required();

  std::string otarget;
  bool binary = false;
  auto* ora = app.add_subcommand("oracle", "Sylvester ranks and catalecticant bounds");
  ora->add_option("--target", otarget, "polynomial document")->required();
  ora->add_flag("--binary", binary, "run Sylvester's algorithm (2 variables)");

  unsigned bd = 0, br = 0;
  auto* bnd = app.add_subcommand("bound", "ceil(d * r^(10 sqrt r))");
  bnd->add_option("--d", bd, "degree")->required()->check(CLI::PositiveNumber);
  bnd->add_option("--r", br, "border rank")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (*deb) {
    da.config.strengthened = strengthened ? 1 : 0;
    da.config.y_size = y_size;
    return cmd_deborder(da);
  }
  if (*ver) return cmd_verify(vtype, vdecomp, vtarget);
  if (*gen) return cmd_gen(spec, family, out_target, out_border);
  if (*ora) return cmd_oracle(otarget, binary);
  return cmd_bound(bd, br);
}
