// fusionctl: category files, products, codes, extensions and verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 unknown label, 4 resource budget exceeded.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fusion/atlas.hpp"
#include "fusion/codes.hpp"
#include "fusion/deligne.hpp"
#include "fusion/errors.hpp"
#include "fusion/extension.hpp"
#include "fusion/report.hpp"
#include "fusion/serialize.hpp"
#include "fusion/verify.hpp"

namespace {

using namespace fusion;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kUnknownLabel = 3, kBudget = 4 };

struct Globals {
  bool json = false;
  std::string out;
  std::uint64_t seed = 20240601;
  std::size_t max_labels = 256;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + g.out);
  f << text;
}

// "1,3,4" -> {1,3,4}; "" -> {}.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw ParseError("bad integer list: '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void check_budget(const Globals& g, std::size_t labels) {
  if (labels > g.max_labels)
    throw ResourceBound(std::to_string(labels) + " labels exceed --max-labels " + std::to_string(g.max_labels));
}

CategoryPtr load_category(const std::string& path) {
  json j = read_json_file(path);
  if (j.is_object() && j.contains("category")) j = j["category"];
  return category_from_json(j);
}

// Number of tensor factors of a category built as a power.
unsigned tensor_degree(const CategoryData& cat) {
  const auto index = cat.find(cat.unit());
  if (!index) throw InvalidDatum("unit is not an indecomposable");
  const IndecompData& unit = cat.at(*index);
  return unit.is_tuple() ? static_cast<unsigned>(unit.components.size()) : 1u;
}

std::string category_output(const CategoryData& cat) { return canonical_dump(category_to_json(cat)); }

VerifyOptions verify_options(const Globals& g) {
  VerifyOptions o;
  o.seed = g.seed;
  return o;
}

int verification_output(const Globals& g, const std::string& target, const std::vector<Clause>& clauses) {
  const bool ok = all_passed(clauses);
  if (g.json) {
    emit(g, canonical_dump({{"target", target}, {"seed", g.seed}, {"passed", ok}, {"clauses", clauses_to_json(clauses)}}));
  } else {
    emit(g, format_clauses(clauses) + (ok ? "ALL PASS: " : "FAILED: ") + target + " (seed " +
                std::to_string(g.seed) + ")\n");
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_atlas(const Globals& g, const std::string& key, std::optional<unsigned> d) {
  if (key == "w2") return emit(g, category_output(*atlas::w2())), kOk;
  if (key != "power" && key != "sf-plus") throw std::invalid_argument("unknown atlas key: " + key);
  if (!d || *d == 0) throw std::invalid_argument("atlas " + key + " needs --d N with N >= 1");
  if (key == "power") {
    std::size_t labels = 1;
    for (unsigned i = 0; i < *d; ++i) {
      labels *= atlas::w2()->size();
      check_budget(g, labels);
    }
    emit(g, category_output(*atlas::w2_power(*d)));
  } else {
    const auto ext = atlas::sf_plus(*d);
    check_budget(g, ext->data().size());
    emit(g, category_output(ext->data()));
  }
  return kOk;
}

int cmd_fuse(const Globals& g, const std::string& file, const std::string& a, const std::string& b) {
  const auto cat = load_category(file);
  const ObjectSum result = fuse(*cat, ObjectSum(a), ObjectSum(b));
  emit(g, g.json ? canonical_dump(object_sum_to_json(result)) : result.to_string() + "\n");
  return kOk;
}

int cmd_product(const Globals& g, CategoryPtr left, CategoryPtr right) {
  check_budget(g, left->size() * right->size());
  emit(g, category_output(*product(std::move(left), std::move(right))));
  return kOk;
}

int cmd_power(const Globals& g, const std::string& file, unsigned d) {
  if (d == 0) throw std::invalid_argument("--d must be at least 1");
  const auto cat = load_category(file);
  std::size_t labels = 1;
  for (unsigned i = 0; i < d; ++i) {
    labels *= cat->size();
    check_budget(g, labels);
  }
  emit(g, category_output(*power(cat, d)));
  return kOk;
}

BinaryCode code_from_args(unsigned d, const std::vector<std::string>& gens) {
  std::vector<std::vector<int>> lists;
  for (const auto& s : gens) lists.push_back(parse_int_list(s));
  return span(d, lists);
}

std::vector<int> levels_from_arg(unsigned d, const std::string& p) {
  std::vector<int> levels = p.empty() ? std::vector<int>(d, 2) : parse_int_list(p);
  if (levels.size() != d) throw CodeError("--p lists " + std::to_string(levels.size()) + " levels for d = " + std::to_string(d));
  return levels;
}

int cmd_codes_enumerate(const Globals& g, unsigned d, const std::string& p) {
  const auto levels = levels_from_arg(d, p);
  if (d > 5) throw ResourceBound("subspace enumeration is limited to d <= 5");
  const auto all = enumerate_subspaces(d);
  json rows = json::array();
  std::string text;
  std::size_t count = 0;
  for (const auto& code : all) {
    const auto report = admissible(code, levels);
    if (report.admissible()) ++count;
    rows.push_back({{"code", code_to_json(code)}, {"admissibility", admissibility_to_json(report)}});
    text += code.to_string() + "  even=" + (report.even ? "yes" : "no") +
            " four_div=" + (report.four_div ? "yes" : "no") +
            (report.admissible() ? "  admissible" : "  rejected") + "\n";
  }
  text += std::to_string(count) + " admissible codes of " + std::to_string(all.size()) + " subspaces\n";
  emit(g, g.json ? canonical_dump({{"d", d}, {"p", levels}, {"subspaces", all.size()}, {"admissible", count}, {"codes", rows}})
                 : text);
  return kOk;
}

int cmd_codes_check(const Globals& g, unsigned d, const std::string& p, const std::vector<std::string>& gens) {
  const auto levels = levels_from_arg(d, p);
  const BinaryCode code = code_from_args(d, gens);
  const auto report = admissible(code, levels);
  if (g.json)
    emit(g, canonical_dump({{"code", code_to_json(code)}, {"p", levels}, {"admissibility", admissibility_to_json(report)}}));
  else
    emit(g, code.to_string() + ": " + report.to_string() + "\n");
  return report.admissible() ? kOk : kVerifyFailed;
}

int cmd_extend(const Globals& g, const std::string& file, const std::vector<std::string>& gens) {
  const auto base = load_category(file);
  const unsigned d = tensor_degree(*base);
  const BinaryCode code = code_from_args(d, gens);
  const CurrentFamily fam = current_family(base, code);
  std::string levels;
  for (unsigned i = 0; i < d; ++i) levels += i ? ",2" : "2";
  const auto ext = build_extension(fam, "W^" + code.to_string() + "_{" + levels + "}");
  check_budget(g, ext->data().size());
  const auto clauses = verify_extension(*ext, verify_options(g));
  emit(g, g.json ? canonical_dump(extension_report(*ext, clauses, g.seed)) : extension_report_text(*ext, clauses));
  return all_passed(clauses) ? kOk : kVerifyFailed;
}

int cmd_verify(const Globals& g, const std::string& target, std::optional<unsigned> d) {
  if (target == "w2") return verification_output(g, "w2", verify_w2());
  if (target == "sf-plus") {
    if (!d || *d == 0) throw std::invalid_argument("verify sf-plus needs --d N with N >= 1");
    return verification_output(g, "sf-plus d=" + std::to_string(*d), verify_sf_plus(*d, verify_options(g)));
  }
  const json j = read_json_file(target);
  const bool report = j.is_object() && j.contains("category");
  const auto cat = category_from_json(report ? j["category"] : j);
  auto clauses = verify_category(*cat, verify_options(g));
  if (report && j.contains("verification")) {
    const bool recorded = j["verification"].value("passed", false);
    clauses.push_back({"recorded extension verification", recorded, "true", recorded ? "true" : "false"});
  }
  return verification_output(g, target, clauses);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionctl: Krull-Schmidt fusion data engine"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--out", g.out, "write output to this file");
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--max-labels", g.max_labels, "label budget for constructed data");

  std::string key, file, file_b, a, b, p, target;
  std::optional<unsigned> d;
  unsigned power_d = 0, codes_d = 0;
  std::vector<std::string> gens, ext_code;

  auto* atlas_cmd = app.add_subcommand("atlas", "export an atlas entry: w2 | sf-plus --d N | power --d N");
  atlas_cmd->add_option("key", key)->required();
  atlas_cmd->add_option("--d", d);

  auto* fuse_cmd = app.add_subcommand("fuse", "fuse two labels of a category file");
  fuse_cmd->add_option("file", file)->required();
  fuse_cmd->add_option("a", a)->required();
  fuse_cmd->add_option("b", b)->required();

  auto* deligne_cmd = app.add_subcommand("deligne", "Deligne product of two category files");
  deligne_cmd->add_option("fileA", file)->required();
  deligne_cmd->add_option("fileB", file_b)->required();

  auto* power_cmd = app.add_subcommand("power", "Deligne power of a category file");
  power_cmd->add_option("file", file)->required();
  power_cmd->add_option("--d", power_d)->required();

  auto* codes_cmd = app.add_subcommand("codes", "binary codes and admissibility");
  codes_cmd->require_subcommand(1);
  codes_cmd->fallthrough();
  auto* enum_cmd = codes_cmd->add_subcommand("enumerate", "every subspace of F_2^d with verdicts");
  auto* check_cmd = codes_cmd->add_subcommand("check", "admissibility of one code");
  for (auto* c : {enum_cmd, check_cmd}) {
    c->add_option("--d", codes_d)->required();
    c->add_option("--p", p, "levels, e.g. 2,2 (default all 2)");
  }
  check_cmd->add_option("--gen", gens, "generator subset, e.g. 1,2 (repeatable)");

  auto* extend_cmd = app.add_subcommand("extend", "simple-current extension of a power of W_2");
  extend_cmd->add_option("file", file)->required();
  extend_cmd->add_option("--code", ext_code, "generator subset, e.g. 1,2 (repeatable)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verification suite: w2 | sf-plus --d N | <file>");
  verify_cmd->add_option("target", target)->required();
  verify_cmd->add_option("--d", d);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (atlas_cmd->parsed()) return cmd_atlas(g, key, d);
    if (fuse_cmd->parsed()) return cmd_fuse(g, file, a, b);
    if (deligne_cmd->parsed()) return cmd_product(g, load_category(file), load_category(file_b));
    if (power_cmd->parsed()) return cmd_power(g, file, power_d);
    if (enum_cmd->parsed()) return cmd_codes_enumerate(g, codes_d, p);
    if (check_cmd->parsed()) return cmd_codes_check(g, codes_d, p, gens);
    if (extend_cmd->parsed()) return cmd_extend(g, file, ext_code);
    if (verify_cmd->parsed()) return cmd_verify(g, target, d);
  } catch (const UnknownLabel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknownLabel;
  } catch (const ResourceBound& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CodeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
