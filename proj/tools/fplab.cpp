// fplab: command line front end for the loop workbench. Subcommands count,
// patterns, verify, tilings, and dump cover exact class counts, link pattern
// tallies, identity checks, matching counts, and raw configuration listings.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <fpl/cache.hpp>
#include <fpl/verify.hpp>

namespace {

using nlohmann::json;

json report_json(const fpl::VerificationReport& r) {
  json j{{"identity", r.identity}, {"size", r.size},   {"status", r.status},
         {"lhs", r.lhs},           {"rhs", r.rhs},     {"note", r.note},
         {"elapsed_ms", r.elapsed_ms}};
  if (!r.per_pattern.empty()) {
    json rows = json::array();
    for (auto& row : r.per_pattern)
      rows.push_back({{"word", row.word}, {"lhs", row.lhs}, {"rhs", row.rhs}});
    j["per_pattern"] = rows;
  }
  if (r.witness)
    j["witness"] = {{"word", r.witness->word},
                    {"lhs", r.witness->lhs},
                    {"rhs", r.witness->rhs}};
  return j;
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out)
    fpl::fail("IoError", "cannot write " + path);
  out << doc.dump(2) << '\n';
}

void print_report(const fpl::VerificationReport& r) {
  std::cout << r.identity << " n=" << r.size << ": " << r.status;
  if (r.status == "skipped" && !r.rhs.empty())
    std::cout << " [formula side " << r.rhs << "]";
  else if (r.status == "verified" && !r.lhs.empty() && r.lhs == r.rhs &&
           r.lhs.find_first_not_of("0123456789/") == std::string::npos)
    std::cout << " [" << r.lhs << "]";
  std::cout << " (" << r.elapsed_ms << " ms)\n";
  if (r.witness)
    std::cout << "  witness " << r.witness->word << ": lhs " << r.witness->lhs
              << " vs rhs " << r.witness->rhs << "\n";
  if (!r.note.empty())
    std::cout << "  note: " << r.note << "\n";
}

// "K" or "A..B"
std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int k = std::stoi(s);
    return {k, k};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

struct CommonOpts {
  int size = 0;
  std::string cls = "plain";
  int jobs = 1;
  bool force = false;
  std::string json_path;
  std::string cache_dir;
};

void apply_cache_dir(const CommonOpts& o) {
  if (!o.cache_dir.empty())
    setenv("FPLAB_CACHE_DIR", o.cache_dir.c_str(), 1);
}

int run_count(const CommonOpts& o, bool refined, bool formula_only) {
  apply_cache_dir(o);
  fpl::SymmetryClass cls = fpl::symmetry_class_from_string(o.cls);
  fpl::check_size(cls, o.size);
  if (formula_only) {
    if (refined)
      fpl::fail("IncompatibleSize", "no closed form for refined counts");
    fpl::BigInt v;
    switch (cls) {
      case fpl::SymmetryClass::Plain: v = fpl::asm_count(o.size); break;
      case fpl::SymmetryClass::HalfTurn: v = fpl::ht_asm_count(o.size); break;
      case fpl::SymmetryClass::QuarterTurn: v = fpl::qt_count_product(o.size); break;
      default: v = fpl::qqt_count_product(o.size); break;
    }
    std::cout << fpl::str(v) << "\n";
    if (!o.json_path.empty())
      write_json(o.json_path, json{{"op", "count"},
                                   {"class", o.cls},
                                   {"size", o.size},
                                   {"method", "formula"},
                                   {"value", fpl::str(v)}});
    return 0;
  }
  fpl::CacheKey key{refined ? "refined" : "count", o.cls, o.size};
  json payload;
  if (auto hit = fpl::cache_load(key); hit && !o.force) {
    payload = *hit;
  } else if (refined) {
    auto v = fpl::refined_counts(o.size, cls, o.jobs);
    payload = json::array();
    for (auto& c : v)
      payload.push_back(fpl::str(c));
    fpl::cache_store(key, payload);
  } else {
    payload = fpl::str(fpl::count_class(o.size, cls, o.jobs));
    fpl::cache_store(key, payload);
  }
  if (refined) {
    std::string line;
    for (auto& c : payload)
      line += (line.empty() ? "" : " ") + c.get<std::string>();
    std::cout << line << "\n";
    if (!o.json_path.empty())
      write_json(o.json_path, json{{"op", "refined"},
                                   {"class", o.cls},
                                   {"size", o.size},
                                   {"values", payload}});
  } else {
    std::cout << payload.get<std::string>() << "\n";
    if (!o.json_path.empty())
      write_json(o.json_path, json{{"op", "count"},
                                   {"class", o.cls},
                                   {"size", o.size},
                                   {"method", "enumeration"},
                                   {"value", payload}});
  }
  return 0;
}

int run_patterns(const CommonOpts& o) {
  apply_cache_dir(o);
  fpl::SymmetryClass cls = fpl::symmetry_class_from_string(o.cls);
  fpl::check_size(cls, o.size);
  fpl::CacheKey key{"patterns", o.cls, o.size};
  json payload;
  if (auto hit = fpl::cache_load(key); hit && !o.force) {
    payload = *hit;
  } else {
    payload = json::object();
    for (auto& [w, c] : fpl::pattern_counts(o.size, cls, o.jobs))
      payload[w] = fpl::str(c);
    fpl::cache_store(key, payload);
  }
  fpl::BigInt total = 0;
  for (auto& [w, c] : payload.items()) {
    std::cout << w << " " << c.get<std::string>() << "\n";
    total += fpl::BigInt(c.get<std::string>());
  }
  std::cout << "total " << fpl::str(total) << "\n";
  if (!o.json_path.empty())
    write_json(o.json_path, json{{"op", "patterns"},
                                 {"class", o.cls},
                                 {"size", o.size},
                                 {"counts", payload},
                                 {"total", fpl::str(total)}});
  return 0;
}

int run_verify(const std::string& name, const std::string& range, int max_n,
               const CommonOpts& o) {
  apply_cache_dir(o);
  fpl::Identity id = fpl::identity_from_string(name);
  int lo = 1, hi;
  if (!range.empty()) {
    auto [a, b] = parse_range(range);
    lo = a;
    hi = b;
  } else if (max_n > 0) {
    hi = max_n;
  } else {
    hi = fpl::identity_ceiling(id);
  }
  fpl::VerifyOptions opt{o.force, o.jobs};
  json all = json::array();
  bool refuted = false;
  for (int n = lo; n <= hi; ++n) {
    fpl::VerificationReport r = fpl::verify_identity(id, n, opt);
    print_report(r);
    all.push_back(report_json(r));
    refuted |= r.status == "refuted";
  }
  if (!o.json_path.empty())
    write_json(o.json_path, all);
  return refuted ? 2 : 0;
}

int run_tilings(const std::string& target, int n, int p, int k, bool holed,
                const std::string& method, const CommonOpts& o) {
  std::string value;
  if (target == "qcsscpp") {
    fpl::BigInt v;
    if (method == "brute") {
      v = fpl::count_matchings_int(
          fpl::rotation_quotient(fpl::hexagon_region(2 * n + 1, true), 6));
    } else if (method == "lgv") {
      v = fpl::lgv_count(n);
    } else if (method == "ciucu") {
      fpl::MatchRegion g =
          fpl::rotation_quotient(fpl::hexagon_region(2 * n + 1, true), 6);
      fpl::CiucuCut cut = fpl::ciucu_factorize(g);
      fpl::Rational total = fpl::count_matchings(cut.cut) * fpl::Rational(cut.factor);
      if (boost::multiprecision::denominator(total) != 1)
        fpl::fail("NotReflective", "cut count is not integral");
      v = fpl::BigInt(boost::multiprecision::numerator(total));
    } else if (method == "formula") {
      v = fpl::qcsscpp_closed_form(n);
    } else {
      fpl::fail("UnknownIdentity", "no method named '" + method + "'");
    }
    value = fpl::str(v);
  } else if (target == "cssc") {
    value = fpl::str(fpl::cssc_count(p));
  } else if (target == "matchings") {
    value = fpl::str(fpl::count_matchings_int(fpl::hexagon_region(k, holed)));
  } else {
    fpl::fail("UnknownIdentity", "no tiling target named '" + target + "'");
  }
  std::cout << value << "\n";
  if (!o.json_path.empty())
    write_json(o.json_path, json{{"op", "tilings"},
                                 {"target", target},
                                 {"method", method},
                                 {"value", value}});
  return 0;
}

int run_dump(const CommonOpts& o, long limit) {
  fpl::SymmetryClass cls = fpl::symmetry_class_from_string(o.cls);
  fpl::check_size(cls, o.size);
  long seen = 0;
  fpl::for_each_asm(o.size, cls, [&](const fpl::Asm& m) {
    if (limit > 0 && seen >= limit)
      return;
    ++seen;
    std::cout << fpl::to_text(m) << "\n\n";
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for fully packed loops under rotational symmetry"};
  app.require_subcommand(1);

  CommonOpts o;
  bool refined = false, formula_only = false, holed = false;
  std::string identity, range, method = "brute", target;
  int max_n = 0, tn = 1, tp = 2, tk = 1;
  long limit = 0;

  auto add_common = [&](CLI::App* cmd, bool with_size) {
    if (with_size)
      cmd->add_option("--size", o.size, "grid side length")->required();
    cmd->add_option("--jobs", o.jobs, "worker threads");
    cmd->add_option("--json", o.json_path, "write a JSON result here");
    cmd->add_option("--cache-dir", o.cache_dir, "override the cache directory");
    cmd->add_flag("--force", o.force,
                  "recompute, ignoring cached entries and size ceilings");
  };

  auto* count = app.add_subcommand("count", "count one symmetry class exactly");
  add_common(count, true);
  count->add_option("--class", o.cls, "plain, ht, qt, or qqt");
  count->add_flag("--refined", refined, "split by the top boundary contact");
  count->add_flag("--formula-only", formula_only, "use the closed form, no enumeration");

  auto* patterns = app.add_subcommand("patterns", "tally link patterns in a class");
  add_common(patterns, true);
  patterns->add_option("--class", o.cls, "plain, ht, qt, or qqt");

  auto* verify = app.add_subcommand("verify", "check a counting identity");
  verify->add_option("identity", identity, "which identity to check")->required();
  verify->add_option("--n", range, "parameter K or range A..B");
  verify->add_option("--max-n", max_n, "check parameters 1..M");
  add_common(verify, false);

  auto* tilings = app.add_subcommand("tilings", "matching counts on the triangular lattice");
  tilings->add_option("target", target, "qcsscpp, cssc, or matchings")->required();
  tilings->add_option("--n", tn, "quotient parameter");
  tilings->add_option("--p", tp, "even hexagon side");
  tilings->add_option("--k", tk, "hexagon side");
  tilings->add_flag("--holed", holed, "remove the central hexagon");
  tilings->add_option("--method", method, "brute, lgv, ciucu, or formula");
  add_common(tilings, false);

  auto* dump = app.add_subcommand("dump", "print every matrix in a class");
  add_common(dump, true);
  dump->add_option("--class", o.cls, "plain, ht, qt, or qqt");
  dump->add_option("--limit", limit, "stop after this many");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed())
      return run_count(o, refined, formula_only);
    if (patterns->parsed())
      return run_patterns(o);
    if (verify->parsed())
      return run_verify(identity, range, max_n, o);
    if (tilings->parsed())
      return run_tilings(target, tn, tp, tk, holed, method, o);
    return run_dump(o, limit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
