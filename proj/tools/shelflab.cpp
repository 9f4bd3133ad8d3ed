// shelflab command-line tool: axiom reports, enumeration, free structures,
// Laver tables, block spindles, exact homology, and the bundled
// verification suite.

#include "shelflab/blockspindle.hpp"
#include "shelflab/enumerate.hpp"
#include "shelflab/freealg.hpp"
#include "shelflab/golden.hpp"
#include "shelflab/homology.hpp"
#include "shelflab/laver.hpp"
#include "shelflab/magma.hpp"
#include "shelflab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::json;
using namespace shelflab;

constexpr const char* kVersion = "shelflab 1.0.0";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

/// Cache lookup keyed by subcommand plus canonical inputs; SHELFLAB_CACHE
/// unset disables caching entirely.
std::string cached(const std::string& key, const std::function<std::string()>& compute) {
  const char* dir = std::getenv("SHELFLAB_CACHE");
  if (!dir || !*dir) return compute();
  std::filesystem::path cache_dir(dir);
  std::filesystem::create_directories(cache_dir);
  std::filesystem::path file = cache_dir / (fnv1a_hex(key) + ".out");
  if (std::filesystem::exists(file)) return read_file(file.string());
  std::string out = compute();
  std::ofstream of(file, std::ios::binary);
  of << out;
  return out;
}

json axiom_report_json(const FiniteMagma& m, const AxiomReport& ax) {
  json j;
  j["schema"] = 1;
  j["order"] = m.order();
  j["shelf"] = ax.shelf;
  j["idempotent"] = ax.idempotent;
  j["rack"] = ax.rack;
  j["spindle"] = ax.spindle;
  j["quandle"] = ax.quandle;
  j["associative"] = ax.associative;
  j["quasigroup"] = ax.quasigroup;
  j["unital"] = ax.unital;
  j["proto_unital"] = ax.proto_unital;
  j["pre_unital"] = ax.pre_unital;
  if (ax.unit) j["unit"] = *ax.unit;
  else j["unit"] = nullptr;
  j["right_fixed"] = json::array();
  for (auto& [r, c] : ax.right_fixed) j["right_fixed"].push_back({r, c});
  j["right_zeros"] = ax.right_zeros;
  return j;
}

std::string run_axioms(const std::string& file, bool as_json) {
  FiniteMagma m = parse_cay(read_file(file));
  AxiomReport ax = check_axioms(m);
  if (as_json) return axiom_report_json(m, ax).dump(2) + "\n";
  std::ostringstream out;
  auto flag = [&](const char* name, bool v) { out << name << ": " << (v ? "yes" : "no") << "\n"; };
  out << "order: " << m.order() << "\n";
  flag("shelf", ax.shelf);
  flag("idempotent", ax.idempotent);
  flag("spindle", ax.spindle);
  flag("rack", ax.rack);
  flag("quandle", ax.quandle);
  flag("associative", ax.associative);
  flag("quasigroup", ax.quasigroup);
  flag("proto-unital", ax.proto_unital);
  flag("pre-unital", ax.pre_unital);
  flag("unital", ax.unital);
  if (ax.unit) out << "unit: " << *ax.unit << "\n";
  out << "right-fixed:";
  for (auto& [r, c] : ax.right_fixed) out << " (" << r << "," << c << ")";
  out << "\nright-zeros:";
  for (int r : ax.right_zeros) out << " " << r;
  out << "\n";
  return out.str();
}

Axiom axiom_from_name(const std::string& name) {
  if (name == "shelf") return Axiom::shelf;
  if (name == "spindle") return Axiom::spindle;
  if (name == "associative") return Axiom::associative;
  if (name == "unital") return Axiom::unital;
  if (name == "proto-unital" || name == "proto_unital") return Axiom::proto_unital;
  if (name == "pre-unital" || name == "pre_unital") return Axiom::pre_unital;
  if (name == "rack") return Axiom::rack;
  if (name == "quandle") return Axiom::quandle;
  if (name == "quasigroup") return Axiom::quasigroup;
  throw std::invalid_argument("unknown axiom: " + name);
}

std::string run_enumerate(int n, const std::string& axioms_csv, const std::string& mode,
                          bool witnesses, bool allow5, bool as_json) {
  EnumerationQuery q;
  q.order = n;
  std::istringstream ss(axioms_csv);
  std::string part;
  while (std::getline(ss, part, ',')) q.axioms.insert(axiom_from_name(part));
  if (mode == "labeled") q.mode = CountMode::labeled;
  else if (mode == "iso") q.mode = CountMode::iso_classes;
  else throw std::invalid_argument("mode must be labeled or iso");
  q.collect_witnesses = witnesses;
  q.allow_order5 = allow5;
  CountReport rep = enumerate_magmas(q);
  if (as_json) {
    json j;
    j["schema"] = 1;
    j["order"] = n;
    j["axioms"] = axioms_csv;
    j["mode"] = mode;
    j["count"] = rep.count;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "count: " << rep.count << "\n";
  for (const FiniteMagma& w : rep.witnesses) out << "\n" << to_cay(w);
  return out.str();
}

std::string run_survey(int nmax) {
  std::ostringstream out;
  out << "n  AS  (ref)  ASp (ref)  US  (ref)  pre-unital(n-1)\n";
  for (const CountSurveyRow& r : count_survey(nmax)) {
    out << r.n << "  " << r.assoc_shelves << " (" << r.ref_as << (r.as_match ? "" : " MISMATCH")
        << ")  " << r.assoc_spindles << " (" << r.ref_asp << (r.asp_match ? "" : " MISMATCH")
        << ")  " << r.unital_shelves << " (" << r.ref_us << (r.us_match ? "" : " differs")
        << ")  " << r.pre_unital_prev << "\n";
  }
  return out.str();
}

std::string run_free(const std::string& kind_name, int n, int max_len, bool diagnostics) {
  FreeKind kind;
  if (kind_name == "fas") kind = FreeKind::fas;
  else if (kind_name == "fpus") kind = FreeKind::fpus;
  else if (kind_name == "fptus") kind = FreeKind::fptus;
  else if (kind_name == "fus") kind = FreeKind::fus;
  else throw std::invalid_argument("kind must be fas, fpus, fptus, or fus");

  FreeTable ft;
  switch (kind) {
    case FreeKind::fas: ft = fas_build(n, max_len); break;
    case FreeKind::fpus: ft = fpus_build(n); break;
    case FreeKind::fptus: ft = fptus_build(n); break;
    case FreeKind::fus: ft = fus_build(n); break;
  }
  std::ostringstream out;
  write_cay(out, ft.table);
  for (std::size_t i = 0; i < ft.elements.size(); ++i) {
    std::string w = word_to_string(ft.elements[i]);
    out << "# " << i << ": " << (w.empty() ? "(empty)" : w) << "\n";
  }
  if (diagnostics && kind == FreeKind::fas) {
    FasCensus census = fas_census(ft);
    out << "# census: repeat-free " << census.repeat_free << ", prepended " << census.prepended
        << ", doubled repeat-free " << census.doubled_repeat_free << ", doubled prepended "
        << census.doubled_prepended << ", other " << census.other << "\n";
    FasAlternateForms alt = fas_alternate_count_forms(std::min(n + 2, 6));
    out << "# alternate closed form:";
    for (std::size_t i = 1; i < alt.closed_form.size(); ++i) out << " " << alt.closed_form[i];
    out << "\n# alternate one-term recursion:";
    for (std::size_t i = 1; i < alt.one_term_rec.size(); ++i) out << " " << alt.one_term_rec[i];
    out << "\n# (these disagree with the table sizes; kept for inspection only)\n";
  }
  return out.str();
}

std::string run_laver(int k, bool do_transpose, bool annotate, bool pretty) {
  LaverTable lt = laver_build(k);
  FiniteMagma m = do_transpose ? transpose(lt.magma) : lt.magma;
  std::ostringstream out;
  if (pretty) {
    const int n = m.order();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) out << (y ? " " : "") << m.at(x, y) + 1;
      out << "\n";
    }
  } else {
    write_cay(out, m);
  }
  if (annotate && k >= 1) {
    LaverRightStructure s = laver_right_structure(k);
    out << "# right fixed element (1-indexed): " << s.right_fixed.first << " -> "
        << s.right_fixed.second << "\n";
    out << "# identity column (1-indexed): " << s.identity_column << "\n";
    out << "# all right-fixed pairs:";
    for (auto& [r, c] : s.all_right_fixed) out << " (" << r << "," << c << ")";
    out << "\n# bijective columns:";
    for (int y : s.bijective_columns) out << " " << y;
    out << "\n";
  }
  return out.str();
}

std::string run_spindle(const std::string& spec_file) {
  std::istringstream in(read_file(spec_file));
  BlockSpec spec = parse_block_spec(in);
  return to_cay(make_block_spindle(spec));
}

std::string run_homology(const std::string& file, const std::string& theory_str, int q,
                         bool reduced, bool triplets) {
  Theory th;
  if (theory_str == "one-term") th = Theory::one_term;
  else if (theory_str == "two-term") th = Theory::two_term;
  else throw std::invalid_argument("theory must be one-term or two-term");
  FiniteMagma m = parse_cay(read_file(file));
  if (triplets) {  // boundary matrices in degrees q and q+1, for external checks
    std::ostringstream out;
    write_triplets(out, boundary_matrix(m, th, q));
    out << "\n";
    write_triplets(out, boundary_matrix(m, th, q + 1));
    return out.str();
  }
  HomologyGroup h = homology(m, th, q, reduced);
  json j;
  j["schema"] = 1;
  j["theory"] = theory_str;
  j["q"] = q;
  j["reduced"] = reduced;
  j["free_rank"] = h.free_rank;
  j["torsion"] = json::array();
  for (const Int& d : h.torsion) {
    if (d > std::numeric_limits<std::int64_t>::max())
      throw std::runtime_error("torsion factor exceeds the JSON integer range");
    j["torsion"].push_back(static_cast<std::int64_t>(d));
  }
  return j.dump(2) + "\n";
}

int run_verify(bool deep, bool as_json) {
  VerifyOptions opt;
  opt.deep = deep;
  std::vector<CheckResult> results = run_verification(opt);
  bool all = true;
  if (as_json) {
    json arr = json::array();
    for (const CheckResult& r : results) {
      all = all && r.passed;
      json j;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["detail"] = r.detail;
      j["seconds"] = r.seconds;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      all = all && r.passed;
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " ("
                << std::fixed << std::setprecision(2) << r.seconds << "s)";
      if (!r.detail.empty()) std::cout << " - " << r.detail;
      std::cout << "\n";
    }
    std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite shelves: axioms, enumeration, free structures, Laver tables, homology"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress the version banner");

  auto* ax_cmd = app.add_subcommand("axioms", "axiom report for a Cayley table");
  std::string ax_file;
  bool ax_json = false;
  ax_cmd->add_option("file", ax_file, "input .cay file")->required();
  ax_cmd->add_flag("--json", ax_json, "JSON output");

  auto* en_cmd = app.add_subcommand("enumerate", "count magmas satisfying an axiom set");
  int en_n = 1;
  std::string en_axioms, en_mode = "iso";
  bool en_witness = false, en_allow5 = false;
  int en_survey = 0;
  bool en_json = false;
  en_cmd->add_option("--n", en_n, "order");
  en_cmd->add_option("--axioms", en_axioms, "comma-separated axiom list");
  en_cmd->add_option("--mode", en_mode, "labeled or iso (default iso)");
  en_cmd->add_flag("--witnesses", en_witness, "emit the tables found, as .cay blocks");
  en_cmd->add_flag("--allow-order-5", en_allow5, "permit order-5 searches");
  en_cmd->add_option("--survey", en_survey,
                     "print the associative shelf/spindle/unital survey up to this order");
  en_cmd->add_flag("--json", en_json, "JSON output");

  auto* fr_cmd = app.add_subcommand("free", "build a free structure table with legend");
  std::string fr_kind;
  int fr_n = 2, fr_maxlen = 8;
  bool fr_diag = false;
  fr_cmd->add_option("--kind", fr_kind, "fas, fpus, fptus, or fus")->required();
  fr_cmd->add_option("--n", fr_n, "number of generators")->required();
  fr_cmd->add_option("--max-len", fr_maxlen, "closure length bound (fas only, default 8)");
  fr_cmd->add_flag("--diagnostics", fr_diag, "append the normal-form census (fas only)");

  auto* lv_cmd = app.add_subcommand("laver", "emit a Laver table");
  int lv_k = 2;
  bool lv_transpose = false, lv_annotate = false, lv_pretty = false;
  lv_cmd->add_option("--k", lv_k, "table size exponent, order 2^k")->required();
  lv_cmd->add_flag("--transpose", lv_transpose, "emit the right self-distributive transpose");
  lv_cmd->add_flag("--annotate", lv_annotate, "append the right-fixed/identity-column report");
  lv_cmd->add_flag("--pretty", lv_pretty, "print 1-indexed rows instead of .cay");

  auto* sp_cmd = app.add_subcommand("spindle", "build an f-block spindle from a spec file");
  std::string sp_file;
  sp_cmd->add_option("--spec", sp_file, "block spec file")->required();

  auto* hm_cmd = app.add_subcommand("homology", "exact homology of a shelf");
  std::string hm_theory = "one-term", hm_file;
  int hm_q = 0;
  bool hm_reduced = false, hm_triplets = false;
  hm_cmd->add_option("--theory", hm_theory, "one-term or two-term")->required();
  hm_cmd->add_option("--q", hm_q, "degree")->required();
  hm_cmd->add_flag("--reduced", hm_reduced, "reduced groups (one-term only)");
  hm_cmd->add_flag("--triplets", hm_triplets,
                   "emit the boundary matrices in triplet form instead of the group");
  hm_cmd->add_option("file", hm_file, "input .cay file")->required();

  auto* vp_cmd = app.add_subcommand("verify-paper", "run the bundled verification suite");
  bool vp_deep = false, vp_json = false;
  vp_cmd->add_flag("--deep", vp_deep,
                   "raise depth: three-letter free shelf, degree 3, order-5 sweep");
  vp_cmd->add_flag("--json", vp_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (!quiet) std::cout << kVersion << "\n";

  try {
    if (ax_cmd->parsed()) {
      std::string key = "axioms|" + std::to_string(ax_json) + "|" + read_file(ax_file);
      std::cout << cached(key, [&] { return run_axioms(ax_file, ax_json); });
      return 0;
    }
    if (en_cmd->parsed()) {
      if (en_survey > 0) {
        std::cout << cached("survey|" + std::to_string(en_survey),
                            [&] { return run_survey(en_survey); });
        return 0;
      }
      std::ostringstream key;
      key << "enumerate|" << en_n << "|" << en_axioms << "|" << en_mode << "|" << en_witness
          << "|" << en_allow5 << "|" << en_json;
      std::cout << cached(key.str(), [&] {
        return run_enumerate(en_n, en_axioms, en_mode, en_witness, en_allow5, en_json);
      });
      return 0;
    }
    if (fr_cmd->parsed()) {
      std::ostringstream key;
      key << "free|" << fr_kind << "|" << fr_n << "|" << fr_maxlen << "|" << fr_diag;
      std::cout << cached(key.str(), [&] { return run_free(fr_kind, fr_n, fr_maxlen, fr_diag); });
      return 0;
    }
    if (lv_cmd->parsed()) {
      std::ostringstream key;
      key << "laver|" << lv_k << "|" << lv_transpose << "|" << lv_annotate << "|" << lv_pretty;
      std::cout << cached(key.str(),
                          [&] { return run_laver(lv_k, lv_transpose, lv_annotate, lv_pretty); });
      return 0;
    }
    if (sp_cmd->parsed()) {
      std::string key = "spindle|" + read_file(sp_file);
      std::cout << cached(key, [&] { return run_spindle(sp_file); });
      return 0;
    }
    if (hm_cmd->parsed()) {
      std::string key = "homology|" + hm_theory + "|" + std::to_string(hm_q) + "|" +
                        std::to_string(hm_reduced) + "|" + std::to_string(hm_triplets) + "|" +
                        read_file(hm_file);
      std::cout << cached(key, [&] {
        return run_homology(hm_file, hm_theory, hm_q, hm_reduced, hm_triplets);
      });
      return 0;
    }
    if (vp_cmd->parsed()) {
      return run_verify(vp_deep, vp_json);  // never cached; always recomputes
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
