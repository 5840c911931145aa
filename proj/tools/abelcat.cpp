#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "abelcat/diagram.hpp"
#include "abelcat/embedding.hpp"
#include "abelcat/generators.hpp"
#include "abelcat/injectivity.hpp"
#include "abelcat/json_io.hpp"
#include "abelcat/ops.hpp"
#include "abelcat/snf.hpp"

using namespace abelcat;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AbelError(ErrKind::parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json json_int(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return ordered_json(v.convert_to<long long>());
  return ordered_json(v.str());
}

ordered_json json_matrix(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json json_vec(const IntVec& v) {
  ordered_json out = ordered_json::array();
  for (const Int& t : v) out.push_back(json_int(t));
  return out;
}

ordered_json json_presentation(FpCategory& c, ObjHandle h) {
  const FpModule& m = c.module(h);
  ordered_json cols = ordered_json::array();
  for (std::size_t k = 0; k < m.relations.cols(); ++k) {
    ordered_json col = ordered_json::array();
    for (std::size_t i = 0; i < m.gens; ++i) col.push_back(json_int(m.relations.at(i, k)));
    cols.push_back(std::move(col));
  }
  return ordered_json{{"gens", m.gens}, {"relations", std::move(cols)}};
}

void emit(const ordered_json& report, const std::string& format,
          const std::vector<std::string>& text_lines) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& line : text_lines) std::cout << line << "\n";
  }
}

std::string join_path(const std::vector<std::string>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += " ";
    out += path[i];
  }
  return out;
}

/* ---- check ------------------------------------------------------------- */

int run_check(const std::string& file, const std::string& format) {
  FpCategory c;
  InputDocument doc = parse_input(c, slurp(file));
  CommuteReport cr = check_commutes(c, doc.diagram);
  ExactClaimReport er = check_exact_claims(c, doc.diagram);
  bool ok = cr.ok && er.ok;

  ordered_json jf = ordered_json::array();
  std::vector<std::string> lines;
  for (const auto& f : cr.failures) {
    jf.push_back(ordered_json{{"lhs", f.lhs}, {"rhs", f.rhs}});
    lines.push_back("commute failure: [" + join_path(f.lhs) + "] vs [" +
                    join_path(f.rhs) + "]");
  }
  ordered_json je = ordered_json::array();
  for (std::size_t idx : er.failed) {
    je.push_back(idx);
    lines.push_back("exact claim " + std::to_string(idx) + " failed");
  }
  lines.push_back(ok ? "all checks passed" : "checks failed");

  ordered_json rep{{"command", "check"},
                   {"ok", ok},
                   {"commutes", ordered_json{{"ok", cr.ok}, {"failures", std::move(jf)}}},
                   {"exact", ordered_json{{"ok", er.ok}, {"failed", std::move(je)}}}};
  emit(rep, format, lines);
  return ok ? 0 : 1;
}

/* ---- snf --------------------------------------------------------------- */

int run_snf(const std::string& file, const std::string& format) {
  ordered_json j;
  try {
    j = ordered_json::parse(slurp(file));
  } catch (const std::exception& e) {
    throw AbelError(ErrKind::parse, std::string("/: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("matrix"))
    throw AbelError(ErrKind::parse, "/matrix: missing");
  const auto& jm = j["matrix"];
  if (!jm.is_array()) throw AbelError(ErrKind::parse, "/matrix: expected rows");
  std::size_t rows = jm.size();
  std::size_t cols = rows ? jm[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!jm[i].is_array() || jm[i].size() != cols)
      throw AbelError(ErrKind::parse,
                      "/matrix/" + std::to_string(i) + ": ragged row");
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& cell = jm[i][k];
      std::string cp =
          "/matrix/" + std::to_string(i) + "/" + std::to_string(k);
      if (cell.is_number_integer()) {
        m.at(i, k) = Int(cell.get<long long>());
      } else if (cell.is_string()) {
        try {
          m.at(i, k) = Int(cell.get<std::string>());
        } catch (const std::exception&) {
          throw AbelError(ErrKind::parse, cp + ": expected an integer");
        }
      } else {
        throw AbelError(ErrKind::parse, cp + ": expected an integer");
      }
    }
  }

  SnfResult s = snf(m);
  if (!(s.u * m * s.v == s.d))
    throw AbelError(ErrKind::internal_check, "decomposition identity failed");

  IntVec diag;
  ordered_json factors = ordered_json::array();
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
    diag.push_back(s.diag(i));
    if (s.diag(i) > 1) factors.push_back(json_int(s.diag(i)));
  }
  ordered_json rep{{"command", "snf"},     {"rank", s.rank},
                   {"diag", json_vec(diag)}, {"factors", std::move(factors)},
                   {"u", json_matrix(s.u)}, {"v", json_matrix(s.v)}};

  std::vector<std::string> lines;
  std::string dstr = "diag:";
  for (const Int& t : diag) dstr += " " + t.str();
  lines.push_back(dstr);
  lines.push_back("rank: " + std::to_string(s.rank));
  emit(rep, format, lines);
  return 0;
}

/* ---- embed ------------------------------------------------------------- */

int run_embed(const std::string& file, const std::vector<std::string>& names,
              std::uint64_t seed, std::size_t count, std::uint64_t cap,
              const std::string& format) {
  FpCategory c;
  InputDocument doc = parse_input(c, slurp(file));
  std::vector<std::string> chosen = !names.empty() ? names : doc.subcategory;
  if (chosen.empty())
    for (const auto& [name, h] : doc.diagram.objects) chosen.push_back(name);
  std::vector<ObjHandle> universe;
  for (const auto& name : chosen) {
    auto it = doc.diagram.objects.find(name);
    if (it == doc.diagram.objects.end())
      throw AbelError(ErrKind::invalid_input, "unknown object '" + name + "'");
    universe.push_back(it->second);
  }

  EmbedReport r = check_embedding(c, universe, seed, count, cap);
  ordered_json rep{{"command", "embed"},
                   {"ok", r.ok()},
                   {"ring_ok", r.ring_ok},
                   {"action_ok", r.action_ok},
                   {"functor_ok", r.functor_ok},
                   {"exact_ok", r.exact_ok},
                   {"faithful_ok", r.faithful_ok},
                   {"count_ok", r.count_ok},
                   {"full_ok", r.full_ok},
                   {"reflect_ok", r.reflect_ok},
                   {"ses_checked", r.ses_checked},
                   {"pairs_checked", r.pairs_checked},
                   {"witnesses", r.witnesses}};
  std::vector<std::string> lines;
  auto flag = [&](const char* n, bool v) {
    lines.push_back(std::string(n) + ": " + (v ? "ok" : "FAILED"));
  };
  flag("ring laws", r.ring_ok);
  flag("module action", r.action_ok);
  flag("functoriality", r.functor_ok);
  flag("exactness preserved", r.exact_ok);
  flag("faithful", r.faithful_ok);
  flag("hom counts match", r.count_ok);
  flag("full", r.full_ok);
  flag("nonexactness reflected", r.reflect_ok);
  lines.push_back("short exact sequences checked: " + std::to_string(r.ses_checked));
  lines.push_back("object pairs checked: " + std::to_string(r.pairs_checked));
  lines.push_back("witnesses reconstructed: " + std::to_string(r.witnesses));
  lines.push_back(r.ok() ? "all checks passed" : "checks failed");
  emit(rep, format, lines);
  return r.ok() ? 0 : 1;
}

/* ---- injective --------------------------------------------------------- */

int run_injective(const std::string& file, const std::string& object,
                  bool envelope, long long max_card, const std::string& format) {
  FpCategory c;
  InputDocument doc = parse_input(c, slurp(file));
  auto it = doc.diagram.objects.find(object);
  if (it == doc.diagram.objects.end())
    throw AbelError(ErrKind::invalid_input, "unknown object '" + object + "'");
  ObjHandle a = it->second;
  RingSpec ring = c.ring_of(a);

  std::vector<Mor> universe = mono_universe(c, ring, 2, Int(max_card));
  InjectivityVerdict v = injectivity_verdict(c, a, universe);

  ordered_json rep{{"command", "injective"},
                   {"object", object},
                   {"baer", v.baer},
                   {"brute", *v.brute},
                   {"universe_monos", universe.size()}};
  std::vector<std::string> lines;
  lines.push_back("object: " + object);
  lines.push_back(std::string("baer: ") + (v.baer ? "injective" : "not injective"));
  lines.push_back(std::string("brute: ") + (*v.brute ? "injective" : "not injective"));
  if (v.baer_witness) {
    rep["baer_witness"] = ordered_json{{"ideal", json_int(v.baer_witness->ideal)},
                                       {"element", json_vec(v.baer_witness->element)}};
    lines.push_back("failing ideal: (" + v.baer_witness->ideal.str() + ")");
  }
  if (v.extension_witness) {
    rep["extension_witness"] =
        ordered_json{{"mono", json_matrix(v.extension_witness->mono.map)},
                     {"hom", json_matrix(v.extension_witness->hom.map)}};
  }
  if (envelope) {
    Envelope e = injective_envelope(c, a);
    bool minimal = envelope_minimal(c, e.inc);
    rep["envelope"] = ordered_json{{"object", json_presentation(c, e.obj)},
                                   {"matrix", json_matrix(e.inc.map)},
                                   {"minimal", minimal}};
    lines.push_back("envelope cardinality: " + c.cardinality(e.obj)->str());
    lines.push_back(std::string("envelope minimal: ") + (minimal ? "yes" : "no"));
  }
  emit(rep, format, lines);
  return 0;
}

/* ---- lemmas ------------------------------------------------------------ */

struct SuiteResult {
  std::string name;
  std::size_t runs = 0;
  std::size_t failures = 0;
};

SuiteResult suite_kernel_cokernel(FpCategory& c, Rng& rng, std::size_t count) {
  SuiteResult s{"kernel-cokernel-duality"};
  GenBounds b{3, 3, 6};
  for (std::size_t t = 0; t < count; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    Mor m = gen_mono(c, rng, ring, b);
    Mor e = gen_epic(c, rng, ring, b);
    Mor km = c.kernel(c.cokernel(m).map).map;
    Mor qe = c.cokernel(c.kernel(e).map).map;
    bool ok = sub_equal(c, SubObject{km}, SubObject{m}) &&
              quot_equal(c, QuotientObject{qe}, QuotientObject{e});
    ++s.runs;
    if (!ok) ++s.failures;
  }
  return s;
}

SuiteResult suite_balanced(FpCategory& c, Rng& rng, std::size_t count) {
  SuiteResult s{"balanced"};
  for (std::size_t t = 0; t < count; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    std::size_t n = 1 + rng.below(3);
    IntMatrix raw(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) raw.at(i, j) = rng.int_in(-6, 6);
    // The row-operation factor of any SNF run is unimodular, hence an
    // automorphism of the free module.
    IntMatrix u = snf(raw).u;
    ObjHandle fr = c.intern(FpModule::free_module(ring, n));
    Mor f = c.make_morphism(fr, fr, u);
    bool ok = is_monic(c, f) && is_epic(c, f);
    if (ok) {
      Mor g = invert(c, f);
      ok = c.mor_equal(c.compose(g, f), c.identity(fr)) &&
           c.mor_equal(c.compose(f, g), c.identity(fr));
    }
    ++s.runs;
    if (!ok) ++s.failures;
  }
  return s;
}

SuiteResult suite_hom_group(FpCategory& c, Rng& rng, std::size_t count) {
  SuiteResult s{"hom-group-laws"};
  GenBounds b{3, 3, 6};
  for (std::size_t t = 0; t < count; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    ObjHandle a = gen_object(c, rng, ring, b);
    ObjHandle d = gen_object(c, rng, ring, b);
    Mor f = gen_hom(c, rng, a, d);
    Mor g = gen_hom(c, rng, a, d);
    Mor h = gen_hom(c, rng, a, d);
    Mor z = c.zero_mor(a, d);
    bool ok = c.mor_equal(add_mor(c, f, g), add_mor_via_codiagonal(c, f, g)) &&
              c.mor_equal(add_mor(c, f, g), add_mor(c, g, f)) &&
              c.mor_equal(add_mor(c, add_mor(c, f, g), h),
                          add_mor(c, f, add_mor(c, g, h))) &&
              c.mor_equal(add_mor(c, f, z), f) &&
              c.mor_equal(add_mor(c, f, neg_mor(c, f)), z);
    ++s.runs;
    if (!ok) ++s.failures;
  }
  return s;
}

SuiteResult suite_exactness(FpCategory& c, Rng& rng, std::size_t count) {
  SuiteResult s{"exactness-criteria"};
  GenBounds b{3, 3, 6};
  for (std::size_t t = 0; t < count; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    bool ok;
    if (t % 2 == 0) {
      // A short exact sequence: all three conditions must agree (and hold).
      SesData ses = gen_ses(c, rng, ring, b);
      PairConditions pc = exactness_conditions(c, ses.inc, ses.proj);
      ok = pc.agree() && pc.image_eq_kernel;
    } else {
      ObjHandle a = gen_object(c, rng, ring, b);
      ObjHandle d = gen_object(c, rng, ring, b);
      ObjHandle e = gen_object(c, rng, ring, b);
      PairConditions pc =
          exactness_conditions(c, gen_hom(c, rng, a, d), gen_hom(c, rng, d, e));
      ok = pc.agree();
    }
    ++s.runs;
    if (!ok) ++s.failures;
  }
  return s;
}

SuiteResult suite_three_by_three(FpCategory& c, Rng& rng, std::size_t count) {
  SuiteResult s{"three-by-three"};
  GenBounds b{2, 2, 4};
  for (std::size_t t = 0; t < count; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    Grid3x3 g = gen_grid(c, rng, ring, b);
    bool ok = nine_lemma(c, g, NineDirection::top_from_bottom).ok() &&
              nine_lemma(c, g, NineDirection::bottom_from_top).ok();
    ++s.runs;
    if (!ok) ++s.failures;
  }
  return s;
}

int run_lemmas(std::uint64_t seed, std::size_t count, const std::string& format) {
  FpCategory c;
  Rng rng(seed);
  std::vector<SuiteResult> suites;
  suites.push_back(suite_kernel_cokernel(c, rng, count));
  suites.push_back(suite_balanced(c, rng, count));
  suites.push_back(suite_hom_group(c, rng, count));
  suites.push_back(suite_exactness(c, rng, count));
  suites.push_back(suite_three_by_three(c, rng, count));

  bool ok = true;
  ordered_json js = ordered_json::array();
  std::vector<std::string> lines;
  for (const auto& s : suites) {
    ok = ok && s.failures == 0;
    js.push_back(ordered_json{
        {"name", s.name}, {"runs", s.runs}, {"failures", s.failures}});
    lines.push_back(s.name + ": " + (s.failures == 0 ? "pass" : "FAIL") + " (" +
                    std::to_string(s.runs) + " runs, " +
                    std::to_string(s.failures) + " failures)");
  }
  lines.push_back(ok ? "all suites passed" : "suites failed");
  ordered_json rep{{"command", "lemmas"},
                   {"seed", seed},
                   {"count", count},
                   {"ok", ok},
                   {"suites", std::move(js)}};
  emit(rep, format, lines);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely presented module calculator for abelian-category checks"};
  app.require_subcommand(1);

  std::string file, format = "text", object;
  std::vector<std::string> names;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  long long max_card = 0;
  bool envelope = false;

  CLI::App* cmd_check = app.add_subcommand("check", "verify a diagram document");
  cmd_check->add_option("file", file, "JSON document")->required();
  cmd_check->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_snf = app.add_subcommand("snf", "Smith normal form of a matrix");
  cmd_snf->add_option("file", file, "JSON file with a \"matrix\" field")->required();
  cmd_snf->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_embed = app.add_subcommand("embed", "run the hom-functor embedding checks");
  cmd_embed->add_option("file", file, "JSON document")->required();
  cmd_embed->add_option("--subcategory", names, "object names for the universe");
  cmd_embed->add_option("--seed", seed, "random seed (default 0)");
  std::size_t embed_count = 20;
  cmd_embed->add_option("--count", embed_count, "short exact sequences to sample");
  std::uint64_t embed_cap = std::uint64_t(1) << 21;
  cmd_embed->add_option("--max-card", embed_cap, "additive-map enumeration cap");
  cmd_embed->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_inj = app.add_subcommand("injective", "injectivity verdict for an object");
  cmd_inj->add_option("file", file, "JSON document")->required();
  cmd_inj->add_option("--object", object, "object name")->required();
  cmd_inj->add_flag("--envelope", envelope, "also compute the injective envelope");
  max_card = 64;
  cmd_inj->add_option("--max-card", max_card, "universe cardinality bound");
  cmd_inj->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_lem = app.add_subcommand("lemmas", "randomized lemma suites");
  cmd_lem->add_option("--seed", seed, "random seed (default 0)");
  count = 100;
  cmd_lem->add_option("--count", count, "iterations per suite");
  cmd_lem->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_check->parsed()) return run_check(file, format);
    if (cmd_snf->parsed()) return run_snf(file, format);
    if (cmd_embed->parsed())
      return run_embed(file, names, seed, embed_count, embed_cap, format);
    if (cmd_inj->parsed()) return run_injective(file, object, envelope, max_card, format);
    if (cmd_lem->parsed()) return run_lemmas(seed, count, format);
  } catch (const AbelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == ErrKind::internal_check ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
