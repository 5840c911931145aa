/* Acceptance gate.  Eleven criteria, one line each, exit 0 iff all pass.
   Every criterion carries a pinned wall-clock budget; exceeding it fails the
   line even when the mathematics checks out. */

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "abelcat/diagram.hpp"
#include "abelcat/embedding.hpp"
#include "abelcat/generators.hpp"
#include "abelcat/injectivity.hpp"
#include "abelcat/json_io.hpp"
#include "abelcat/ops.hpp"
#include "abelcat/snf.hpp"

using namespace abelcat;

namespace {

/* ---- harness ----------------------------------------------------------- */

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> body;  // note string collects counts
};

bool run_criterion(std::size_t index, const Criterion& cr) {
  using clock = std::chrono::steady_clock;
  bool ok = false;
  std::string note;
  auto begin = clock::now();
  try {
    ok = cr.body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(clock::now() - begin).count();
  if (secs > cr.budget_seconds) ok = false;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", secs, cr.budget_seconds);
  std::cout << (ok ? "PASS" : "FAIL") << "  " << index << ". " << cr.label
            << (note.empty() ? "" : " [" + note + "]") << " (" << timing << ")\n";
  return ok;
}

Int igcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/* Cofactor-expansion determinant; the matrices here are at most 4x4. */
Int det(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

void combinations(std::size_t n, std::size_t k,
                  std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
}

/* gcd of all k x k minors (0 when every minor vanishes). */
Int minor_gcd(const IntMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rsets, csets;
  combinations(m.rows(), k, rsets);
  combinations(m.cols(), k, csets);
  Int g = 0;
  for (const auto& rs : rsets)
    for (const auto& cs : csets) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
      g = igcd(g, det(sub));
    }
  return g;
}

std::vector<long long> divisors_ascending(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(ABELCAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult r;
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/* ---- criteria ---------------------------------------------------------- */

bool c1_universal_properties(std::string& note) {
  FpCategory c;
  Rng rng(101);
  GenBounds b{3, 3, 6};
  bool ok = true;
  for (int t = 0; t < 500; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    Mor f = gen_morphism(c, rng, ring, b);

    KernelPair k = c.kernel(f);
    ok = ok && is_monic(c, k.map) && is_zero_mor(c, c.compose(f, k.map));
    ObjHandle test = gen_object(c, rng, ring, b);
    Mor r = gen_hom(c, rng, test, k.obj);
    Mor g = c.compose(k.map, r);
    Mor h = factor_through_kernel(c, f, k, g);
    ok = ok && c.mor_equal(c.compose(k.map, h), g) && c.mor_equal(h, r);

    KernelPair ck = c.cokernel(f);
    ok = ok && is_epic(c, ck.map) && is_zero_mor(c, c.compose(ck.map, f));
    ObjHandle target = gen_object(c, rng, ring, b);
    Mor u = gen_hom(c, rng, ck.obj, target);
    Mor g2 = c.compose(u, ck.map);
    Mor h2 = factor_through_cokernel(c, f, ck, g2);
    ok = ok && c.mor_equal(c.compose(h2, ck.map), g2) && c.mor_equal(h2, u);
    if (!ok) break;
  }
  note = "500 morphisms";
  return ok;
}

bool c2_ker_coker_duality(std::string& note) {
  FpCategory c;
  Rng rng(202);
  GenBounds b{3, 3, 6};
  bool ok = true;
  for (int t = 0; t < 200 && ok; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    Mor m = gen_mono(c, rng, ring, b);
    Mor km = c.kernel(c.cokernel(m).map).map;
    ok = sub_equal(c, SubObject{km}, SubObject{m});
  }
  for (int t = 0; t < 200 && ok; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    Mor e = gen_epic(c, rng, ring, b);
    Mor qe = c.cokernel(c.kernel(e).map).map;
    ok = quot_equal(c, QuotientObject{qe}, QuotientObject{e});
  }
  note = "200 monos, 200 epics";
  return ok;
}

bool c3_balanced(std::string& note) {
  FpCategory c;
  Rng rng(303);
  bool ok = true;
  for (int t = 0; t < 100 && ok; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    std::size_t n = 1 + rng.below(3);
    IntMatrix raw(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) raw.at(i, j) = rng.int_in(-6, 6);
    IntMatrix u = snf(raw).u;  // unimodular by construction
    ObjHandle fr = c.intern(FpModule::free_module(ring, n));
    Mor f = c.make_morphism(fr, fr, u);
    ok = is_monic(c, f) && is_epic(c, f);
    if (ok) {
      Mor g = invert(c, f);
      ok = c.mor_equal(c.compose(g, f), c.identity(fr)) &&
           c.mor_equal(c.compose(f, g), c.identity(fr));
    }
  }
  note = "100 automorphisms";
  return ok;
}

bool c4_addition(std::string& note) {
  FpCategory c;
  Rng rng(404);
  GenBounds b{3, 3, 6};
  bool ok = true;
  for (int t = 0; t < 200 && ok; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    ObjHandle a = gen_object(c, rng, ring, b);
    ObjHandle d = gen_object(c, rng, ring, b);
    Mor f = gen_hom(c, rng, a, d);
    Mor g = gen_hom(c, rng, a, d);
    Mor h = gen_hom(c, rng, a, d);
    Mor z = c.zero_mor(a, d);
    ok = c.mor_equal(add_mor(c, f, g), add_mor_via_codiagonal(c, f, g)) &&
         c.mor_equal(add_mor(c, f, g), add_mor(c, g, f)) &&
         c.mor_equal(add_mor(c, add_mor(c, f, g), h),
                     add_mor(c, f, add_mor(c, g, h))) &&
         c.mor_equal(add_mor(c, f, z), f) &&
         c.mor_equal(add_mor(c, f, neg_mor(c, f)), z);
  }
  for (int t = 0; t < 100 && ok; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    ObjHandle a = gen_object(c, rng, ring, b);
    ObjHandle d = gen_object(c, rng, ring, b);
    ObjHandle e = gen_object(c, rng, ring, b);
    Mor f = gen_hom(c, rng, a, d);
    Mor f2 = gen_hom(c, rng, a, d);
    Mor post = gen_hom(c, rng, d, e);
    Mor pre = gen_hom(c, rng, e, a);
    ok = c.mor_equal(c.compose(post, add_mor(c, f, f2)),
                     add_mor(c, c.compose(post, f), c.compose(post, f2))) &&
         c.mor_equal(c.compose(add_mor(c, f, f2), pre),
                     add_mor(c, c.compose(f, pre), c.compose(f2, pre)));
  }
  note = "200 law checks, 100 bilinearity checks";
  return ok;
}

bool c5_exactness_criteria(std::string& note) {
  FpCategory c;
  Rng rng(505);
  GenBounds b{3, 3, 6};
  bool ok = true;
  for (int t = 0; t < 200 && ok; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    if (t % 2 == 0) {
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
  }
  note = "200 composable pairs";
  return ok;
}

bool c6_nine_lemma(std::string& note) {
  FpCategory c;
  Rng rng(606);
  GenBounds b{2, 2, 4};
  bool ok = true;
  for (int t = 0; t < 100 && ok; ++t) {
    RingSpec ring = ring_from_index(rng.below(kRingCount));
    Grid3x3 g = gen_grid(c, rng, ring, b);
    NineReport up = nine_lemma(c, g, NineDirection::top_from_bottom);
    NineReport down = nine_lemma(c, g, NineDirection::bottom_from_top);
    ok = up.hypothesis_ok() && up.ok() && down.hypothesis_ok() && down.ok();
  }
  note = "100 grids, both directions";
  return ok;
}

bool c7_snf_oracle(std::string& note) {
  Rng rng(707);
  bool ok = true;
  for (int t = 0; t < 300 && ok; ++t) {
    std::size_t rows = 1 + rng.below(4);
    std::size_t cols = 1 + rng.below(4);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.int_in(-20, 20);

    SnfResult s = snf(m);
    ok = (s.u * m * s.v == s.d);
    Int du = det(s.u), dv = det(s.v);
    ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);

    Int prod = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols) && ok; ++k) {
      Int dk = s.diag(k - 1);
      ok = dk >= 0;
      if (k >= 2 && s.diag(k - 2) != 0)
        ok = ok && (dk % s.diag(k - 2) == 0 || dk == 0);
      if (k >= 2 && s.diag(k - 2) == 0) ok = ok && dk == 0;
      prod *= dk;
      // The product of the first k invariant factors is the gcd of all
      // k x k minors.
      ok = ok && prod == minor_gcd(m, k);
    }
  }
  note = "300 matrices up to 4x4, entries in [-20,20]";
  return ok;
}

bool c8_baer_vs_brute(std::string& note) {
  bool ok = true;
  int modules = 0;
  for (long long n = 2; n <= 12 && ok; ++n) {
    FpCategory c;
    RingSpec ring = RingSpec::zn(n);
    std::vector<Mor> universe = mono_universe(c, ring, 2, Int(64));

    std::vector<FpModule> mods;
    mods.push_back(FpModule::zero(ring));
    std::vector<long long> divs = divisors_ascending(n);
    for (long long d : divs)
      if (d >= 2) mods.push_back(FpModule::cyclic(ring, d));
    for (long long d1 : divs)
      for (long long d2 : divs)
        if (d1 >= 2 && d2 >= 2 && d1 % d2 == 0 && d1 * d2 <= 64) {
          IntMatrix rel(2, 2);
          rel.at(0, 0) = d1;
          rel.at(1, 1) = d2;
          mods.push_back(FpModule(ring, 2, rel));
        }

    for (const FpModule& fm : mods) {
      ObjHandle a = c.intern(fm);
      bool baer = baer_injective(c, a).baer;
      bool brute = brute_injective(c, a, universe);
      ok = ok && baer == brute;
      ++modules;
      if (!ok) break;
    }
  }
  note = std::to_string(modules) + " modules, moduli 2..12";
  return ok;
}

bool c9_envelopes(std::string& note) {
  bool ok = true;
  int envelopes = 0;
  for (long long n = 2; n <= 12 && ok; ++n) {
    FpCategory c;
    RingSpec ring = RingSpec::zn(n);
    for (long long d : divisors_ascending(n)) {
      ObjHandle a = c.intern(FpModule::cyclic(ring, d));
      Envelope e = injective_envelope(c, a);
      ok = is_monic(c, e.inc) && baer_injective(c, e.obj).baer &&
           is_essential(c, e.inc) && envelope_minimal(c, e.inc);
      ++envelopes;
      if (!ok) break;
    }
  }
  note = std::to_string(envelopes) + " envelopes, moduli 2..12";
  return ok;
}

bool c10_embedding_instance(std::string& note) {
  FpCategory c;
  RingSpec ring = RingSpec::zn(4);
  ObjHandle a1 = c.intern(FpModule::free_module(ring, 1));
  ObjHandle a2 = c.intern(FpModule::cyclic(ring, 2));
  IntMatrix rel(2, 1);
  rel.at(0, 0) = 2;
  rel.at(1, 0) = 0;
  ObjHandle a3 = c.intern(FpModule(ring, 2, rel));

  EmbedReport rep = check_embedding(c, {a1, a2, a3}, 2026, 20);
  bool ok = rep.ok() && rep.ses_checked == 20 && rep.pairs_checked == 9 &&
            rep.witnesses == 66;
  note = "three modules over Z/4, 20 sequences, 66 witnesses";
  return ok;
}

bool c11_cli(std::string& note) {
  std::string fix = ABELCAT_FIXTURES;
  std::string gold = ABELCAT_GOLDENS;
  bool ok = run_cli("check " + fix + "/square_ok.json").code == 0 &&
            run_cli("check " + fix + "/square_bad.json").code == 1 &&
            run_cli("check " + fix + "/bad_shape.json").code == 2;

  CliResult first = run_cli("lemmas --seed 7 --count 5 --format json");
  CliResult second = run_cli("lemmas --seed 7 --count 5 --format json");
  ok = ok && first.code == 0 && first.out == second.out &&
       first.out == read_file(gold + "/lemmas.json");

  CliResult check = run_cli("check " + fix + "/square_ok.json --format json");
  ok = ok && check.code == 0 && check.out == read_file(gold + "/check_ok.json");
  note = "exit codes 0/1/2, golden bytes stable";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"kernel and cokernel universal properties on random morphisms", 60,
       c1_universal_properties},
      {"every mono is the kernel of its cokernel, dually for epics", 30,
       c2_ker_coker_duality},
      {"monic epic endomorphisms of free modules invert", 10, c3_balanced},
      {"both addition constructions agree and composition is bilinear", 20,
       c4_addition},
      {"the three exactness descriptions agree on composable pairs", 20,
       c5_exactness_criteria},
      {"nine lemma concludes in both directions on generated grids", 60,
       c6_nine_lemma},
      {"Smith normal form matches the determinantal-divisor oracle", 10,
       c7_snf_oracle},
      {"Baer's criterion agrees with the brute-force extension oracle", 120,
       c8_baer_vs_brute},
      {"injective envelopes are injective, essential, and minimal", 60,
       c9_envelopes},
      {"hom-functor embedding is exact, faithful, and full on the desk instance",
       120, c10_embedding_instance},
      {"command-line interface honours exit codes and golden output", 5, c11_cli},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i)
    all = run_criterion(i + 1, criteria[i]) && all;
  std::cout << (all ? "ACCEPTED" : "REJECTED") << "\n";
  return all ? 0 : 1;
}
