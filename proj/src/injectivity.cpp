#include "abelcat/injectivity.hpp"

#include <map>
#include <set>

#include "abelcat/ops.hpp"
#include "abelcat/snf.hpp"

namespace abelcat {

namespace {

std::vector<Int> divisors_of(const Int& n) {
  std::vector<Int> out;
  for (Int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::map<Int, int> factorize(Int n) {
  std::map<Int, int> out;
  for (Int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

RingSpec zmod_ring_of(const FpCategory& c, ObjHandle a, const char* who) {
  RingSpec ring = c.ring_of(a);
  if (!ring.is_zmod())
    throw AbelError(ErrKind::invalid_input,
                    std::string(who) + " requires a Z/n coefficient ring");
  return ring;
}

IntVec scaled_vec(const IntVec& v, const Int& k) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * k;
  return out;
}

IntMatrix diag_presentation(const std::vector<Int>& ds) {
  IntMatrix m(ds.size(), ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) m.at(i, i) = ds[i];
  return m;
}

}  // namespace

std::vector<ZnIdeal> zn_ideals(FpCategory& c, const Int& n) {
  if (n < 2) throw AbelError(ErrKind::invalid_input, "zn_ideals needs n >= 2");
  RingSpec ring = RingSpec::zn(n);
  ObjHandle free1 = c.intern(FpModule::free_module(ring, 1));
  std::vector<ZnIdeal> out;
  for (const Int& d : divisors_of(n)) {
    ZnIdeal id;
    id.d = d;
    id.obj = c.intern(FpModule::cyclic(ring, n / d));
    IntMatrix m(1, 1);
    m.at(0, 0) = d;
    id.inc = c.make_morphism(id.obj, free1, std::move(m));
    if (!is_monic(c, id.inc))
      throw AbelError(ErrKind::internal_check, "ideal inclusion is not monic");
    out.push_back(std::move(id));
  }
  return out;
}

InjectivityVerdict baer_injective(FpCategory& c, ObjHandle a) {
  RingSpec ring = zmod_ring_of(c, a, "baer_injective");
  const Int n = ring.modulus;
  InjectivityVerdict v;
  v.object = a;
  v.baer = true;
  const std::size_t g = c.module(a).gens;
  const IntMatrix relfull = c.module(a).relations_full();
  const auto& els = c.elements(a);
  for (const Int& d : divisors_of(n)) {
    // d*A as an integer lattice: columns d e_i together with the relations.
    IntMatrix dgen(g, g);
    for (std::size_t i = 0; i < g; ++i) dgen.at(i, i) = d;
    SnfResult dlat = snf(hstack(dgen, relfull));
    const Int q = n / d;
    for (const IntVec& y : els) {
      if (!c.is_zero_vec(a, scaled_vec(y, q))) continue;  // not a hom from (d)
      if (!in_colspan(dlat, y)) {
        v.baer = false;
        v.baer_witness = BaerWitness{d, y};
        return v;
      }
    }
  }
  return v;
}

bool brute_injective(FpCategory& c, ObjHandle a, const std::vector<Mor>& monos,
                     ExtensionWitness* witness) {
  RingSpec ring = zmod_ring_of(c, a, "brute_injective");
  for (const Mor& m : monos) {
    if (!(c.ring_of(m.dom) == ring))
      throw AbelError(ErrKind::mismatch, "universe mono over a different ring");
    if (!is_monic(c, m))
      throw AbelError(ErrKind::invalid_input, "universe map is not monic");

    HomGroup hy = c.hom_group(m.cod, a);
    std::set<std::string> restrictions;
    for (const IntVec& coords : c.elements(hy.group))
      restrictions.insert(
          c.canon_map(c.compose(c.hom_element(hy, coords), m)).to_string());

    HomGroup hx = c.hom_group(m.dom, a);
    for (const IntVec& coords : c.elements(hx.group)) {
      Mor h = c.hom_element(hx, coords);
      if (!restrictions.count(c.canon_map(h).to_string())) {
        if (witness) *witness = ExtensionWitness{m, h};
        return false;
      }
    }
  }
  return true;
}

InjectivityVerdict injectivity_verdict(FpCategory& c, ObjHandle a,
                                       const std::vector<Mor>& monos) {
  InjectivityVerdict v = baer_injective(c, a);
  ExtensionWitness w;
  bool brute = brute_injective(c, a, monos, &w);
  v.brute = brute;
  if (!brute) v.extension_witness = w;
  if (brute != v.baer)
    throw AbelError(ErrKind::internal_check,
                    "Baer criterion and brute-force oracle disagree");
  return v;
}

std::vector<Mor> mono_universe(FpCategory& c, const RingSpec& ring,
                               std::size_t max_factors, const Int& max_card) {
  if (!ring.is_zmod())
    throw AbelError(ErrKind::invalid_input, "mono_universe requires Z/n");
  const Int n = ring.modulus;
  std::vector<Int> divs;
  for (const Int& d : divisors_of(n))
    if (d >= 2) divs.push_back(d);

  // One module per invariant-factor chain d_1 | d_2 | ... within max_card.
  std::vector<ObjHandle> mods;
  mods.push_back(c.intern(FpModule::zero(ring)));
  std::vector<Int> chain;
  auto extend = [&](auto&& self, const Int& card) -> void {
    if (!chain.empty()) mods.push_back(c.intern(FpModule(ring, chain.size(),
                                                         diag_presentation(chain))));
    if (chain.size() == max_factors) return;
    for (const Int& d : divs) {
      if (!chain.empty() && chain.back() % d != 0) continue;  // keep d | previous
      if (card * d > max_card) continue;
      chain.push_back(d);
      self(self, card * d);
      chain.pop_back();
    }
  };
  // Chains are built largest-first so each step divides its predecessor.
  extend(extend, 1);

  std::vector<Mor> out;
  for (ObjHandle x : mods)
    for (ObjHandle y : mods) {
      HomGroup h = c.hom_group(x, y);
      for (const IntVec& coords : c.elements(h.group)) {
        Mor f = c.hom_element(h, coords);
        if (is_monic(c, f)) out.push_back(std::move(f));
      }
    }
  return out;
}

bool is_essential(FpCategory& c, const Mor& m) {
  if (!is_monic(c, m))
    throw AbelError(ErrKind::invalid_input, "is_essential expects a monic");
  ObjHandle b = m.cod;
  const auto& els = c.elements(b);
  SnfResult im = snf(hstack(m.map, c.module(b).relations_full()));
  const Int card = Int(els.size());
  for (const IntVec& y : els) {
    bool zero = true;
    for (const Int& t : y)
      if (t != 0) zero = false;
    if (zero) continue;
    bool meets = false;
    for (Int k = 1; k <= card && !meets; ++k) {
      IntVec ky = c.canon_vec(b, scaled_vec(y, k));
      bool kzero = true;
      for (const Int& t : ky)
        if (t != 0) kzero = false;
      if (!kzero && in_colspan(im, ky)) meets = true;
    }
    if (!meets) return false;
  }
  return true;
}

std::optional<Mor> split_check(FpCategory& c, const Mor& m) {
  if (!is_monic(c, m))
    throw AbelError(ErrKind::invalid_input, "split_check expects a monic");
  HomGroup h = c.hom_group(m.cod, m.dom);
  Mor id = c.identity(m.dom);
  for (const IntVec& coords : c.elements(h.group)) {
    Mor y = c.hom_element(h, coords);
    if (c.mor_equal(c.compose(y, m), id)) return y;
  }
  return std::nullopt;
}

Envelope injective_envelope(FpCategory& c, ObjHandle a) {
  RingSpec ring = zmod_ring_of(c, a, "injective_envelope");
  const Int n = ring.modulus;
  const auto nfac = factorize(n);
  const SnfResult& s = c.relations_snf(a);
  const std::size_t g = c.module(a).gens;

  // Invariant factor d_i of a per generator (after the diagonalizing change
  // of basis), widened to m_i = prod over p | d_i of p^(v_p(n)).
  std::vector<Int> widened;
  std::vector<std::size_t> keep;   // indices with d_i > 1
  std::vector<Int> stretch;        // m_i / d_i on the kept indices
  for (std::size_t i = 0; i < g; ++i) {
    Int d = s.diag(i);
    if (d <= 1) continue;
    Int m = 1;
    for (const auto& [p, e] : nfac)
      if (d % p == 0)
        for (int t = 0; t < e; ++t) m *= p;
    keep.push_back(i);
    widened.push_back(m);
    stretch.push_back(m / d);
  }

  Envelope env;
  env.obj = c.intern(FpModule(ring, keep.size(), diag_presentation(widened)));
  IntMatrix sel(keep.size(), g);
  for (std::size_t r = 0; r < keep.size(); ++r) sel.at(r, keep[r]) = stretch[r];
  env.inc = c.make_morphism(a, env.obj, sel * s.u);

  if (!is_monic(c, env.inc))
    throw AbelError(ErrKind::internal_check, "envelope inclusion is not monic");
  if (!baer_injective(c, env.obj).baer)
    throw AbelError(ErrKind::internal_check, "envelope candidate fails Baer");
  if (!is_essential(c, env.inc))
    throw AbelError(ErrKind::internal_check, "envelope candidate is not essential");
  return env;
}

bool envelope_minimal(FpCategory& c, const Mor& inc) {
  RingSpec ring = zmod_ring_of(c, inc.cod, "envelope_minimal");
  ObjHandle e = inc.cod;
  const std::size_t g = c.module(e).gens;
  const IntMatrix relfull = c.module(e).relations_full();
  const auto& els = c.elements(e);

  // A submodule of a g-generated module needs at most g generators, so
  // spanning every g-tuple of elements reaches every submodule.
  Int tuples = 1;
  for (std::size_t i = 0; i < g; ++i) tuples *= Int(els.size());
  if (tuples > 100000)
    throw AbelError(ErrKind::cap_exceeded, "too many generator tuples");

  std::string full_key = hnf_colspan(IntMatrix::identity(g)).to_string();
  std::set<std::string> seen;
  std::vector<std::size_t> pick(g, 0);
  for (;;) {
    IntMatrix gens(g, g);
    for (std::size_t j = 0; j < g; ++j) gens.set_col(j, els[pick[j]]);
    IntMatrix lat = hnf_colspan(hstack(gens, relfull));
    std::string key = lat.to_string();
    if (seen.insert(key).second && key != full_key) {
      bool contains_image = true;
      SnfResult ls = snf(lat);
      for (std::size_t j = 0; j < inc.map.cols() && contains_image; ++j) {
        IntVec col(g);
        for (std::size_t i = 0; i < g; ++i) col[i] = inc.map.at(i, j);
        if (!in_colspan(ls, col)) contains_image = false;
      }
      if (contains_image) {
        ObjHandle fr = c.intern(FpModule::free_module(ring, lat.cols()));
        Mor span = c.make_morphism(fr, e, lat);
        ObjHandle sub = image(c, span).sub.rep.dom;
        if (baer_injective(c, sub).baer) return false;
      }
    }
    std::size_t i = 0;
    while (i < g && ++pick[i] == els.size()) pick[i++] = 0;
    if (i == g) break;
  }
  return true;
}

}  // namespace abelcat
