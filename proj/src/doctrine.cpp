#include "epscalc/doctrine.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace epscalc::doctrine {

using finset::compose;
using finset::identity;
using finset::inclusion;
using finset::mk_subset;

// ---------------------------------------------------------------- fiber

Subset Fiber::meet(const Subset& a, const Subset& b) const {
  std::vector<std::size_t> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out));
  return Subset{carrier, std::move(out)};
}

Subset Fiber::join(const Subset& a, const Subset& b) const {
  std::vector<std::size_t> out;
  std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                 std::back_inserter(out));
  return Subset{carrier, std::move(out)};
}

bool Fiber::leq(const Subset& a, const Subset& b) const {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

std::uint64_t Fiber::count() const {
  if (carrier.size >= 64) throw Error("fiber too large to enumerate");
  return std::uint64_t{1} << carrier.size;
}

Subset Fiber::element(std::uint64_t mask) const {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < carrier.size; ++i)
    if (mask & (std::uint64_t{1} << i)) m.push_back(i);
  return Subset{carrier, std::move(m)};
}

std::uint64_t Fiber::mask_of(const Subset& s) const {
  std::uint64_t mask = 0;
  for (std::size_t m : s.members) mask |= std::uint64_t{1} << m;
  return mask;
}

// ----------------------------------------------------------- projections

Projection first_projection(FinObj x, FinObj y) { return Projection{finset::product(x, y), 1}; }
Projection second_projection(FinObj x, FinObj y) { return Projection{finset::product(x, y), 2}; }

Subset reindex(const FinMor& f, const Subset& s) {
  if (s.carrier != f.cod) throw Error("reindex carrier mismatch");
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < f.dom.size; ++a)
    if (finset::contains(s, f.table[a])) out.push_back(a);
  return Subset{f.dom, std::move(out)};
}

Subset reindex_pullback(const FinMor& f, const Subset& s) {
  if (s.carrier != f.cod) throw Error("reindex carrier mismatch");
  finset::Pullback pb = finset::pullback(f, inclusion(s));
  return mk_subset(f.dom, pb.p1.table);
}

Subset sigma(const Projection& pi, const Subset& s) {
  if (s.carrier != pi.total()) throw Error("sigma carrier mismatch");
  finset::Factorization fac = finset::image_factorize(compose(pi.map(), inclusion(s)));
  return mk_subset(pi.base(), fac.m.table);
}

Subset sigma_direct(const Projection& pi, const Subset& s) {
  if (s.carrier != pi.total()) throw Error("sigma carrier mismatch");
  std::vector<std::size_t> out;
  for (std::size_t cell : s.members) {
    auto [a, b] = pi.prod.decode(cell);
    out.push_back(pi.which == 1 ? a : b);
  }
  return mk_subset(pi.base(), std::move(out));
}

// ----------------------------------------------------------------- epsilon

FinMor epsilon_categorical(const Projection& pi, const Subset& psi) {
  if (pi.which != 1) throw Error("epsilon is taken along a first projection");
  const finset::Product& p = pi.prod;
  if (p.right.size == 0) throw Error("unpointed fiber carrier");
  if (p.left.size == 0) throw Error("unpointed base carrier");
  if (psi.carrier != p.obj) throw Error("subset lives on the wrong carrier");

  FinMor incl = inclusion(psi);
  finset::Factorization fac = finset::image_factorize(compose(p.proj1, incl));
  FinMor se = finset::section_of_epi(fac.e);
  FinMor spi = finset::section_of_projection(p.left, p.right, 0);
  Subset img = mk_subset(p.left, fac.m.table);
  FinMor negm = inclusion(finset::complement(img));
  FinMor on_image = compose(incl, se);       // psi ∘ s_e : I -> X×Y
  FinMor off_image = compose(spi, negm);     // s_pi ∘ ¬m : ¬I -> X×Y
  FinMor mediator = finset::copair(on_image, off_image, fac.m, negm);
  return compose(p.proj2, mediator);
}

FinMor epsilon_oracle(const Projection& pi, const Subset& psi) {
  if (pi.which != 1) throw Error("epsilon is taken along a first projection");
  const finset::Product& p = pi.prod;
  if (p.right.size == 0) throw Error("unpointed fiber carrier");
  if (psi.carrier != p.obj) throw Error("subset lives on the wrong carrier");
  std::vector<std::size_t> t(p.left.size, 0);
  for (std::size_t x = 0; x < p.left.size; ++x) {
    for (std::size_t y = 0; y < p.right.size; ++y) {
      if (finset::contains(psi, p.encode(x, y))) {
        t[x] = y;
        break;
      }
    }
  }
  return FinMor{p.left, p.right, std::move(t)};
}

FinMor epsilon_extensional(const Projection& pi, FinObj carrier, std::vector<std::size_t> raw_members) {
  return epsilon_categorical(pi, mk_subset(carrier, std::move(raw_members)));
}

bool check_epsilon_inequality(const Projection& pi, const Subset& psi) {
  Fiber fib{pi.base()};
  Subset lhs = sigma(pi, psi);
  FinMor eps = epsilon_categorical(pi, psi);
  FinMor graph = pi.prod.pair(identity(pi.base()), eps);
  Subset rhs = reindex(graph, psi);
  return fib.leq(lhs, rhs);
}

bool check_epsilon_def_equality(const Projection& pi, const Subset& psi) {
  Subset lhs = sigma(pi, psi);
  FinMor eps = epsilon_categorical(pi, psi);
  Subset rhs = reindex(pi.prod.pair(identity(pi.base()), eps), psi);
  return lhs == rhs;
}

FinMor section_from_epsilon(const FinMor& f) {
  if (!finset::is_epi(f)) throw Error("not an epimorphism");
  if (f.dom.size == 0 || f.cod.size == 0) throw Error("pointed carriers required");
  finset::Product yx = finset::product(f.cod, f.dom);
  FinMor graph = yx.pair(f, identity(f.dom));  // <f, id_X> : X -> Y×X
  Subset g = mk_subset(yx.obj, graph.table);
  FinMor eps = epsilon_categorical(first_projection(f.cod, f.dom), g);  // Y -> X
  FinMor id_and_eps = yx.pair(identity(f.cod), eps);                    // Y -> Y×X
  finset::Pullback pb = finset::pullback(id_and_eps, graph);
  // The epsilon inequality makes the pullback leg into Y split; k picks
  // the (unique) fiber point over each y.
  std::vector<std::size_t> k(f.cod.size);
  for (std::size_t y = 0; y < f.cod.size; ++y) {
    bool found = false;
    for (std::size_t i = 0; i < pb.elements.size(); ++i) {
      if (pb.elements[i].first == y) {
        k[y] = i;
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: graph epsilon misses " + std::to_string(y));
  }
  return compose(pb.p2, FinMor{f.cod, pb.obj, std::move(k)});
}

// ------------------------------------------------------------------- laws

bool LawReport::all_ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const LawVerdict& v) { return v.ok; });
}

std::uint64_t LawReport::total_checked() const {
  std::uint64_t n = 0;
  for (const auto& v : verdicts) n += v.checked;
  return n;
}

namespace {

std::string size_instance(std::initializer_list<std::pair<const char*, std::size_t>> parts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : parts) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

void record(LawVerdict& v, bool ok, const std::string& what) {
  ++v.checked;
  if (!ok && v.ok) {
    v.ok = false;
    v.detail = what;
  }
}

std::uint64_t reindex_mask(const FinMor& f, std::uint64_t t) {
  std::uint64_t out = 0;
  for (std::size_t a = 0; a < f.dom.size; ++a)
    if (t & (std::uint64_t{1} << f.table[a])) out |= std::uint64_t{1} << a;
  return out;
}

// Deterministic per-instance rng; the global seed and the instance shape
// feed a seed_seq.
std::mt19937_64 instance_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> salt) {
  std::vector<std::uint32_t> material;
  material.push_back(static_cast<std::uint32_t>(seed));
  material.push_back(static_cast<std::uint32_t>(seed >> 32));
  for (std::uint64_t s : salt) {
    material.push_back(static_cast<std::uint32_t>(s));
    material.push_back(static_cast<std::uint32_t>(s >> 32));
  }
  std::seed_seq seq(material.begin(), material.end());
  return std::mt19937_64(seq);
}

Subset random_subset(FinObj carrier, std::mt19937_64& rng) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < carrier.size; ++i)
    if (rng() & 1) m.push_back(i);
  return Subset{carrier, std::move(m)};
}

// Enumerates all tables dom -> cod in lexicographic order.
bool next_table(std::vector<std::size_t>& t, std::size_t cod) {
  for (std::size_t i = t.size(); i > 0; --i) {
    if (++t[i - 1] < cod) return true;
    t[i - 1] = 0;
  }
  return false;
}

}  // namespace

LawVerdict verify_fiber_boolean_algebra(std::size_t carrier) {
  LawVerdict v{"fiber-boolean-algebra", size_instance({{"carrier", carrier}}), true, 0, ""};
  Fiber fib{FinObj{carrier}};
  const std::uint64_t n = fib.count();
  std::vector<Subset> el;
  el.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) el.push_back(fib.element(m));
  const Subset top = fib.top(), bot = fib.bot();
  for (std::uint64_t i = 0; i < n; ++i) {
    const Subset& a = el[i];
    record(v, fib.meet(a, top) == a, "meet identity at " + show(a));
    record(v, fib.join(a, bot) == a, "join identity at " + show(a));
    record(v, fib.meet(a, fib.neg(a)) == bot, "complement meet at " + show(a));
    record(v, fib.join(a, fib.neg(a)) == top, "complement join at " + show(a));
    record(v, fib.neg(fib.neg(a)) == a, "double negation at " + show(a));
    for (std::uint64_t j = 0; j < n; ++j) {
      const Subset& b = el[j];
      record(v, fib.meet(a, b) == fib.meet(b, a), "meet commutativity");
      record(v, fib.join(a, b) == fib.join(b, a), "join commutativity");
      record(v, fib.neg(fib.meet(a, b)) == fib.join(fib.neg(a), fib.neg(b)), "de morgan");
      record(v, fib.leq(a, b) == (fib.meet(a, b) == a), "order versus meet");
      for (std::uint64_t k = 0; k < n; ++k) {
        const Subset& c = el[k];
        record(v, fib.meet(a, fib.meet(b, c)) == fib.meet(fib.meet(a, b), c), "meet associativity");
        record(v, fib.join(a, fib.join(b, c)) == fib.join(fib.join(a, b), c), "join associativity");
        record(v, fib.meet(a, fib.join(b, c)) == fib.join(fib.meet(a, b), fib.meet(a, c)),
               "distributivity");
      }
    }
  }
  return v;
}

LawVerdict verify_reindex_homomorphism(std::size_t dom, std::size_t cod) {
  LawVerdict v{"reindex-homomorphism", size_instance({{"dom", dom}, {"cod", cod}}), true, 0, ""};
  Fiber fd{FinObj{dom}}, fc{FinObj{cod}};
  const std::uint64_t nc = fc.count();
  std::vector<std::size_t> table(dom, 0);
  if (dom > 0 && cod == 0) return v;  // no morphisms
  do {
    FinMor f{FinObj{dom}, FinObj{cod}, table};
    record(v, reindex(f, fc.top()) == fd.top(), "top along " + show(f));
    record(v, reindex(f, fc.bot()) == fd.bot(), "bot along " + show(f));
    for (std::uint64_t i = 0; i < nc; ++i) {
      Subset a = fc.element(i);
      record(v, reindex(f, fc.neg(a)) == fd.neg(reindex(f, a)), "neg along " + show(f));
      record(v, reindex(f, a) == reindex_pullback(f, a), "pullback route along " + show(f));
      for (std::uint64_t j = 0; j < nc; ++j) {
        Subset b = fc.element(j);
        record(v, reindex(f, fc.meet(a, b)) == fd.meet(reindex(f, a), reindex(f, b)),
               "meet along " + show(f));
        record(v, reindex(f, fc.join(a, b)) == fd.join(reindex(f, a), reindex(f, b)),
               "join along " + show(f));
      }
    }
  } while (next_table(table, cod));
  return v;
}

LawVerdict verify_reindex_functoriality(std::size_t a, std::size_t b, std::size_t c) {
  LawVerdict v{"reindex-functoriality", size_instance({{"a", a}, {"b", b}, {"c", c}}), true, 0, ""};
  Fiber fa{FinObj{a}}, fc{FinObj{c}};
  // identity law
  for (std::uint64_t i = 0; i < fa.count(); ++i) {
    Subset s = fa.element(i);
    record(v, reindex(identity(FinObj{a}), s) == s, "identity at " + show(s));
  }
  if ((a > 0 && b == 0) || (b > 0 && c == 0)) return v;
  std::vector<std::size_t> ft(a, 0);
  do {
    FinMor f{FinObj{a}, FinObj{b}, ft};
    std::vector<std::size_t> gt(b, 0);
    do {
      FinMor g{FinObj{b}, FinObj{c}, gt};
      FinMor gf = compose(g, f);
      for (std::uint64_t i = 0; i < fc.count(); ++i) {
        Subset s = fc.element(i);
        record(v, reindex(gf, s) == reindex(f, reindex(g, s)),
               "composite along " + show(f) + " ; " + show(g));
      }
    } while (next_table(gt, c));
  } while (next_table(ft, b));
  return v;
}

LawVerdict verify_adjunction(FinObj x, FinObj y, int which, std::uint64_t seed) {
  Projection pi = which == 1 ? first_projection(x, y) : second_projection(x, y);
  LawVerdict v{"adjunction",
               size_instance({{"X", x.size}, {"Y", y.size}, {"which", std::size_t(which)}}),
               true, 0, ""};
  const std::size_t cells = pi.total().size;
  Fiber ftot{pi.total()}, fbase{pi.base()};
  auto check_pair = [&](const Subset& s, const Subset& t) {
    bool lhs = fbase.leq(sigma(pi, s), t);
    bool rhs = ftot.leq(s, reindex(pi.map(), t));
    record(v, lhs == rhs, "s=" + show(s) + " t=" + show(t));
  };
  if (cells <= kAdjunctionExhaustiveCells) {
    // Masks keep the exhaustive sweep cheap.
    std::vector<std::uint64_t> sig_of(ftot.count());
    for (std::uint64_t sm = 0; sm < ftot.count(); ++sm)
      sig_of[sm] = fbase.mask_of(sigma(pi, ftot.element(sm)));
    for (std::uint64_t tm = 0; tm < fbase.count(); ++tm) {
      std::uint64_t pre = ftot.mask_of(reindex(pi.map(), fbase.element(tm)));
      for (std::uint64_t sm = 0; sm < ftot.count(); ++sm) {
        bool lhs = (sig_of[sm] & ~tm) == 0;
        bool rhs = (sm & ~pre) == 0;
        record(v, lhs == rhs, "mask s=" + std::to_string(sm) + " t=" + std::to_string(tm));
      }
    }
  } else {
    auto rng = instance_rng(seed, {x.size, y.size, std::uint64_t(which)});
    for (std::size_t i = 0; i < kSampledSubsets; ++i)
      check_pair(random_subset(pi.total(), rng), random_subset(pi.base(), rng));
  }
  return v;
}

LawVerdict verify_beck_chevalley(FinObj x, FinObj y, FinObj z, std::uint64_t seed) {
  LawVerdict v{"beck-chevalley", size_instance({{"X", x.size}, {"Y", y.size}, {"Z", z.size}}),
               true, 0, ""};
  Projection pi = second_projection(x, y);    // X×Y -> Y
  Projection pip = second_projection(x, z);   // X×Z -> Z
  const std::size_t cells = pi.total().size;
  if (y.size == 0 && z.size > 0) return v;    // no maps Z -> Y
  std::vector<std::size_t> ft(z.size, 0);
  do {
    FinMor f{z, y, ft};
    // id_X × f : X×Z -> X×Y
    std::vector<std::size_t> t(pip.total().size);
    for (std::size_t xv = 0; xv < x.size; ++xv)
      for (std::size_t zv = 0; zv < z.size; ++zv)
        t[pip.prod.encode(xv, zv)] = pi.prod.encode(xv, f.table[zv]);
    FinMor idxf{pip.total(), pi.total(), std::move(t)};
    auto check_one = [&](const Subset& s) {
      Subset lhs = sigma(pip, reindex(idxf, s));
      Subset rhs = reindex(f, sigma(pi, s));
      record(v, lhs == rhs, "f=" + show(f) + " s=" + show(s));
    };
    if (cells <= kBeckChevalleyExhaustiveCells) {
      Fiber ftot{pi.total()};
      for (std::uint64_t sm = 0; sm < ftot.count(); ++sm) check_one(ftot.element(sm));
    } else {
      auto rng = instance_rng(seed, {x.size, y.size, z.size, std::uint64_t(ft.empty() ? 0 : ft[0])});
      for (std::size_t i = 0; i < kSampledSubsets / 8 + 1; ++i)
        check_one(random_subset(pi.total(), rng));
    }
  } while (next_table(ft, y.size));
  return v;
}

LawVerdict verify_lem_coproduct(std::size_t max_carrier, std::size_t max_cod) {
  LawVerdict v{"lem-coproduct",
               size_instance({{"max_carrier", max_carrier}, {"max_cod", max_cod}}), true, 0, ""};
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    Fiber fib{FinObj{n}};
    for (std::uint64_t mask = 0; mask < fib.count(); ++mask) {
      Subset s = fib.element(mask);
      Subset ns = finset::complement(s);
      FinMor m = inclusion(s), nm = inclusion(ns);
      // meet of the two inclusions is initial, i.e. they are disjoint
      finset::Pullback meet = finset::pullback(m, nm);
      record(v, meet.obj.size == 0, "overlap in carrier " + std::to_string(n) + " " + show(s));
      for (std::size_t cod = 1; cod <= max_cod; ++cod) {
        std::vector<std::size_t> ftab(s.size(), 0);
        do {
          FinMor f{FinObj{s.size()}, FinObj{cod}, ftab};
          std::vector<std::size_t> gtab(ns.size(), 0);
          do {
            FinMor g{FinObj{ns.size()}, FinObj{cod}, gtab};
            FinMor h = finset::copair(f, g, m, nm);
            record(v, compose(h, m) == f && compose(h, nm) == g,
                   "mediator equations at " + show(s) + " -> " + std::to_string(cod));
          } while (next_table(gtab, cod));
        } while (next_table(ftab, cod));
      }
    }
  }
  return v;
}

LawVerdict verify_ac_sections(std::size_t max_carrier) {
  LawVerdict v{"ac-sections", size_instance({{"max_carrier", max_carrier}}), true, 0, ""};
  for (std::size_t m = 0; m <= max_carrier; ++m) {
    for (std::size_t n = 0; n <= max_carrier; ++n) {
      if (m > 0 && n == 0) continue;
      std::vector<std::size_t> t(m, 0);
      do {
        FinMor e{FinObj{m}, FinObj{n}, t};
        if (!finset::is_epi(e)) continue;
        FinMor s = finset::section_of_epi(e);
        record(v, compose(e, s) == identity(FinObj{n}), "e=" + show(e));
      } while (next_table(t, n));
    }
  }
  return v;
}

LawVerdict verify_ac_epsilon_roundtrip(std::size_t max_carrier) {
  LawVerdict v{"ac-epsilon-roundtrip", size_instance({{"max_carrier", max_carrier}}), true, 0, ""};
  for (std::size_t m = 1; m <= max_carrier; ++m) {
    for (std::size_t n = 1; n <= max_carrier; ++n) {
      std::vector<std::size_t> t(m, 0);
      do {
        FinMor f{FinObj{m}, FinObj{n}, t};
        if (!finset::is_epi(f)) continue;
        FinMor s = section_from_epsilon(f);
        bool splits = compose(f, s) == identity(FinObj{n});
        bool agrees = s == finset::section_of_epi(f);
        record(v, splits && agrees, "f=" + show(f));
      } while (next_table(t, n));
    }
  }
  return v;
}

namespace {

template <typename Check>
LawVerdict epsilon_sweep(const char* law, FinObj x, FinObj y, std::uint64_t seed, Check check) {
  LawVerdict v{law, size_instance({{"X", x.size}, {"Y", y.size}}), true, 0, ""};
  Projection pi = first_projection(x, y);
  Fiber fib{pi.total()};
  if (pi.total().size <= kEpsilonExhaustiveCells) {
    for (std::uint64_t mask = 0; mask < fib.count(); ++mask) {
      Subset psi = fib.element(mask);
      record(v, check(pi, psi), "psi=" + show(psi));
    }
  } else {
    auto rng = instance_rng(seed, {x.size, y.size});
    for (std::size_t i = 0; i < kSampledSubsets; ++i) {
      Subset psi = random_subset(pi.total(), rng);
      record(v, check(pi, psi), "psi=" + show(psi));
    }
  }
  return v;
}

}  // namespace

LawVerdict verify_epsilon_agreement(FinObj x, FinObj y, std::uint64_t seed) {
  return epsilon_sweep("epsilon-agreement", x, y, seed, [](const Projection& pi, const Subset& psi) {
    return epsilon_categorical(pi, psi) == epsilon_oracle(pi, psi);
  });
}

LawVerdict verify_epsilon_inequality(FinObj x, FinObj y, std::uint64_t seed) {
  return epsilon_sweep("epsilon-inequality", x, y, seed, [](const Projection& pi, const Subset& psi) {
    return check_epsilon_inequality(pi, psi);
  });
}

LawVerdict verify_epsilon_sigma_equality(FinObj x, FinObj y, std::uint64_t seed) {
  return epsilon_sweep("epsilon-sigma-equality", x, y, seed,
                       [](const Projection& pi, const Subset& psi) {
                         return check_epsilon_def_equality(pi, psi) &&
                                sigma(pi, psi) == sigma_direct(pi, psi);
                       });
}

LawReport run_laws(std::size_t max_size, std::uint64_t seed, const LawSink& sink) {
  LawReport report;
  auto emit = [&](LawVerdict v) {
    if (sink) sink(v);
    report.verdicts.push_back(std::move(v));
  };

  for (std::size_t n = 0; n <= std::min<std::size_t>(max_size, 5); ++n)
    emit(verify_fiber_boolean_algebra(n));

  std::size_t morcap = std::min<std::size_t>(max_size, 4);
  for (std::size_t m = 0; m <= morcap; ++m)
    for (std::size_t n = 0; n <= morcap; ++n) emit(verify_reindex_homomorphism(m, n));
  for (std::size_t a = 0; a <= morcap; ++a)
    for (std::size_t b = 0; b <= morcap; ++b)
      for (std::size_t c = 0; c <= morcap; ++c) emit(verify_reindex_functoriality(a, b, c));

  for (std::size_t x = 1; x <= max_size; ++x)
    for (std::size_t y = 1; y <= max_size; ++y)
      for (int which : {1, 2}) emit(verify_adjunction(FinObj{x}, FinObj{y}, which, seed));

  for (std::size_t x = 1; x <= max_size; ++x)
    for (std::size_t y = 1; y <= max_size; ++y)
      for (std::size_t z = 1; z <= std::min<std::size_t>(max_size, 3); ++z)
        emit(verify_beck_chevalley(FinObj{x}, FinObj{y}, FinObj{z}, seed));

  emit(verify_lem_coproduct(std::min<std::size_t>(max_size, 6), 3));
  emit(verify_ac_sections(std::min<std::size_t>(max_size, 5)));
  emit(verify_ac_epsilon_roundtrip(std::min<std::size_t>(max_size, 5)));

  for (std::size_t x = 1; x <= max_size; ++x)
    for (std::size_t y = 1; y <= max_size; ++y) {
      emit(verify_epsilon_agreement(FinObj{x}, FinObj{y}, seed));
      emit(verify_epsilon_inequality(FinObj{x}, FinObj{y}, seed));
      emit(verify_epsilon_sigma_equality(FinObj{x}, FinObj{y}, seed));
    }

  return report;
}

}  // namespace epscalc::doctrine
