#include "epscalc/finset.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace epscalc::finset {

namespace {
constexpr std::size_t kSizeLimit = std::size_t{1} << 40;
}

FinMor mk_mor(FinObj dom, FinObj cod, std::vector<std::size_t> table) {
  if (table.size() != dom.size)
    throw Error("morphism table has length " + std::to_string(table.size()) + ", domain has size " +
                std::to_string(dom.size));
  for (std::size_t v : table)
    if (v >= cod.size)
      throw Error("table entry " + std::to_string(v) + " outside codomain of size " +
                  std::to_string(cod.size));
  return FinMor{dom, cod, std::move(table)};
}

FinMor identity(FinObj x) {
  std::vector<std::size_t> t(x.size);
  for (std::size_t i = 0; i < x.size; ++i) t[i] = i;
  return FinMor{x, x, std::move(t)};
}

FinMor constant(FinObj dom, FinObj cod, std::size_t value) {
  if (value >= cod.size) throw Error("constant value outside codomain");
  return FinMor{dom, cod, std::vector<std::size_t>(dom.size, value)};
}

FinMor bang(FinObj x) { return constant(x, FinObj{1}, 0); }

FinMor compose(const FinMor& g, const FinMor& f) {
  if (f.cod != g.dom) throw Error("composition domain mismatch");
  std::vector<std::size_t> t(f.dom.size);
  for (std::size_t i = 0; i < f.dom.size; ++i) t[i] = g.table[f.table[i]];
  return FinMor{f.dom, g.cod, std::move(t)};
}

bool is_epi(const FinMor& f) {
  std::vector<bool> hit(f.cod.size, false);
  for (std::size_t v : f.table) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_mono(const FinMor& f) {
  std::vector<bool> hit(f.cod.size, false);
  for (std::size_t v : f.table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_iso(const FinMor& f) { return f.dom.size == f.cod.size && is_mono(f); }

FinMor inverse(const FinMor& f) {
  if (!is_iso(f)) throw Error("not an isomorphism");
  std::vector<std::size_t> t(f.cod.size);
  for (std::size_t i = 0; i < f.dom.size; ++i) t[f.table[i]] = i;
  return FinMor{f.cod, f.dom, std::move(t)};
}

std::string show(const FinMor& f) {
  std::ostringstream os;
  os << f.dom.size << "->" << f.cod.size << " [";
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i) os << ",";
    os << f.table[i];
  }
  os << "]";
  return os.str();
}

Subset mk_subset(FinObj carrier, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::size_t m : members)
    if (m >= carrier.size)
      throw Error("subset member " + std::to_string(m) + " outside carrier of size " +
                  std::to_string(carrier.size));
  return Subset{carrier, std::move(members)};
}

Subset full_subset(FinObj carrier) {
  std::vector<std::size_t> m(carrier.size);
  for (std::size_t i = 0; i < carrier.size; ++i) m[i] = i;
  return Subset{carrier, std::move(m)};
}

Subset empty_subset(FinObj carrier) { return Subset{carrier, {}}; }

bool contains(const Subset& s, std::size_t x) {
  return std::binary_search(s.members.begin(), s.members.end(), x);
}

FinMor inclusion(const Subset& s) {
  return FinMor{FinObj{s.members.size()}, s.carrier, s.members};
}

Subset complement(const Subset& s) {
  std::vector<std::size_t> out;
  out.reserve(s.carrier.size - s.members.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < s.carrier.size; ++i) {
    if (j < s.members.size() && s.members[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return Subset{s.carrier, std::move(out)};
}

std::string show(const Subset& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (i) os << ",";
    os << s.members[i];
  }
  os << "}";
  return os.str();
}

FinMor Product::pair(const FinMor& f, const FinMor& g) const {
  if (f.dom != g.dom) throw Error("pairing requires a common domain");
  if (f.cod != left || g.cod != right) throw Error("pairing codomain mismatch");
  std::vector<std::size_t> t(f.dom.size);
  for (std::size_t i = 0; i < f.dom.size; ++i) t[i] = encode(f.table[i], g.table[i]);
  return FinMor{f.dom, obj, std::move(t)};
}

Product product(FinObj x, FinObj y) {
  FinObj obj{checked_mul(x.size, y.size)};
  std::vector<std::size_t> p1(obj.size), p2(obj.size);
  for (std::size_t v = 0; v < obj.size; ++v) {
    p1[v] = y.size == 0 ? 0 : v / y.size;
    p2[v] = y.size == 0 ? 0 : v % y.size;
  }
  return Product{obj, x, y, FinMor{obj, x, std::move(p1)}, FinMor{obj, y, std::move(p2)}};
}

Pullback pullback(const FinMor& f, const FinMor& g) {
  if (f.cod != g.cod) throw Error("pullback codomain mismatch");
  std::vector<std::pair<std::size_t, std::size_t>> elems;
  for (std::size_t a = 0; a < f.dom.size; ++a)
    for (std::size_t b = 0; b < g.dom.size; ++b)
      if (f.table[a] == g.table[b]) elems.emplace_back(a, b);
  FinObj obj{elems.size()};
  std::vector<std::size_t> p1(elems.size()), p2(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    p1[i] = elems[i].first;
    p2[i] = elems[i].second;
  }
  return Pullback{obj, FinMor{obj, f.dom, std::move(p1)}, FinMor{obj, g.dom, std::move(p2)},
                  std::move(elems)};
}

Subset image(const FinMor& f) { return mk_subset(f.cod, f.table); }

Factorization image_factorize(const FinMor& f) {
  Subset img = image(f);
  std::vector<std::size_t> index(f.cod.size, 0);
  for (std::size_t i = 0; i < img.members.size(); ++i) index[img.members[i]] = i;
  std::vector<std::size_t> e(f.dom.size);
  for (std::size_t i = 0; i < f.dom.size; ++i) e[i] = index[f.table[i]];
  FinObj mid{img.members.size()};
  return Factorization{FinMor{f.dom, mid, std::move(e)}, inclusion(img)};
}

FinMor copair(const FinMor& f, const FinMor& g, const FinMor& m, const FinMor& nm) {
  if (m.cod != nm.cod) throw Error("coproduct injections must share a codomain");
  if (!is_mono(m) || !is_mono(nm)) throw Error("coproduct injections must be monos");
  if (f.dom != m.dom || g.dom != nm.dom) throw Error("cocone legs must match the injections");
  if (f.cod != g.cod) throw Error("cocone legs must share a codomain");
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> t(m.cod.size, kNone);
  for (std::size_t i = 0; i < m.dom.size; ++i) t[m.table[i]] = f.table[i];
  for (std::size_t i = 0; i < nm.dom.size; ++i) {
    if (t[nm.table[i]] != kNone)
      throw Error("covers violated: element " + std::to_string(nm.table[i]) + " hit by both monos");
    t[nm.table[i]] = g.table[i];
  }
  for (std::size_t y = 0; y < t.size(); ++y)
    if (t[y] == kNone)
      throw Error("covers violated: element " + std::to_string(y) + " hit by neither mono");
  return FinMor{m.cod, f.cod, std::move(t)};
}

FinMor section_of_epi(const FinMor& e) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> s(e.cod.size, kNone);
  for (std::size_t x = 0; x < e.dom.size; ++x)
    if (s[e.table[x]] == kNone) s[e.table[x]] = x;
  for (std::size_t y = 0; y < s.size(); ++y)
    if (s[y] == kNone) throw Error("not an epimorphism: " + std::to_string(y) + " has no preimage");
  return FinMor{e.cod, e.dom, std::move(s)};
}

FinMor section_of_projection(FinObj x, FinObj y, std::size_t basepoint) {
  if (y.size == 0) throw Error("projection from a product with empty fiber has no section");
  if (basepoint >= y.size) throw Error("basepoint outside carrier");
  Product p = product(x, y);
  std::vector<std::size_t> t(x.size);
  for (std::size_t i = 0; i < x.size; ++i) t[i] = p.encode(i, basepoint);
  return FinMor{x, p.obj, std::move(t)};
}

FinMor Coproduct::mediate(const FinMor& f, const FinMor& g) const {
  return copair(f, g, inj1, inj2);
}

Coproduct coproduct(FinObj x, FinObj y) {
  FinObj obj{x.size + y.size};
  std::vector<std::size_t> i1(x.size), i2(y.size);
  for (std::size_t i = 0; i < x.size; ++i) i1[i] = i;
  for (std::size_t i = 0; i < y.size; ++i) i2[i] = x.size + i;
  return Coproduct{obj, x, y, FinMor{x, obj, std::move(i1)}, FinMor{y, obj, std::move(i2)}};
}

std::size_t Exponential::apply(std::size_t code, std::size_t a) const {
  for (std::size_t k = 0; k < a; ++k) code /= base.size;
  return code % base.size;
}

std::size_t Exponential::encode(const std::vector<std::size_t>& fn) const {
  if (fn.size() != arg.size) throw Error("function table has the wrong arity");
  std::size_t code = 0, weight = 1;
  for (std::size_t a = 0; a < fn.size(); ++a) {
    if (fn[a] >= base.size) throw Error("function value outside base carrier");
    code += fn[a] * weight;
    weight *= base.size;
  }
  return code;
}

FinMor Exponential::transpose(const FinMor& f, const Product& cxa) const {
  if (cxa.right != arg || f.dom != cxa.obj || f.cod != base)
    throw Error("transpose shape mismatch");
  std::vector<std::size_t> t(cxa.left.size);
  for (std::size_t c = 0; c < cxa.left.size; ++c) {
    std::vector<std::size_t> fn(arg.size);
    for (std::size_t a = 0; a < arg.size; ++a) fn[a] = f.table[cxa.encode(c, a)];
    t[c] = encode(fn);
  }
  return FinMor{cxa.left, obj, std::move(t)};
}

Exponential exponential(FinObj a, FinObj b) {
  FinObj obj{checked_pow(b.size, a.size)};
  Product dom = product(obj, a);
  Exponential ex{obj, a, b, dom, FinMor{}};
  std::vector<std::size_t> ev(dom.obj.size);
  for (std::size_t v = 0; v < dom.obj.size; ++v) {
    auto [code, arg] = dom.decode(v);
    ev[v] = ex.apply(code, arg);
  }
  ex.eval = FinMor{dom.obj, b, std::move(ev)};
  return ex;
}

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSizeLimit / a) throw Error("carrier size overflow");
  return a * b;
}

std::size_t checked_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace epscalc::finset
