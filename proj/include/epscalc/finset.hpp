#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "epscalc/error.hpp"

namespace epscalc::finset {

// Carrier {0, ..., n-1}. n = 0 is the initial object, n = 1 the terminal.
struct FinObj {
  std::size_t size = 0;
  friend bool operator==(const FinObj&, const FinObj&) = default;
};

// A total function given by its table; composition is table lookup.
struct FinMor {
  FinObj dom, cod;
  std::vector<std::size_t> table;  // length dom.size, entries < cod.size
  friend bool operator==(const FinMor&, const FinMor&) = default;

  std::size_t operator()(std::size_t x) const { return table[x]; }
};

FinMor mk_mor(FinObj dom, FinObj cod, std::vector<std::size_t> table);
FinMor identity(FinObj x);
FinMor constant(FinObj dom, FinObj cod, std::size_t value);
FinMor bang(FinObj x);  // unique map to the terminal object

// (g ∘ f)(i) = g.table[f.table[i]]
FinMor compose(const FinMor& g, const FinMor& f);

bool is_epi(const FinMor& f);   // surjective
bool is_mono(const FinMor& f);  // injective
bool is_iso(const FinMor& f);
FinMor inverse(const FinMor& f);  // defined for isos

std::string show(const FinMor& f);

// Canonical subobject representative: a sorted, duplicate-free member list.
struct Subset {
  FinObj carrier;
  std::vector<std::size_t> members;
  friend bool operator==(const Subset&, const Subset&) = default;

  std::size_t size() const { return members.size(); }
};

Subset mk_subset(FinObj carrier, std::vector<std::size_t> members);  // canonicalizes
Subset full_subset(FinObj carrier);
Subset empty_subset(FinObj carrier);
bool contains(const Subset& s, std::size_t x);
FinMor inclusion(const Subset& s);
Subset complement(const Subset& s);
std::string show(const Subset& s);

// Binary product with the frozen row-major encoding <x,y> = x*|Y| + y.
struct Product {
  FinObj obj, left, right;
  FinMor proj1, proj2;

  std::size_t encode(std::size_t x, std::size_t y) const { return x * right.size + y; }
  std::pair<std::size_t, std::size_t> decode(std::size_t v) const {
    return {v / right.size, v % right.size};
  }
  // The unique mediator <f, g> : dom(f) -> obj for f, g with common domain.
  FinMor pair(const FinMor& f, const FinMor& g) const;
};

Product product(FinObj x, FinObj y);

// Pullback of f : A -> C and g : B -> C; elements enumerated in
// lexicographic (a, b) order.
struct Pullback {
  FinObj obj;
  FinMor p1, p2;
  std::vector<std::pair<std::size_t, std::size_t>> elements;
};

Pullback pullback(const FinMor& f, const FinMor& g);

// f = m ∘ e with e a (regular) epi onto the image and m the sorted
// inclusion of the attained values.
struct Factorization {
  FinMor e;
  FinMor m;
};

Factorization image_factorize(const FinMor& f);
Subset image(const FinMor& f);

// Mediator [f, g] out of a coproduct diagram (m, nm): the two monos must
// partition the codomain of m.
FinMor copair(const FinMor& f, const FinMor& g, const FinMor& m, const FinMor& nm);

// Deterministic choice: s_e(y) is the least preimage of y.
FinMor section_of_epi(const FinMor& e);

// Section of the first projection X×Y -> X at the given basepoint of Y:
// x |-> <x, basepoint>.
FinMor section_of_projection(FinObj x, FinObj y, std::size_t basepoint);

// Coproduct with the left block first.
struct Coproduct {
  FinObj obj, left, right;
  FinMor inj1, inj2;
  FinMor mediate(const FinMor& f, const FinMor& g) const;
};

Coproduct coproduct(FinObj x, FinObj y);

// Exponential B^A; codes are base-|B| little-endian by argument, so code c
// sends a to (c / |B|^a) mod |B|.
struct Exponential {
  FinObj obj;            // B^A
  FinObj arg, base;      // A, B
  Product eval_domain;   // B^A × A
  FinMor eval;           // B^A × A -> B

  std::size_t apply(std::size_t code, std::size_t a) const;
  std::size_t encode(const std::vector<std::size_t>& fn) const;
  // Currying of f : C×A -> B (with cxa the product used to form f's domain).
  FinMor transpose(const FinMor& f, const Product& cxa) const;
};

Exponential exponential(FinObj a, FinObj b);

// Overflow-checked size arithmetic for interpreting type constructors.
std::size_t checked_mul(std::size_t a, std::size_t b);
std::size_t checked_pow(std::size_t base, std::size_t exp);

}  // namespace epscalc::finset
