#include "epscalc/model.hpp"

#include <sstream>

#include <json.hpp>

#include "lexer.hpp"

namespace epscalc::semantics {

using namespace epscalc::syntax;
using finset::FinMor;
using finset::FinObj;
using finset::Subset;

namespace {

struct RawModel {
  std::vector<std::pair<std::string, std::size_t>> carriers;
  std::vector<std::pair<std::string, std::size_t>> points;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> funs;
  std::vector<std::pair<std::string, std::vector<std::vector<std::size_t>>>> rels;
};

RawModel read_text(const std::string& src) {
  lex::Cursor cur(lex::tokenize(src));
  RawModel raw;
  while (!cur.at_end()) {
    std::string kw = cur.expect_ident("a model declaration");
    if (kw == "carrier" || kw == "point") {
      std::string name = cur.expect_ident("a type name");
      cur.expect("=");
      std::size_t n = cur.expect_number();
      (kw == "carrier" ? raw.carriers : raw.points).emplace_back(name, n);
    } else if (kw == "fun") {
      std::string name = cur.expect_ident("a function name");
      cur.expect("=");
      cur.expect("[");
      std::vector<std::size_t> table;
      if (!cur.accept("]")) {
        do table.push_back(cur.expect_number());
        while (cur.accept(","));
        cur.expect("]");
      }
      raw.funs.emplace_back(name, std::move(table));
    } else if (kw == "rel") {
      std::string name = cur.expect_ident("a relation name");
      cur.expect("=");
      cur.expect("{");
      std::vector<std::vector<std::size_t>> tuples;
      if (!cur.accept("}")) {
        do {
          cur.expect("(");
          std::vector<std::size_t> tup;
          if (!cur.accept(")")) {
            do tup.push_back(cur.expect_number());
            while (cur.accept(","));
            cur.expect(")");
          }
          tuples.push_back(std::move(tup));
        } while (cur.accept(","));
        cur.expect("}");
      }
      raw.rels.emplace_back(name, std::move(tuples));
    } else {
      cur.fail("unknown model declaration '" + kw + "'");
    }
    cur.expect(";");
  }
  return raw;
}

RawModel read_json(const std::string& src) {
  nlohmann::json j = nlohmann::json::parse(src);
  RawModel raw;
  if (j.contains("carriers"))
    for (const auto& [k, v] : j.at("carriers").items())
      raw.carriers.emplace_back(k, v.get<std::size_t>());
  if (j.contains("points"))
    for (const auto& [k, v] : j.at("points").items())
      raw.points.emplace_back(k, v.get<std::size_t>());
  if (j.contains("funs"))
    for (const auto& [k, v] : j.at("funs").items())
      raw.funs.emplace_back(k, v.get<std::vector<std::size_t>>());
  if (j.contains("rels"))
    for (const auto& [k, v] : j.at("rels").items())
      raw.rels.emplace_back(k, v.get<std::vector<std::vector<std::size_t>>>());
  return raw;
}

}  // namespace

Interpretation parse_model(const std::string& source, const Signature& sig) {
  std::size_t first = source.find_first_not_of(" \t\r\n");
  RawModel raw = (first != std::string::npos && source[first] == '{') ? read_json(source)
                                                                      : read_text(source);
  Interpretation interp;
  interp.sig = sig;

  for (const auto& [name, n] : raw.carriers) {
    if (!sig.has_base(name)) throw Error("carrier for undeclared type '" + name + "'");
    if (n == 0) throw Error("carrier for '" + name + "' must be pointed (size >= 1)");
  }
  for (const auto& base : sig.base_names()) {
    bool found = false;
    for (const auto& [name, n] : raw.carriers) {
      if (name == base) {
        interp.carriers.emplace_back(base, n);
        found = true;
        break;
      }
    }
    if (!found) throw Error("model assigns no carrier to type '" + base + "'");
  }
  for (const auto& [name, k] : raw.points) {
    if (!sig.has_base(name)) throw Error("point for undeclared type '" + name + "'");
    if (k != 0) throw Error("basepoints are frozen at 0; got " + std::to_string(k) + " for '" + name + "'");
  }

  for (auto& [name, table] : raw.funs) {
    if (!sig.has_fun(name)) throw Error("table for undeclared function '" + name + "'");
    const FunDecl& d = sig.fun(name);
    std::size_t dom = 1;
    for (const auto& a : d.args) dom = finset::checked_mul(dom, interpret_type_size(a, interp));
    std::size_t cod = interpret_type_size(d.result, interp);
    interp.funs.emplace(name, finset::mk_mor(FinObj{dom}, FinObj{cod}, std::move(table)));
  }

  for (const auto& [name, tuples] : raw.rels) {
    if (!sig.has_rel(name)) throw Error("table for undeclared relation '" + name + "'");
    const RelDecl& d = sig.rel(name);
    std::vector<std::size_t> sizes;
    std::size_t dom = 1;
    for (const auto& a : d.args) {
      sizes.push_back(interpret_type_size(a, interp));
      dom = finset::checked_mul(dom, sizes.back());
    }
    std::vector<std::size_t> members;
    for (const auto& tup : tuples) {
      if (tup.size() != sizes.size())
        throw Error("relation '" + name + "' expects " + std::to_string(sizes.size()) +
                    "-tuples, got a " + std::to_string(tup.size()) + "-tuple");
      std::size_t flat = 0;
      for (std::size_t i = 0; i < tup.size(); ++i) {
        if (tup[i] >= sizes[i])
          throw Error("relation '" + name + "' tuple entry " + std::to_string(tup[i]) +
                      " outside carrier of size " + std::to_string(sizes[i]));
        flat = flat * sizes[i] + tup[i];
      }
      members.push_back(flat);
    }
    interp.rels.emplace(name, finset::mk_subset(FinObj{dom}, std::move(members)));
  }
  return interp;
}

namespace {

std::vector<std::vector<std::size_t>> rel_tuples(const Interpretation& interp,
                                                 const std::string& name) {
  const RelDecl& d = interp.sig.rel(name);
  std::vector<std::size_t> sizes;
  for (const auto& a : d.args) sizes.push_back(interpret_type_size(a, interp));
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t flat : interp.rels.at(name).members) {
    std::vector<std::size_t> tup(sizes.size(), 0);
    std::size_t v = flat;
    for (std::size_t i = sizes.size(); i > 0; --i) {
      tup[i - 1] = v % sizes[i - 1];
      v /= sizes[i - 1];
    }
    out.push_back(std::move(tup));
  }
  return out;
}

}  // namespace

std::string show_model(const Interpretation& interp) {
  std::ostringstream os;
  for (const auto& [name, n] : interp.carriers) os << "carrier " << name << " = " << n << ";\n";
  for (const auto& name : interp.sig.fun_names()) {
    auto it = interp.funs.find(name);
    if (it == interp.funs.end()) continue;
    os << "fun " << name << " = [";
    for (std::size_t i = 0; i < it->second.table.size(); ++i) {
      if (i) os << ", ";
      os << it->second.table[i];
    }
    os << "];\n";
  }
  for (const auto& name : interp.sig.rel_names()) {
    if (!interp.rels.count(name)) continue;
    os << "rel " << name << " = {";
    auto tuples = rel_tuples(interp, name);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (i) os << ", ";
      os << "(";
      for (std::size_t j = 0; j < tuples[i].size(); ++j) {
        if (j) os << ", ";
        os << tuples[i][j];
      }
      os << ")";
    }
    os << "};\n";
  }
  return os.str();
}

std::string model_to_json_string(const Interpretation& interp) {
  nlohmann::ordered_json j;
  j["carriers"] = nlohmann::ordered_json::object();
  for (const auto& [name, n] : interp.carriers) j["carriers"][name] = n;
  j["funs"] = nlohmann::ordered_json::object();
  for (const auto& name : interp.sig.fun_names()) {
    auto it = interp.funs.find(name);
    if (it != interp.funs.end()) j["funs"][name] = it->second.table;
  }
  j["rels"] = nlohmann::ordered_json::object();
  for (const auto& name : interp.sig.rel_names())
    if (interp.rels.count(name)) j["rels"][name] = rel_tuples(interp, name);
  return j.dump();
}

}  // namespace epscalc::semantics
