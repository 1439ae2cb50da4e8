#include "epscalc/proof.hpp"

#include <sstream>

#include "epscalc/parser.hpp"

namespace epscalc::kernel {

using namespace epscalc::syntax;

namespace {

struct SToken {
  enum class Kind { LParen, RParen, Atom, String, End };
  Kind kind;
  std::string text;
  int line, col;
};

std::vector<SToken> slex(const std::string& src) {
  std::vector<SToken> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') bump();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump();
      continue;
    }
    int tl = line, tc = col;
    if (c == '(') {
      out.push_back({SToken::Kind::LParen, "(", tl, tc});
      bump();
      continue;
    }
    if (c == ')') {
      out.push_back({SToken::Kind::RParen, ")", tl, tc});
      bump();
      continue;
    }
    if (c == '"') {
      bump();
      std::string s;
      while (i < src.size() && src[i] != '"') {
        s += src[i];
        bump();
      }
      if (i == src.size()) throw ParseError(tl, tc, "unterminated string");
      bump();
      out.push_back({SToken::Kind::String, std::move(s), tl, tc});
      continue;
    }
    std::string a;
    while (i < src.size() && !std::isspace(static_cast<unsigned char>(src[i])) && src[i] != '(' &&
           src[i] != ')' && src[i] != '"' && src[i] != '#') {
      a += src[i];
      bump();
    }
    out.push_back({SToken::Kind::Atom, std::move(a), tl, tc});
  }
  out.push_back({SToken::Kind::End, "", line, col});
  return out;
}

class ProofReader {
 public:
  ProofReader(std::vector<SToken> toks, const Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

  bool at_end() const { return toks_[pos_].kind == SToken::Kind::End; }

  DerivPtr tree() {
    expect(SToken::Kind::LParen, "'('");
    SToken head = toks_[pos_];
    if (head.kind != SToken::Kind::Atom) fail(head, "expected a rule name");
    ++pos_;
    auto tag = rule_from_name(head.text);
    if (!tag) fail(head, "unknown rule '" + head.text + "'");

    std::vector<SToken> args;
    while (toks_[pos_].kind == SToken::Kind::String) args.push_back(toks_[pos_++]);

    expect(SToken::Kind::LParen, "'(' opening the premise list");
    std::vector<DerivPtr> premises;
    while (toks_[pos_].kind != SToken::Kind::RParen) premises.push_back(tree());
    ++pos_;  // close premise list

    SToken seq_tok = toks_[pos_];
    if (seq_tok.kind != SToken::Kind::String) fail(seq_tok, "expected the conclusion sequent string");
    ++pos_;
    expect(SToken::Kind::RParen, "')'");

    Sequent concl = parse_in(seq_tok, [&] { return parser::parse_sequent(seq_tok.text, sig_); });
    Rule rule{*tag, nullptr, nullptr, ""};
    switch (*tag) {
      case RuleTag::ExistsI:
      case RuleTag::ForallE: {
        if (args.size() != 1) fail(head, std::string(rule_name(*tag)) + " takes one witness argument");
        rule.witness =
            parse_in(args[0], [&] { return parser::parse_term(args[0].text, sig_, concl.ctx); });
        break;
      }
      case RuleTag::EqSubst: {
        if (args.size() != 2) fail(head, "eq-subst takes a target formula and a variable");
        rule.var = args[1].text;
        // The target's distinguished variable takes the type of the equated
        // terms, read off the first premise.
        if (premises.empty() || premises[0]->conclusion.concl->kind != Formula::Kind::Eq)
          fail(args[0], "eq-subst's first premise must conclude an equation");
        TypePtr a = term_type(premises[0]->conclusion.concl->lhs_term);
        Context ext = parse_in(args[1], [&] { return concl.ctx.extended(rule.var, a); });
        rule.target = parse_in(args[0], [&] { return parser::parse_formula(args[0].text, sig_, ext); });
        break;
      }
      default:
        if (!args.empty()) fail(head, std::string(rule_name(*tag)) + " takes no arguments");
    }
    return mk_node(std::move(rule), std::move(premises), std::move(concl));
  }

 private:
  template <typename F>
  auto parse_in(const SToken& tok, F f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      throw ParseError(tok.line, tok.col, e.what());
    }
  }

  void expect(SToken::Kind kind, const std::string& what) {
    if (toks_[pos_].kind != kind) fail(toks_[pos_], "expected " + what);
    ++pos_;
  }

  [[noreturn]] void fail(const SToken& tok, const std::string& msg) {
    throw ParseError(tok.line, tok.col, msg);
  }

  std::vector<SToken> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

void write_node(const Derivation& d, std::ostringstream& os, int indent) {
  std::string pad(indent, ' ');
  os << pad << "(" << rule_name(d.rule.tag);
  switch (d.rule.tag) {
    case RuleTag::ExistsI:
    case RuleTag::ForallE:
      os << " \"" << show(d.rule.witness) << "\"";
      break;
    case RuleTag::EqSubst:
      os << " \"" << show(d.rule.target) << "\" \"" << d.rule.var << "\"";
      break;
    default:
      break;
  }
  if (d.premises.empty()) {
    os << " ()";
  } else {
    os << "\n" << pad << "  (";
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      os << "\n";
      write_node(*d.premises[i], os, indent + 3);
    }
    os << ")";
  }
  os << "\n" << pad << "  \"" << show(d.conclusion) << "\")";
}

}  // namespace

DerivPtr parse_proof(const std::string& source, const Signature& sig) {
  ProofReader r(slex(source), sig);
  DerivPtr d = r.tree();
  if (!r.at_end()) throw ParseError(0, 0, "trailing input after the proof tree");
  return d;
}

std::vector<DerivPtr> parse_proofs(const std::string& source, const Signature& sig) {
  ProofReader r(slex(source), sig);
  std::vector<DerivPtr> out;
  while (!r.at_end()) out.push_back(r.tree());
  return out;
}

std::string to_sexpr(const Derivation& d) {
  std::ostringstream os;
  write_node(d, os, 0);
  os << "\n";
  return os.str();
}

}  // namespace epscalc::kernel
