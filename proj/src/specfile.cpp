#include "shiftlab/specfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace shiftlab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(s.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

Symbols block_of(const Alphabet& a, const std::string& text) {
  if (text == "()") return {};
  return parse_block(a, text);
}

std::string block_text(const Alphabet& a, const Symbols& b) { return b.empty() ? "()" : format_block(a, b); }

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw Error("bad integer '" + s + "'");
  return v;
}

class Parser {
 public:
  SpecFile spec;

  void line(int no, const std::string& raw) {
    line_ = no;
    std::string text = raw.substr(0, raw.find('#'));
    std::istringstream is(text);
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    if (tok.empty()) return;
    try {
      const std::string& kw = tok[0];
      if (kw == "universe") {
        universe(tok);
      } else if (kw == "alphabet") {
        alphabet(tok);
      } else if (kw == "subshift") {
        subshift(tok);
      } else if (kw == "ca") {
        automaton(tok);
      } else if (kw == "run") {
        run(tok);
      } else {
        fail("unknown statement '" + kw + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

 private:
  int line_ = 0;
  bool universe_set_ = false;
  bool used_ = false;
  std::map<std::string, bool> names_;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  void declare(const std::string& name) {
    if (!valid_name(name)) fail("bad name '" + name + "'");
    if (names_.count(name)) fail("duplicate name '" + name + "'");
    names_[name] = true;
    used_ = true;
  }

  // key=value pairs and bare flags after the first `skip` tokens.
  std::map<std::string, std::string> options(const std::vector<std::string>& tok, std::size_t skip,
                                             std::vector<std::string>* flags = nullptr) {
    std::map<std::string, std::string> out;
    for (std::size_t i = skip; i < tok.size(); ++i) {
      auto eq = tok[i].find('=');
      if (eq == std::string::npos) {
        if (!flags) fail("expected key=value, got '" + tok[i] + "'");
        flags->push_back(tok[i]);
        continue;
      }
      std::string key = tok[i].substr(0, eq);
      if (out.count(key)) fail("repeated key '" + key + "'");
      out[key] = tok[i].substr(eq + 1);
    }
    return out;
  }

  std::string take(std::map<std::string, std::string>& opts, const std::string& key) {
    auto it = opts.find(key);
    if (it == opts.end()) fail("missing " + key + "=");
    std::string v = it->second;
    opts.erase(it);
    return v;
  }

  void no_more(const std::map<std::string, std::string>& opts) {
    if (!opts.empty()) fail("unknown key '" + opts.begin()->first + "'");
  }

  std::string alphabet_ref(std::map<std::string, std::string>& opts) {
    auto it = opts.find("alphabet");
    if (it != opts.end()) {
      std::string n = it->second;
      opts.erase(it);
      if (!spec.alphabets.count(n)) fail("unknown alphabet '" + n + "'");
      return n;
    }
    if (spec.alphabets.size() != 1) fail("alphabet= is required when several alphabets are declared");
    return spec.alphabets.begin()->first;
  }

  void universe(const std::vector<std::string>& tok) {
    if (universe_set_) fail("universe declared twice");
    if (used_) fail("universe must precede other declarations");
    if (tok.size() == 2 && tok[1] == "Z") {
      spec.universe = Universe::integers();
    } else if (tok.size() == 2 && tok[1] == "N") {
      spec.universe = Universe::naturals();
    } else if (tok.size() == 3 && tok[1] == "free") {
      spec.universe = Universe::free(parse_int(tok[2]));
    } else {
      fail("expected: universe Z | N | free R");
    }
    universe_set_ = true;
  }

  void alphabet(const std::vector<std::string>& tok) {
    if (tok.size() < 3) fail("expected: alphabet NAME set ... | module m= k=");
    declare(tok[1]);
    if (tok[2] == "set") {
      if (tok.size() != 4) fail("expected: alphabet NAME set a,b,...");
      auto names = split(tok[3], ',');
      for (const auto& n : names)
        if (n.find_first_of(":=()") != std::string::npos) fail("bad symbol name '" + n + "'");
      spec.alphabets[tok[1]] = Alphabet::set(names);
    } else if (tok[2] == "module") {
      auto opts = options(tok, 3);
      int m = parse_int(take(opts, "m"));
      int k = parse_int(take(opts, "k"));
      no_more(opts);
      spec.alphabets[tok[1]] = Alphabet::module(m, k);
    } else {
      fail("alphabet kind must be set or module");
    }
  }

  void subshift(const std::vector<std::string>& tok) {
    if (tok.size() < 3) fail("expected: subshift NAME KIND ...");
    const std::string& name = tok[1];
    declare(name);
    const std::string& kind = tok[2];
    auto opts = options(tok, 3);
    if (kind == "sofic") {
      std::string src = take(opts, "source"), code = take(opts, "code");
      no_more(opts);
      if (!spec.automata.count(code)) fail("unknown automaton '" + code + "'");
      const auto& ca = spec.automata.at(code);
      spec.subshifts[name] = SoficPresentation::make(spec.sft(src), ca);
      spec.subshift_alphabet[name] = spec.ca_codomain.at(code);
      return;
    }
    std::string an = alphabet_ref(opts);
    const Alphabet& a = spec.alphabets.at(an);
    SftPresentation s;
    if (kind == "full") {
      s = SftPresentation::full(spec.universe, a);
    } else if (kind == "sft") {
      FiniteWindow w = FiniteWindow::parse(spec.universe, take(opts, "window"));
      const bool allow = opts.count("allow"), forbid = opts.count("forbid");
      if (allow == forbid) fail("exactly one of allow= and forbid= is required");
      std::string list = take(opts, allow ? "allow" : "forbid");
      std::vector<Symbols> blocks;
      if (!list.empty())
        for (const auto& b : split(list, ',')) {
          blocks.push_back(block_of(a, b));
          if (blocks.back().size() != w.size()) fail("block '" + b + "' does not fit window " + w.format());
        }
      s = allow ? SftPresentation::from_allowed(a, w, blocks) : SftPresentation::from_forbidden(a, w, blocks);
    } else if (kind == "sft_linear") {
      if (!a.is_module()) fail("sft_linear needs a module alphabet");
      FiniteWindow w = FiniteWindow::parse(spec.universe, take(opts, "window"));
      std::string g = take(opts, "generators");
      modlin::Matrix rows = g == "0" ? modlin::Matrix{} : modlin::parse_matrix(g);
      s = SftPresentation::from_submodule(a, w, modlin::Submodule::span(a.modulus(), w.size() * a.rank(), rows));
    } else {
      fail("subshift kind must be full, sft, sft_linear or sofic");
    }
    no_more(opts);
    spec.subshifts[name] = std::move(s);
    spec.subshift_alphabet[name] = an;
  }

  void automaton(const std::vector<std::string>& tok) {
    if (tok.size() < 2) fail("expected: ca NAME domain=... memory=...");
    const std::string& name = tok[1];
    declare(name);
    std::vector<std::string> flags;
    auto opts = options(tok, 2, &flags);
    std::string dom = take(opts, "domain");
    const SftPresentation& domain = spec.sft(dom);
    std::string cod = spec.subshift_alphabet.at(dom);
    if (opts.count("codomain")) {
      cod = take(opts, "codomain");
      if (!spec.alphabets.count(cod)) fail("unknown alphabet '" + cod + "'");
    }
    const Alphabet& b = spec.alphabets.at(cod);
    FiniteWindow m = FiniteWindow::parse(spec.universe, take(opts, "memory"));
    const bool linear = flags.size() == 1 && flags[0] == "linear";
    if (!flags.empty() && !linear) fail("unexpected word '" + flags[0] + "'");
    CellularAutomaton ca;
    if (linear) {
      if (!domain.alphabet.is_module() || !b.is_module()) fail("linear rules need module alphabets");
      std::vector<modlin::Matrix> coeffs;
      for (const auto& h : m.elements()) {
        std::string key = "c" + spec.universe.format(h);
        if (opts.count(key)) {
          coeffs.push_back(modlin::parse_matrix(take(opts, key)));
        } else {
          coeffs.emplace_back(b.rank(), modlin::Vec(domain.alphabet.rank(), 0));
        }
      }
      no_more(opts);
      ca = CellularAutomaton::from_linear(domain, b, m, std::move(coeffs));
    } else {
      std::map<Symbols, int> table;
      std::string entries = take(opts, "table");
      for (const auto& entry : entries.empty() ? std::vector<std::string>{} : split(entries, ',')) {
        auto colon = entry.rfind(':');
        if (colon == std::string::npos) fail("table entry '" + entry + "' needs BLOCK:SYMBOL");
        Symbols k = block_of(domain.alphabet, entry.substr(0, colon));
        if (k.size() != m.size()) fail("table block '" + entry.substr(0, colon) + "' does not fit the memory");
        if (!table.emplace(k, b.parse_symbol(entry.substr(colon + 1))).second)
          fail("duplicate table entry '" + entry + "'");
      }
      no_more(opts);
      ca = CellularAutomaton::from_table(domain, b, m, table);
    }
    spec.automata[name] = std::move(ca);
    spec.ca_domain[name] = dom;
    spec.ca_codomain[name] = cod;
  }

  void run(const std::vector<std::string>& tok) {
    if (tok.size() < 2) fail("expected: run COMMAND key=value ...");
    used_ = true;
    SpecCommand c;
    c.line = line_;
    c.name = tok[1];
    c.params = options(tok, 2);
    spec.commands.push_back(std::move(c));
  }
};

}  // namespace

const Alphabet& SpecFile::alphabet(const std::string& name) const {
  auto it = alphabets.find(name);
  if (it == alphabets.end()) throw Error("unknown alphabet '" + name + "'");
  return it->second;
}

const Presentation& SpecFile::subshift(const std::string& name) const {
  auto it = subshifts.find(name);
  if (it == subshifts.end()) throw Error("unknown subshift '" + name + "'");
  return it->second;
}

const SftPresentation& SpecFile::sft(const std::string& name) const {
  const auto* s = std::get_if<SftPresentation>(&subshift(name));
  if (!s) throw Error("subshift '" + name + "' is sofic; a finite-type presentation is required");
  return *s;
}

const CellularAutomaton& SpecFile::automaton(const std::string& name) const {
  auto it = automata.find(name);
  if (it == automata.end()) throw Error("unknown automaton '" + name + "'");
  return it->second;
}

std::string SpecFile::alphabet_name(const Alphabet& a) const {
  for (const auto& [n, x] : alphabets)
    if (x == a) return n;
  return "";
}

SpecFile parse_spec(std::istream& in) {
  Parser p;
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) p.line(++no, raw);
  return std::move(p.spec);
}

SpecFile parse_spec_text(const std::string& text) {
  std::istringstream is(text);
  return parse_spec(is);
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read spec file '" + path + "'");
  return parse_spec(in);
}

std::string format_universe(const Universe& u) {
  switch (u.kind()) {
    case UniverseKind::Z:
      return "universe Z";
    case UniverseKind::N:
      return "universe N";
    case UniverseKind::Free:
      return "universe free " + std::to_string(u.rank());
  }
  return "";
}

std::string format_alphabet(const std::string& name, const Alphabet& a) {
  return "alphabet " + name + " " + a.describe();
}

std::string format_ca(const std::string& name, const std::string& domain, const std::string& codomain,
                      const CellularAutomaton& ca) {
  std::string out = "ca " + name + " domain=" + domain + " codomain=" + codomain + " memory=" + ca.memory().format();
  const LocalRule& r = ca.rule();
  if (r.coefficients) {
    out += " linear";
    for (std::size_t j = 0; j < r.memory.size(); ++j)
      out += " c" + ca.universe().format(r.memory.elements()[j]) + "=" + modlin::format_matrix((*r.coefficients)[j]);
    return out;
  }
  out += " table=";
  for (std::size_t i = 0; i < r.domain.size(); ++i) {
    if (i) out += ',';
    out += block_text(ca.domain_alphabet(), r.domain.blocks()[i]) + ":" + ca.codomain().name(r.outputs[i]);
  }
  return out;
}

}  // namespace shiftlab
