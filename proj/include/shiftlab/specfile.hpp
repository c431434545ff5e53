#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "shiftlab/error.hpp"
#include "shiftlab/sofic.hpp"

namespace shiftlab {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct SpecCommand {
  int line = 0;
  std::string name;
  std::map<std::string, std::string> params;
};

// A parsed spec file. Line grammar (blank lines and `#` comments ignored):
//
//   universe Z | N | free R
//   alphabet NAME set a,b,c
//   alphabet NAME module m=M k=K
//   subshift NAME full [alphabet=A]
//   subshift NAME sft [alphabet=A] window=W allow=B,B,... | forbid=B,...
//   subshift NAME sft_linear [alphabet=A] window=W generators=ROWS
//   subshift NAME sofic source=S code=C
//   ca NAME domain=S [codomain=A] memory=W table=B:s,B:s,...
//   ca NAME domain=S [codomain=A] memory=W linear c0=ROWS c1=ROWS ...
//   run COMMAND key=value ...
struct SpecFile {
  Universe universe = Universe::integers();
  std::map<std::string, Alphabet> alphabets;
  std::map<std::string, Presentation> subshifts;
  std::map<std::string, std::string> subshift_alphabet;
  std::map<std::string, CellularAutomaton> automata;
  std::map<std::string, std::string> ca_domain;
  std::map<std::string, std::string> ca_codomain;
  std::vector<SpecCommand> commands;

  const Alphabet& alphabet(const std::string& name) const;
  const Presentation& subshift(const std::string& name) const;
  // Throws unless the subshift is of finite type.
  const SftPresentation& sft(const std::string& name) const;
  const CellularAutomaton& automaton(const std::string& name) const;
  // Name of a declared alphabet equal to `a`, or empty.
  std::string alphabet_name(const Alphabet& a) const;
};

SpecFile parse_spec(std::istream& in);
SpecFile parse_spec_text(const std::string& text);
SpecFile load_spec(const std::string& path);

std::string format_universe(const Universe& u);
std::string format_alphabet(const std::string& name, const Alphabet& a);
std::string format_ca(const std::string& name, const std::string& domain, const std::string& codomain,
                      const CellularAutomaton& ca);

}  // namespace shiftlab
