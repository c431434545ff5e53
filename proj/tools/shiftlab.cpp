// Command-line front end: parses a spec file and runs one command on it.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "shiftlab/report.hpp"
#include "shiftlab/specfile.hpp"

using namespace shiftlab;
using report::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct Options {
  std::string spec;
  std::string ca;
  std::string subshift;
  std::string other;
  std::string window;
  std::string report;
  std::string graph;
  int depth = 8;
  int nmax = 64;
};

struct Outcome {
  int code = kOk;
  json result = json::object();
};

class UsageError : public Error {
 public:
  using Error::Error;
};

const char* status_name(int code) {
  switch (code) {
    case kOk:
      return "ok";
    case kFail:
      return "fail";
    default:
      return "inconclusive";
  }
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
}

const CellularAutomaton& need_ca(const SpecFile& spec, const Options& o) {
  require(o.ca, "--ca");
  if (!spec.automata.count(o.ca)) throw UsageError("unknown automaton '" + o.ca + "'");
  return spec.automaton(o.ca);
}

const Presentation& need_subshift(const SpecFile& spec, const std::string& name, const char* flag) {
  require(name, flag);
  if (!spec.subshifts.count(name)) throw UsageError("unknown subshift '" + name + "'");
  return spec.subshift(name);
}

const SftPresentation& need_sft(const SpecFile& spec, const std::string& name, const char* flag) {
  const Presentation& p = need_subshift(spec, name, flag);
  if (!std::holds_alternative<SftPresentation>(p)) throw UsageError("subshift '" + name + "' is not of finite type");
  return std::get<SftPresentation>(p);
}

SoficPresentation as_sofic(const Presentation& p) {
  if (const auto* s = std::get_if<SoficPresentation>(&p)) return *s;
  return SoficPresentation::of_sft(std::get<SftPresentation>(p));
}

std::string name_or(const SpecFile& spec, const Alphabet& a, const std::string& fallback) {
  std::string n = spec.alphabet_name(a);
  return n.empty() ? fallback : n;
}

void write_graph(const Options& o, const Presentation& p) {
  if (o.graph.empty()) return;
  std::string dot = presentation_graph(p).to_dot(alphabet_of(p));
  if (o.graph == "-") {
    std::cout << dot;
    return;
  }
  std::ofstream f(o.graph);
  if (!f) throw UsageError("cannot write " + o.graph);
  f << dot;
}

Outcome cmd_check_injective(const SpecFile& spec, const Options& o, std::ostream& out) {
  const auto& ca = need_ca(spec, o);
  InjectivityResult r = check_injective(ca);
  out << "injective: " << (r.injective ? "yes" : "no") << " (" << (r.linear_track ? "linear" : "set")
      << " track)\n" << r.message << "\n";
  return {r.injective ? kOk : kFail, report::injectivity(r, ca.domain_alphabet())};
}

Outcome cmd_inverse_window(const SpecFile& spec, const Options& o, std::ostream& out) {
  const auto& ca = need_ca(spec, o);
  InjectivityResult inj = check_injective(ca);
  if (!inj.injective) {
    out << "not injective: " << inj.message << "\n";
    return {kFail, {{"injectivity", report::injectivity(inj, ca.domain_alphabet())}}};
  }
  InverseWindowResult r = find_inverse_window(ca, o.nmax);
  if (r.status == InverseWindowResult::Status::Found) {
    out << "N = " << r.window.format() << " (first success at n = " << *r.transcript.first_success
        << ", window " << r.unminimized.format() << ")\n";
    return {kOk, report::window_search(r, ca.domain_alphabet())};
  }
  out << "inconclusive: no inverse window up to n = " << o.nmax << "\n";
  return {kInconclusive, report::window_search(r, ca.domain_alphabet())};
}

Outcome cmd_synthesize(const SpecFile& spec, const Options& o, std::ostream& out) {
  const auto& ca = need_ca(spec, o);
  CertificateOptions opt;
  opt.nmax = o.nmax;
  InverseCertificate c = certify(ca, opt);
  out << "N = " << c.inverse_window.format() << ", merged window M' = " << c.merged.format() << "\n";
  out << "eta on " << c.eta.domain.size() << " blocks";
  if (c.eta_linear) out << ", matrix " << modlin::format_matrix(c.eta_linear->matrix());
  out << "\n";
  std::string a = name_or(spec, ca.domain_alphabet(), "A");
  std::string b = name_or(spec, ca.codomain(), "B");
  out << format_sft("lambda", b, c.lambda) << "\n";
  out << format_ca("sigma", "lambda", a, c.sigma) << "\n";
  out << "sigma o tau = id on " << c.blocks_checked << " blocks of width " << c.block_width_checked << " and "
      << c.periodic_checked << " periodic points of period <= " << c.max_period_checked << "\n";
  return {kOk, report::certificate(c, ca.domain_alphabet())};
}

Outcome cmd_image_sft(const SpecFile& spec, const Options& o, std::ostream& out) {
  const auto& ca = need_ca(spec, o);
  const auto& delta = need_sft(spec, o.subshift, "--subshift");
  CertificateOptions opt;
  opt.nmax = o.nmax;
  InverseCertificate c = certify(ca, opt);
  ImageSftResult r = image_sft(ca, delta, c, o.depth);
  out << format_sft("image", name_or(spec, ca.codomain(), "B"), r.presentation) << "\n";
  out << r.presentation.allowed.size() << " allowed blocks on window " << r.presentation.window().format()
      << "; exact equality with the sofic image: " << (r.exact_equal ? "yes" : "no") << "; to depth " << r.depth
      << ": " << (r.depth_equal ? "yes" : "no") << "\n";
  write_graph(o, r.presentation);
  return {r.verified() ? kOk : kFail, report::image(r)};
}

Outcome cmd_recover(const SpecFile& spec, const Options& o, std::ostream& out) {
  const auto& ca = need_ca(spec, o);
  const auto& image = need_sft(spec, o.subshift, "--subshift");
  CertificateOptions opt;
  opt.nmax = o.nmax;
  InverseCertificate c = certify(ca, opt);
  RecoverResult r = recover_preimage_sft(ca, image, c, o.depth);
  out << format_sft("preimage", name_or(spec, ca.domain_alphabet(), "A"), r.presentation) << "\n";
  out << r.presentation.allowed.size() << " allowed blocks on window " << r.presentation.window().format()
      << "; exact equality with sigma(image): " << (r.exact_equal ? "yes" : "no") << "\n";
  write_graph(o, r.presentation);
  return {r.verified() ? kOk : kFail, report::recovery(r)};
}

void describe_sofic(const SoficPresentation& s, int depth, std::ostream& out) {
  out << "source window " << s.source.window().format() << ", code memory " << s.code.memory().format() << "\n";
  out << "block counts by length:";
  for (int len = 1; len <= depth; ++len)
    out << " " << restrict(s, FiniteWindow::interval(s.universe(), 0, len - 1)).size();
  out << "\n";
}

Outcome cmd_sofic_image(const SpecFile& spec, const Options& o, std::ostream& out) {
  const auto& ca = need_ca(spec, o);
  SoficPresentation delta = as_sofic(need_subshift(spec, o.subshift, "--subshift"));
  SoficPresentation r = sofic_image(ca, delta);
  bool agree = image_agrees_to_depth(r, ca, delta, o.depth);
  describe_sofic(r, o.depth, out);
  out << "agrees with the pointwise image to depth " << o.depth << ": " << (agree ? "yes" : "no") << "\n";
  write_graph(o, r);
  json j = report::presentation(r);
  j["depth"] = o.depth;
  j["depth_agrees"] = agree;
  return {agree ? kOk : kFail, j};
}

Outcome cmd_sofic_preimage(const SpecFile& spec, const Options& o, std::ostream& out) {
  const auto& ca = need_ca(spec, o);
  SoficPresentation image = as_sofic(need_subshift(spec, o.subshift, "--subshift"));
  CertificateOptions opt;
  opt.nmax = o.nmax;
  InverseCertificate c = certify(ca, opt);
  SoficPresentation r = sofic_preimage(ca, image, c);
  bool agree = image_agrees_to_depth(r, c.sigma, image, o.depth);
  describe_sofic(r, o.depth, out);
  out << "agrees with the pointwise preimage to depth " << o.depth << ": " << (agree ? "yes" : "no") << "\n";
  write_graph(o, r);
  json j = report::presentation(r);
  j["depth"] = o.depth;
  j["depth_agrees"] = agree;
  return {agree ? kOk : kFail, j};
}

Outcome cmd_reduce(const SpecFile& spec, const Options& o, std::ostream& out) {
  const auto& ca = need_ca(spec, o);
  ReducedAutomaton r = direct_sum_reduce(ca);
  InjectivityResult direct = check_injective(ca);
  InjectivityResult reduced = check_injective(r.ca);
  out << format_alphabet("S", r.input.sum) << "\n" << format_alphabet("T", r.output.sum) << "\n";
  out << format_sft("lifted", "S", r.ca.domain()) << "\n";
  out << format_ca("reduced", "lifted", "T", r.ca) << "\n";
  out << "injective: " << (direct.injective ? "yes" : "no") << " directly, " << (reduced.injective ? "yes" : "no")
      << " after reduction\n";
  json j;
  j["automaton"] = report::automaton(r.ca);
  j["domain"] = report::presentation(r.ca.domain());
  j["injective"] = direct.injective;
  j["reduced_injective"] = reduced.injective;
  return {direct.injective == reduced.injective ? kOk : kFail, j};
}

Outcome cmd_restrict(const SpecFile& spec, const Options& o, std::ostream& out) {
  const Presentation& p = need_subshift(spec, o.subshift, "--subshift");
  require(o.window, "--window");
  FiniteWindow w = FiniteWindow::parse(spec.universe, o.window);
  BlockSet b;
  const bool bounded = !spec.universe.is_linear();
  if (bounded) {
    const auto* s = std::get_if<SftPresentation>(&p);
    if (!s) throw UsageError("free-monoid restriction needs a finite-type subshift");
    b = restrict_bounded(*s, w, o.depth);
  } else {
    b = restrict(p, w);
  }
  const Alphabet& a = alphabet_of(p);
  json blocks = json::array();
  for (const auto& x : b.blocks()) {
    std::string t = x.empty() ? "()" : format_block(a, x);
    out << t << "\n";
    blocks.push_back(t);
  }
  out << b.size() << " blocks on " << w.format() << (bounded ? " (upper approximation)" : "") << "\n";
  json j{{"window", w.format()}, {"blocks", blocks}, {"exact", !bounded}};
  if (bounded) j["depth"] = o.depth;
  return {kOk, j};
}

Outcome cmd_equal(const SpecFile& spec, const Options& o, std::ostream& out) {
  const Presentation& a = need_subshift(spec, o.subshift, "--subshift");
  const Presentation& b = need_subshift(spec, o.other, "--other");
  bool exact = presentations_equal(a, b);
  bool depth = equal_to_depth(a, b, o.depth);
  out << "equal: " << (exact ? "yes" : "no") << " (to depth " << o.depth << ": " << (depth ? "yes" : "no") << ")\n";
  return {exact ? kOk : kFail, {{"equal", exact}, {"depth", o.depth}, {"depth_equal", depth}}};
}

Outcome cmd_emit_graph(const SpecFile& spec, const Options& o, std::ostream& out) {
  const Presentation& p = need_subshift(spec, o.subshift, "--subshift");
  TransferGraph g = presentation_graph(p);
  Options copy = o;
  if (copy.graph.empty()) copy.graph = "-";
  write_graph(copy, p);
  if (copy.graph != "-") out << g.size() << " vertices, " << g.edge_count() << " edges written to " << copy.graph << "\n";
  return {kOk, {{"vertices", g.size()}, {"edges", g.edge_count()}, {"width", g.width()}}};
}

using Handler = Outcome (*)(const SpecFile&, const Options&, std::ostream&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"check-injective", cmd_check_injective}, {"inverse-window", cmd_inverse_window},
      {"synthesize-inverse", cmd_synthesize},   {"image-sft", cmd_image_sft},
      {"recover-sft", cmd_recover},             {"sofic-image", cmd_sofic_image},
      {"sofic-preimage", cmd_sofic_preimage},   {"reduce-direct-sum", cmd_reduce},
      {"restrict", cmd_restrict},               {"equal", cmd_equal},
      {"emit-graph", cmd_emit_graph},
  };
  return h;
}

json params_of(const Options& o) {
  json p = json::object();
  if (!o.ca.empty()) p["ca"] = o.ca;
  if (!o.subshift.empty()) p["subshift"] = o.subshift;
  if (!o.other.empty()) p["other"] = o.other;
  if (!o.window.empty()) p["window"] = o.window;
  p["depth"] = o.depth;
  p["nmax"] = o.nmax;
  return p;
}

// Runs one command; errors become a failed or inconclusive outcome.
Outcome execute(const SpecFile& spec, const std::string& name, const Options& o, std::ostream& out) {
  auto it = handlers().find(name);
  if (it == handlers().end()) throw UsageError("unknown command '" + name + "'");
  try {
    return it->second(spec, o, out);
  } catch (const UsageError&) {
    throw;
  } catch (const CapExceeded& e) {
    out << "inconclusive: " << e.what() << "\n";
    return {kInconclusive, {{"error", e.what()}}};
  } catch (const Error& e) {
    out << "failed: " << e.what() << "\n";
    return {kFail, {{"error", e.what()}}};
  }
}

Options options_from(const SpecCommand& c, const Options& base) {
  Options o = base;
  for (const auto& [k, v] : c.params) {
    if (k == "ca") {
      o.ca = v;
    } else if (k == "subshift") {
      o.subshift = v;
    } else if (k == "other") {
      o.other = v;
    } else if (k == "window") {
      o.window = v;
    } else if (k == "depth") {
      o.depth = std::stoi(v);
    } else if (k == "nmax") {
      o.nmax = std::stoi(v);
    } else {
      throw ParseError(c.line, "unknown run parameter '" + k + "'");
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftlab: injectivity, left inverses and image presentations for cellular automata on subshifts"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--spec", o.spec, "spec file")->required();
    s->add_option("--ca", o.ca, "cellular automaton name");
    s->add_option("--subshift", o.subshift, "subshift name");
    s->add_option("--other", o.other, "second subshift name (equal)");
    s->add_option("--window", o.window, "window, e.g. 0..3 or {0,2}");
    s->add_option("--depth", o.depth, "verification depth")->check(CLI::PositiveNumber);
    s->add_option("--nmax", o.nmax, "inverse window search cutoff")->check(CLI::NonNegativeNumber);
    s->add_option("--report", o.report, "write a JSON report");
    s->add_option("--emit-graph", o.graph, "write the presentation graph as DOT ('-' for stdout)");
    subs.emplace_back(name, s);
  };
  add("check-injective", "decide injectivity");
  add("inverse-window", "find a window N determining x(0) from the image on N");
  add("synthesize-inverse", "build and verify a left-inverse automaton");
  add("image-sft", "finite-type presentation of the image of an SFT");
  add("recover-sft", "finite-type presentation of the preimage of an image SFT");
  add("sofic-image", "sofic presentation of an image");
  add("sofic-preimage", "sofic presentation of a preimage");
  add("reduce-direct-sum", "reduce to an automaton on the direct-sum alphabet");
  add("restrict", "blocks of a subshift on a window");
  add("equal", "exact equality of two subshifts");
  add("emit-graph", "DOT presentation graph of a subshift");
  add("run", "run every `run` line of the spec file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  std::string command;
  for (auto& [name, s] : subs)
    if (s->parsed()) command = name;

  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  json commands = json::array();
  json timing = json::array();
  int code = kOk;
  try {
    SpecFile spec = load_spec(o.spec);
    std::vector<std::pair<std::string, Options>> todo;
    if (command == "run") {
      for (const auto& c : spec.commands) todo.emplace_back(c.name, options_from(c, o));
      if (todo.empty()) throw UsageError("spec file has no run lines");
    } else {
      todo.emplace_back(command, o);
    }
    for (const auto& [name, opts] : todo) {
      if (todo.size() > 1) std::cout << "== " << name << "\n";
      const auto t0 = clock::now();
      Outcome r = execute(spec, name, opts, std::cout);
      const double secs = std::chrono::duration<double>(clock::now() - t0).count();
      commands.push_back({{"command", name}, {"params", params_of(opts)}, {"status", status_name(r.code)},
                          {"result", r.result}});
      timing.push_back({{"command", name}, {"seconds", secs}});
      code = std::max(code, r.code);
    }
  } catch (const ParseError& e) {
    std::cerr << o.spec << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (!o.report.empty()) {
    json rep;
    rep["result"] = {{"commands", commands}, {"status", status_name(code)}};
    rep["timing"] = {{"commands", timing},
                     {"total_seconds", std::chrono::duration<double>(clock::now() - start).count()}};
    std::ofstream f(o.report);
    if (!f) {
      std::cerr << "cannot write " << o.report << "\n";
      return kUsage;
    }
    f << rep.dump(2) << "\n";
  }
  return code;
}
