#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "shiftlab/report.hpp"
#include "shiftlab/specfile.hpp"

using namespace shiftlab;
using namespace fixture;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_spec_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string temp_path(const std::string& name) { return std::string(SHIFTLAB_TEST_TMP) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(SHIFTLAB_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string spec(const std::string& file) { return std::string(SHIFTLAB_SPECS) + "/" + file; }

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_SUITE("specfile") {
  TEST_CASE("golden mean file") {
    auto f = load_spec(spec("golden_mean.spec"));
    CHECK(f.universe == Universe::integers());
    CHECK(sft_equal(f.sft("gm"), golden_mean()));
    CHECK(f.automaton("tau2").rule().outputs == tau2().rule().outputs);
    CHECK(f.commands.size() == 4);
    CHECK(f.commands[2].name == "image-sft");
    CHECK(f.commands[2].params.at("subshift") == "gm");
  }

  TEST_CASE("linear and sofic declarations") {
    auto f = load_spec(spec("involution.spec"));
    CHECK(f.automaton("e3").is_linear());
    CHECK(f.alphabet("v") == Alphabet::module(2, 2));
    auto even = load_spec(spec("even_shift.spec"));
    CHECK(std::holds_alternative<SoficPresentation>(even.subshift("even")));
    CHECK(presentations_equal(even.subshift("even"), Presentation(even_shift())));
    CHECK_THROWS_AS(even.sft("even"), Error);
  }

  TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("alphabet b set 0,1\nuniverse N\n") == 2);
    CHECK(parse_spec_text("alphabet b set 0,1\n").universe == Universe::integers());
    CHECK(parse_error_line("universe Z\nalphabet b set 0,1\nsubshift s sft alphabet=b window=0..1 forbid=12\n") == 3);
    CHECK(parse_error_line("universe Z\n\n# note\nalphabet b set 0,1\nalphabet b set 0,1\n") == 5);
    CHECK(parse_error_line("universe Q\n") == 1);
    CHECK(parse_error_line("universe Z\nalphabet b set 0,1\nsubshift f full\nca t domain=f memory=0..1 table=00:0\n") == 4);
    CHECK(parse_error_line("universe Z\nalphabet b set 0,1\nsubshift f full\nca t domain=nope memory=0 table=0:0,1:1\n") == 4);
    CHECK(parse_error_line("universe Z\nalphabet m module m=2 k=1\nsubshift f full\nca t domain=f memory=0 linear c0=1,1\n") == 4);
    CHECK(parse_error_line("universe Z\nfrobnicate\n") == 2);
    CHECK(parse_error_line("universe Z\nalphabet b set 0,1\nsubshift f full\n") == 0);
  }

  TEST_CASE("presentations re-parse to equal objects") {
    std::vector<std::string> files{"golden_mean.spec", "involution.spec", "xor.spec", "identity.spec",
                                   "one_sided_shift.spec", "even_shift.spec"};
    for (const auto& file : files) {
      CAPTURE(file);
      auto f = load_spec(spec(file));
      std::ostringstream text;
      text << format_universe(f.universe) << "\n";
      for (const auto& [name, a] : f.alphabets) text << format_alphabet(name, a) << "\n";
      for (const auto& [name, p] : f.subshifts)
        if (auto s = std::get_if<SftPresentation>(&p)) text << format_sft(name, f.subshift_alphabet.at(name), *s) << "\n";
      for (const auto& [name, ca] : f.automata)
        if (f.subshifts.count(f.ca_domain.at(name)) &&
            std::holds_alternative<SftPresentation>(f.subshifts.at(f.ca_domain.at(name))))
          text << format_ca(name, f.ca_domain.at(name), f.ca_codomain.at(name), ca) << "\n";
      auto g = parse_spec_text(text.str());
      for (const auto& [name, p] : f.subshifts)
        if (auto s = std::get_if<SftPresentation>(&p)) CHECK(g.sft(name) == *s);
      for (const auto& [name, ca] : f.automata) {
        if (!g.automata.count(name)) continue;
        const auto& h = g.automaton(name);
        CHECK(h.memory() == ca.memory());
        CHECK(h.rule().domain == ca.rule().domain);
        CHECK(h.rule().outputs == ca.rule().outputs);
        CHECK(h.rule().coefficients == ca.rule().coefficients);
      }
    }
  }

  TEST_CASE("reports are deterministic") {
    auto a = report::certificate(certify(e3()), e3().domain_alphabet());
    auto b = report::certificate(certify(e3()), e3().domain_alphabet());
    CHECK(a.dump() == b.dump());
    auto t = tau2();
    auto img = report::image(image_sft(t, golden_mean(), certify(t)));
    CHECK(img.dump() == report::image(image_sft(t, golden_mean(), certify(t))).dump());
    CHECK(img.at("exact_equal").get<bool>());
  }

  TEST_CASE("command line exit codes") {
    CHECK(run_cli("check-injective --spec " + spec("golden_mean.spec") + " --ca tau2") == 0);
    CHECK(run_cli("check-injective --spec " + spec("xor.spec") + " --ca xor") == 1);
    CHECK(run_cli("check-injective --spec " + spec("one_sided_shift.spec") + " --ca shift") == 1);
    CHECK(run_cli("synthesize-inverse --spec " + spec("involution.spec") + " --ca e3") == 0);
    CHECK(run_cli("inverse-window --spec " + spec("xor.spec") + " --ca xor") == 1);
    CHECK(run_cli("check-injective --spec " + spec("missing.spec") + " --ca x") == 3);
    CHECK(run_cli("check-injective --spec " + spec("xor.spec") + " --ca nope") == 3);
    CHECK(run_cli("no-such-command") == 3);
    auto far = write_temp("far_shift.spec", "universe Z\nalphabet b set 0,1\nsubshift f full\nca s domain=f memory={3} table=0:0,1:1\n");
    CHECK(run_cli("inverse-window --spec " + far + " --ca s --nmax 2") == 2);
    CHECK(run_cli("inverse-window --spec " + far + " --ca s --nmax 3") == 0);
    auto bad = write_temp("bad.spec", "universe Z\nalphabet b set 0,1\nsubshift g sft window=0..1 forbid=13\n");
    CHECK(run_cli("check-injective --spec " + bad + " --ca g") == 3);
    CHECK(run_cli("run --spec " + spec("golden_mean.spec")) == 0);
    CHECK(run_cli("run --spec " + spec("involution.spec")) == 0);
  }

  TEST_CASE("command line reports") {
    auto r1 = temp_path("r1.json"), r2 = temp_path("r2.json");
    REQUIRE(run_cli("image-sft --spec " + spec("golden_mean.spec") + " --ca tau2 --subshift gm --report " + r1) == 0);
    REQUIRE(run_cli("image-sft --spec " + spec("golden_mean.spec") + " --ca tau2 --subshift gm --report " + r2) == 0);
    auto a = read_json(r1), b = read_json(r2);
    CHECK(a.at("result") == b.at("result"));
    CHECK(a.contains("timing"));
    CHECK(a.at("result").at("status") == "ok");
    const auto& cmd = a.at("result").at("commands").at(0);
    CHECK(cmd.at("result").at("presentation").at("window") == "0..2");
    CHECK(cmd.at("result").at("presentation").at("blocks").size() == 8);

    auto dot = temp_path("graph.dot");
    REQUIRE(run_cli("emit-graph --spec " + spec("golden_mean.spec") + " --subshift gm --emit-graph " + dot) == 0);
    std::ifstream in(dot);
    std::string first;
    std::getline(in, first);
    CHECK(first == "digraph transfer {");
  }
}
