#include "shiftlab/report.hpp"

namespace shiftlab::report {

namespace {

json blocks(const Alphabet& a, const BlockSet& s) {
  json out = json::array();
  for (const auto& b : s.blocks()) out.push_back(b.empty() ? "()" : format_block(a, b));
  return out;
}

json pairs(const Alphabet& a, const std::vector<std::pair<int, int>>& ps) {
  json out = json::array();
  for (auto [x, y] : ps) out.push_back(json::array({a.name(x), a.name(y)}));
  return out;
}

json table(const LocalRule& r, const Alphabet& in, const Alphabet& out) {
  json t = json::array();
  for (std::size_t i = 0; i < r.domain.size(); ++i) {
    const auto& b = r.domain.blocks()[i];
    t.push_back(json::array({b.empty() ? "()" : format_block(in, b), out.name(r.outputs[i])}));
  }
  return t;
}

}  // namespace

json presentation(const SftPresentation& s) {
  json j;
  j["kind"] = "sft";
  j["universe"] = s.universe().name();
  j["alphabet"] = s.alphabet.describe();
  j["window"] = s.window().format();
  j["blocks"] = blocks(s.alphabet, s.allowed);
  j["block_count"] = s.allowed.size();
  if (s.linear) j["generators"] = s.linear->format();
  return j;
}

json presentation(const SoficPresentation& s) {
  json j;
  j["kind"] = "sofic";
  j["source"] = presentation(s.source);
  j["code"] = automaton(s.code);
  return j;
}

json presentation(const Presentation& p) {
  return std::visit([](const auto& x) { return presentation(x); }, p);
}

json automaton(const CellularAutomaton& ca) {
  json j;
  j["memory"] = ca.memory().format();
  j["domain_alphabet"] = ca.domain_alphabet().describe();
  j["codomain"] = ca.codomain().describe();
  j["linear"] = ca.is_linear();
  if (ca.rule().coefficients) {
    json c = json::object();
    const auto& m = ca.memory().elements();
    for (std::size_t i = 0; i < m.size(); ++i)
      c[ca.universe().format(m[i])] = modlin::format_matrix((*ca.rule().coefficients)[i]);
    j["coefficients"] = c;
  }
  j["table"] = table(ca.rule(), ca.domain_alphabet(), ca.codomain());
  return j;
}

json injectivity(const InjectivityResult& r, const Alphabet& a) {
  json j;
  j["injective"] = r.injective;
  j["track"] = r.linear_track ? "linear" : "set";
  j["message"] = r.message;
  if (r.linear_track) {
    j["kernel_at_identity"] = r.kernel_at_identity->format();
  } else {
    j["pairs_at_identity"] = pairs(a, r.pairs_at_identity);
  }
  return j;
}

json transcript(const StabilizationChain& c, const Alphabet& a) {
  json j;
  j["track"] = c.linear_track ? "linear" : "set";
  j["first_success"] = c.first_success ? json(*c.first_success) : json(nullptr);
  json entries = json::array();
  for (const auto& e : c.entries) {
    json x;
    x["n"] = e.n;
    x["window"] = e.window.format();
    x["holds"] = e.condition.holds;
    if (e.condition.linear_at_identity) {
      x["at_identity"] = e.condition.linear_at_identity->format();
    } else {
      x["at_identity"] = pairs(a, e.condition.pairs_at_identity);
    }
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

json window_search(const InverseWindowResult& r, const Alphabet& a) {
  json j;
  const bool found = r.status == InverseWindowResult::Status::Found;
  j["status"] = found ? "found" : "inconclusive";
  j["nmax"] = r.nmax;
  if (found) {
    j["window"] = r.window.format();
    j["unminimized"] = r.unminimized.format();
  }
  j["transcript"] = transcript(r.transcript, a);
  return j;
}

json certificate(const InverseCertificate& c, const Alphabet& a) {
  json j;
  j["injective"] = c.injective;
  j["track"] = c.linear_track ? "linear" : "set";
  j["inverse_window"] = c.inverse_window.format();
  j["merged_window"] = c.merged.format();
  j["eta"] = table(c.eta, c.sigma.domain_alphabet(), a);
  if (c.eta_linear) j["eta_matrix"] = modlin::format_matrix(c.eta_linear->matrix());
  j["sigma"] = automaton(c.sigma);
  j["lambda"] = presentation(c.lambda);
  j["checks"] = {{"block_width", c.block_width_checked},
                 {"blocks", c.blocks_checked},
                 {"max_period", c.max_period_checked},
                 {"periodic_points", c.periodic_checked}};
  j["transcript"] = transcript(c.transcript, a);
  return j;
}

json image(const ImageSftResult& r) {
  json j;
  j["presentation"] = presentation(r.presentation);
  j["merged_window"] = r.merged.format();
  j["exact_equal"] = r.exact_equal;
  j["depth_equal"] = r.depth_equal;
  j["depth"] = r.depth;
  return j;
}

json recovery(const RecoverResult& r) {
  json j;
  j["presentation"] = presentation(r.presentation);
  j["image_window"] = r.image_window.format();
  j["merged_window"] = r.merged.format();
  j["exact_equal"] = r.exact_equal;
  j["depth_equal"] = r.depth_equal;
  j["depth"] = r.depth;
  return j;
}

}  // namespace shiftlab::report
