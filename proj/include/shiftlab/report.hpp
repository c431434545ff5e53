#pragma once

#include <json.hpp>

#include "shiftlab/imaging.hpp"

namespace shiftlab::report {

using nlohmann::json;

json presentation(const SftPresentation& s);
json presentation(const SoficPresentation& s);
json presentation(const Presentation& p);
json automaton(const CellularAutomaton& ca);
json injectivity(const InjectivityResult& r, const Alphabet& a);
json transcript(const StabilizationChain& c, const Alphabet& a);
json window_search(const InverseWindowResult& r, const Alphabet& a);
json certificate(const InverseCertificate& c, const Alphabet& a);
json image(const ImageSftResult& r);
json recovery(const RecoverResult& r);

}  // namespace shiftlab::report
