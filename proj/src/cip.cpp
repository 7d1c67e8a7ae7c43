#include "netint/cip.hpp"

namespace netint {

std::string to_string(CipMode mode) {
  switch (mode) {
    case CipMode::Adaptive: return "adaptive";
    case CipMode::PotentialIter: return "potential_iter";
    case CipMode::PotentialOneShot: return "potential_oneshot";
  }
  return "adaptive";
}

CipMode cip_mode_from_string(const std::string& name) {
  if (name == "adaptive") return CipMode::Adaptive;
  if (name == "potential_iter" || name == "potential") return CipMode::PotentialIter;
  if (name == "potential_oneshot") return CipMode::PotentialOneShot;
  throw Error(Errc::ParseError, "unknown mode '" + name + "'");
}

}  // namespace netint
