#pragma once

#include <string>
#include <vector>

#include "actlab/predicates.hpp"

namespace actlab {

/// The property names accepted by the check command.
const std::vector<std::string>& property_names();

/// Shared property dispatch: the CLI and the suite's counterexample
/// payloads both go through here, so a replayed check reproduces its
/// verdict bit for bit. `subacts` carries the positional arguments
/// (one for superfluous/coessential, two for supplement, none otherwise).
/// Throws ParseError on unknown names or arity mismatch, NotProper where
/// the property demands proper subacts.
PropertyVerdict check_property(const ActPtr& act, const std::string& property,
                               const std::vector<Subact>& subacts,
                               Reading reading);

}  // namespace actlab
