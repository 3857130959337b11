#pragma once

#include <map>
#include <string>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

using ParamMap = std::map<std::string, cplx>;

struct CatalogInfo {
    std::string name;
    int n_qubits;
    std::vector<std::string> params;
    std::string description;
};

/// Every named state and parametric family with explicitly known amplitudes.
const std::vector<CatalogInfo>& catalog_entries();

/// Raw coefficients, unnormalised wherever the defining expression leaves them so.
/// Throws UnknownState or MissingParameter.
PureState catalog_state(const std::string& name, const ParamMap& params = {});

}  // namespace negfont
