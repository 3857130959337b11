#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "negfont/classify.hpp"
#include "negfont/invariants.hpp"
#include "negfont/state.hpp"

namespace negfont {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// State file:
///
///     # comment
///     n 4
///     0000 0.5 0
///     1111 0.5 0
///
/// Omitted indices are zero. Throws ParseError with the offending line number.
PureState parse_state(std::istream& in);
PureState read_state_file(const std::string& path);
void write_state(std::ostream& out, const PureState& s);
void write_state_file(const std::string& path, const PureState& s);

/// {"re", "im", "abs"}
nlohmann::ordered_json complex_json(cplx v);

nlohmann::ordered_json to_json(const ThreeQubitReport& r);
nlohmann::ordered_json to_json(const FourQubitReport& r);
nlohmann::ordered_json to_json(const ClassReport& r);

/// %.17g
std::string format_real(double v);

}  // namespace negfont
