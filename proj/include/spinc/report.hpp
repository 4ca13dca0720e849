#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spinc/clifford.hpp"
#include "spinc/invariants.hpp"
#include "spinc/selfcheck.hpp"

namespace spinc {

enum class OutputFormat { Pretty, Json, Csv };

/// RFC 4180 field quoting: fields containing a comma, quote or line break are
/// wrapped in double quotes with embedded quotes doubled.
std::string csv_field(std::string_view s);

void write_rep(std::ostream& out, const CliffordRep& rep, OutputFormat fmt);
void write_invariants(std::ostream& out, const InvariantSpaceResult& res, OutputFormat fmt);
void write_table1(std::ostream& out, int bound, const std::vector<Table1Row>& rows, OutputFormat fmt);
void write_selfcheck(std::ostream& out, const std::vector<SuiteResult>& suites, OutputFormat fmt);

}  // namespace spinc
