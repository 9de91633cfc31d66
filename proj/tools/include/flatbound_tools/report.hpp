#pragma once

// Machine-readable reports. Key order is fixed and every list is produced in a
// deterministic order, so identical inputs give byte-identical output.

#include <string>
#include <vector>

#include "flatbound/boundary.hpp"
#include "flatbound/invariants.hpp"
#include "flatbound_tools/document.hpp"

namespace flatbound::tools {

Json fingerprint_json(const Fingerprint& f);
Json abelian_json(const AbelianGroup& a);

// Validity, torsion, invariants, fingerprint and catalog identification.
Json check_report(const SpaceGroup& sg);
Json admissibility_json(const SpaceGroup& sg, const AdmissibilityReport& report);
Json pairs_json(const std::vector<SoulPair>& pairs, std::size_t dim);
// Result of a band or cover construction.
Json construction_json(const SpaceGroup& result);

std::string names_or_dash(const std::vector<std::string>& names);

}  // namespace flatbound::tools
