#pragma once

#include <hcblock/coloring.hpp>
#include <hcblock/detour.hpp>
#include <hcblock/families.hpp>
#include <hcblock/oracle.hpp>

#include <string>

namespace hcblock {

// JSON renderings are byte-deterministic: keys are emitted sorted and values
// derive only from the inputs.

std::string certificate_to_json(const ColoringCertificate& cert, int indent = 2);
std::string certificate_to_text(const ColoringCertificate& cert);

std::string analysis_to_json(const DetourProfile& p, int indent = 2);
std::string analysis_to_text(const DetourProfile& p);

std::string detour_search_to_json(const DetourSearchResult& r, int u, int v, int indent = 2);
std::string hc_search_to_json(const HcSearchResult& r, int indent = 2);

std::string family_sidecar_to_json(const FamilySpec& spec, int n, long long formula_hc,
                                   bool caveat, int indent = 2);
FamilySpec family_spec_from_json(const std::string& text);

// Accepts either a bare array or an object with a "colors" / "ordering" key
// (so certificates round-trip as inputs).
std::vector<long long> colors_from_json(const std::string& text, int n_expected);
Ordering ordering_from_json(const std::string& text);

} // namespace hcblock
