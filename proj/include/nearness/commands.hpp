#pragma once

#include <string>

#include "nearness/descriptive.hpp"
#include "nearness/document.hpp"
#include "nearness/report_document.hpp"
#include "nearness/search.hpp"
#include "nearness/structures.hpp"

namespace nearness::io {

ReportDocument cmd_approx(const StructureDocument& doc, const std::string& set_name);
ReportDocument cmd_verify_ring(const StructureDocument& doc, const std::string& carrier);
ReportDocument cmd_verify_subring(const StructureDocument& doc, const std::string& carrier,
                                  const std::string& sub);
ReportDocument cmd_verify_ideal(const StructureDocument& doc, const std::string& carrier,
                                const std::string& sub, structures::Side side);
ReportDocument cmd_cosets(const StructureDocument& doc, const std::string& carrier,
                          const std::string& sub, bool extended);
ReportDocument cmd_quotient(const StructureDocument& doc, const std::string& carrier,
                            const std::string& sub, bool powerset = false,
                            std::size_t powerset_bound = descriptive::kDefaultPowersetBound);
ReportDocument cmd_verify_hom(const StructureDocument& from, const StructureDocument& to,
                              const std::string& map_name, const std::string& carrier,
                              const std::string& to_carrier, bool strict = false);
ReportDocument cmd_iso_check(const StructureDocument& from, const StructureDocument& to,
                             const std::string& map_name, const std::string& carrier,
                             const std::string& to_carrier);
ReportDocument cmd_search(const SearchOptions& opts);

}  // namespace nearness::io
