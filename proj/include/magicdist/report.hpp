#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "magicdist/automorphism.hpp"
#include "magicdist/graph.hpp"
#include "magicdist/labeling.hpp"
#include "magicdist/search.hpp"

// JSON payload builders shared by the command line tool and the golden
// tests; both sides must produce identical bytes.
namespace magicdist {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_digest(const Graph& g);

// {command, input, result}
ordered_json report_envelope(const std::string& command, const ordered_json& input,
                             const ordered_json& result);

ordered_json verify_report(const Graph& g, const Labeling& f, const VerifyResult& r);
ordered_json verify_report(const Graph& g, const ModularLabeling& f, const VerifyResult& r);

ordered_json search_report(const Graph& g, const std::vector<Labeling>& found);
ordered_json search_report(const Graph& g, int p, const std::vector<ModularLabeling>& found);
ordered_json count_report(long long count);
ordered_json count_report(int p, long long count);

ordered_json spectral_report(const Graph& g);

ordered_json census_record_json(const CensusRecord& rec);

ordered_json aut_report(const Graph& g, const AutGroup& group, bool include_elements);

ordered_json crt_report(const CrtResult& r);

ordered_json construct_report(const Graph& g);

// Two-space indent plus trailing newline; the byte format golden tests pin.
std::string payload_text(const ordered_json& payload);

}  // namespace magicdist
