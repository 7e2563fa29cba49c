#include "magicdist/report.hpp"

#include <algorithm>

#include "magicdist/spectral.hpp"

namespace magicdist {

ordered_json graph_digest(const Graph& g) {
  ordered_json j;
  j["graph6"] = to_graph6(g);
  j["order"] = g.order();
  j["size"] = g.edge_count();
  return j;
}

ordered_json report_envelope(const std::string& command, const ordered_json& input,
                             const ordered_json& result) {
  ordered_json j;
  j["command"] = command;
  j["input"] = input;
  j["result"] = result;
  return j;
}

namespace {

ordered_json verify_common(bool modular, int p, const std::vector<long long>& w,
                           const VerifyResult& r) {
  ordered_json j;
  j["magic"] = r.ok();
  j["modular"] = modular;
  if (modular) j["p"] = p;
  if (r.ok()) {
    j["constant"] = r.certificate->k;
    j["degenerate"] = r.certificate->degenerate;
  }
  j["weights"] = w;
  if (!r.ok()) {
    ordered_json fail;
    fail["u"] = r.failure->u;
    fail["v"] = r.failure->v;
    fail["weight_u"] = r.failure->wu;
    fail["weight_v"] = r.failure->wv;
    j["failure"] = fail;
  }
  return j;
}

}  // namespace

ordered_json verify_report(const Graph& g, const Labeling& f, const VerifyResult& r) {
  return verify_common(false, 0, weights(g, f), r);
}

ordered_json verify_report(const Graph& g, const ModularLabeling& f, const VerifyResult& r) {
  return verify_common(true, f.modulus(), weights(g, f), r);
}

ordered_json search_report(const Graph& g, const std::vector<Labeling>& found) {
  ordered_json j;
  j["count"] = found.size();
  ordered_json list = ordered_json::array();
  for (const Labeling& f : found) {
    ordered_json entry;
    entry["values"] = f.values();
    entry["constant"] = verify_distance_magic(g, f).certificate->k;
    list.push_back(entry);
  }
  j["labelings"] = list;
  return j;
}

ordered_json search_report(const Graph& g, int p, const std::vector<ModularLabeling>& found) {
  ordered_json j;
  j["p"] = p;
  j["count"] = found.size();
  ordered_json list = ordered_json::array();
  for (const ModularLabeling& f : found) {
    ordered_json entry;
    entry["values"] = f.values();
    entry["constant"] = verify_p_distance_magic(g, f).certificate->k;
    list.push_back(entry);
  }
  j["labelings"] = list;
  return j;
}

ordered_json count_report(long long count) {
  ordered_json j;
  j["count"] = count;
  return j;
}

ordered_json count_report(int p, long long count) {
  ordered_json j;
  j["p"] = p;
  j["count"] = count;
  return j;
}

ordered_json spectral_report(const Graph& g) {
  ordered_json j;
  IntPoly cp = char_poly(g);
  j["charpoly"] = cp.c;
  j["singular"] = is_singular(g);
  j["integral"] = is_integral(g);
  SpectralDecomposition eig = eig_sym(double_matrix(matrices(g).adjacency));
  j["eigenvalues"] = eig.eigenvalues;
  ordered_json angles = ordered_json::array();
  for (const MainAngle& a : main_angles(g)) {
    ordered_json entry;
    entry["eigenvalue"] = a.eigenvalue;
    entry["beta"] = a.beta;
    angles.push_back(entry);
  }
  j["main_angles"] = angles;
  j["pinv_doubly_stochastic"] = pinv_filter(g).doubly_stochastic;
  return j;
}

ordered_json census_record_json(const CensusRecord& rec) {
  ordered_json j;
  j["graph6"] = rec.graph6;
  j["labeling_count"] = rec.labeling_count;
  j["magic_constant"] = rec.magic_constant;
  j["singular"] = rec.singular;
  if (rec.degenerate) j["degenerate"] = true;
  return j;
}

ordered_json aut_report(const Graph& g, const AutGroup& group, bool include_elements) {
  ordered_json j;
  j["order"] = group.order();
  if (include_elements) {
    ordered_json list = ordered_json::array();
    for (const Permutation& s : group.elements) list.push_back(s.image());
    j["elements"] = list;
  }

  // Vertex orbits under the group, each sorted, listed by smallest member.
  int n = g.order();
  std::vector<bool> seen(n + 1, false);
  ordered_json orbits = ordered_json::array();
  for (int v = 1; v <= n; ++v) {
    if (seen[v]) continue;
    std::vector<int> orbit;
    for (const Permutation& s : group.elements)
      if (!seen[s(v)]) {
        seen[s(v)] = true;
        orbit.push_back(s(v));
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(orbit);
  }
  ordered_json orbit_report;
  orbit_report["vertex_orbits"] = orbits;
  j["orbit_report"] = orbit_report;
  j["canonical"] = canonical_form(g);
  return j;
}

ordered_json crt_report(const CrtResult& r) {
  ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["values"] = r.values;
  j["constant"] = r.constant;
  j["consistent"] = r.consistent;
  return j;
}

ordered_json construct_report(const Graph& g) {
  ordered_json j;
  j["graph6"] = to_graph6(g);
  j["order"] = g.order();
  j["size"] = g.edge_count();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u, v}));
  j["edges"] = edges;
  return j;
}

std::string payload_text(const ordered_json& payload) { return payload.dump(2) + "\n"; }

}  // namespace magicdist
