#include "propagation_oracle.hpp"

#include <json.hpp>

namespace hepmeme::oracle {
namespace {

bool gendered(Gender g) { return g == Gender::Female || g == Gender::Male; }

bool in_universe(const Instance& inst, std::size_t p, CitedFilter filter) {
  if (filter == CitedFilter::All) return true;
  return gendered(inst.gender[p]);
}

bool edge_counts(const Instance& inst, std::uint32_t from, std::uint32_t to, CitedFilter filter) {
  if (filter == CitedFilter::All) return true;
  if (!gendered(inst.gender[from])) return false;
  if (filter == CitedFilter::GenderedBoth) return gendered(inst.gender[to]);
  if (filter == CitedFilter::CitedFemale) return inst.gender[to] == Gender::Female;
  return inst.gender[to] == Gender::Male;
}

}  // namespace

PropagationCounts brute_force_counts(const Instance& inst, CitedFilter filter, UniverseMode mode) {
  PropagationCounts c;
  for (std::size_t p = 0; p < inst.n_papers; ++p) {
    if (!in_universe(inst, p, filter)) continue;
    bool any_edge = false;
    bool cites_carrier = false;
    for (const auto& [from, to] : inst.edges) {
      if (from != p || !edge_counts(inst, from, to, filter)) continue;
      any_edge = true;
      if (inst.carrier[to]) cites_carrier = true;
    }
    if (mode == UniverseMode::CitingOnly && !any_edge) continue;
    if (cites_carrier) {
      ++c.d_to_m;
      if (inst.carrier[p]) ++c.d_mm;
    } else {
      ++c.d_not_m;
      if (inst.carrier[p]) ++c.d_mn;
    }
  }
  return c;
}

Instance random_instance(std::mt19937_64& rng, std::size_t max_papers, std::size_t max_edges) {
  Instance inst;
  inst.n_papers = std::uniform_int_distribution<std::size_t>(1, max_papers)(rng);
  const std::size_t n_edges =
      inst.n_papers < 2 ? 0 : std::uniform_int_distribution<std::size_t>(0, max_edges)(rng);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(inst.n_papers - 1));
  while (inst.edges.size() < n_edges) {
    const auto a = pick(rng), b = pick(rng);
    if (a != b) inst.edges.emplace_back(a, b);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double carrier_rate = unit(rng);
  const double female_rate = unit(rng) * 0.5;
  const double unknown_rate = unit(rng) * 0.6;
  for (std::size_t p = 0; p < inst.n_papers; ++p) {
    inst.carrier.push_back(unit(rng) < carrier_rate);
    const double u = unit(rng);
    inst.gender.push_back(u < unknown_rate                   ? Gender::Unknown
                          : u < unknown_rate + female_rate * (1 - unknown_rate) ? Gender::Female
                                                                               : Gender::Male);
  }
  return inst;
}

Corpus to_corpus(const Instance& inst) {
  std::vector<PaperRecord> records;
  for (std::size_t p = 0; p < inst.n_papers; ++p) {
    PaperRecord r;
    r.id = PaperId(static_cast<std::uint32_t>(p + 1));
    r.abstract = inst.carrier[p] ? "some text with a meme in it" : "some text without it";
    records.push_back(std::move(r));
  }
  std::vector<CitationEdge> edges;
  for (auto [a, b] : inst.edges)
    edges.push_back({PaperId(a + 1), PaperId(b + 1)});
  return build_corpus(std::move(records), edges);
}

Instance duplicated(const Instance& inst) {
  Instance out = inst;
  const auto shift = static_cast<std::uint32_t>(inst.n_papers);
  out.n_papers = inst.n_papers * 2;
  for (auto [a, b] : inst.edges) out.edges.emplace_back(a + shift, b + shift);
  out.carrier.insert(out.carrier.end(), inst.carrier.begin(), inst.carrier.end());
  out.gender.insert(out.gender.end(), inst.gender.begin(), inst.gender.end());
  return out;
}

std::string to_json(const Instance& inst) {
  nlohmann::ordered_json j;
  j["n_papers"] = inst.n_papers;
  j["edges"] = inst.edges;
  std::vector<int> carriers;
  for (bool c : inst.carrier) carriers.push_back(c ? 1 : 0);
  j["carrier"] = carriers;
  std::vector<std::string> genders;
  for (Gender g : inst.gender) genders.emplace_back(to_string(g));
  j["gender"] = genders;
  return j.dump();
}

}  // namespace hepmeme::oracle
