#include "geoecon/taxonomy.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "geoecon/types.hpp"
#include "json.hpp"

namespace geoecon {

Taxonomy::Taxonomy(std::vector<TaxonomyEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("taxonomy must not be empty");
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.id.empty()) throw InputError("taxonomy entry with empty id");
    if (!seen.insert(e.id).second) throw InputError("duplicate taxonomy id '" + e.id + "'");
  }
}

Taxonomy Taxonomy::builtin() {
  return Taxonomy({
      {"D01", "Artificial Intelligence (AI)"},
      {"D02", "Nanotechnology & Semiconductors"},
      {"D03", "Cybersecurity Tools"},
      {"D04", "Space Technologies"},
      {"D05", "Cloud Computing"},
      {"D06", "Telecommunications"},
      {"D07", "Quantum Computing"},
      {"D08", "Energy & Energy Storage"},
      {"D09", "Autonomous Systems"},
      {"D10", "Biotechnology"},
      {"D11", "Defense Technologies"},
      {"D12", "Blockchain & Digital Currencies"},
      {"D13", "Additive Manufacturing (3D Printing) & Industry 4.0"},
      {"D14", "Mobility & Transportation"},
      {"D15", "Raw Materials & Recycling"},
      {"D16", "Agritech & Foodtech"},
      {"D17", "Medtech"},
      {"D18", "Edtech"},
  });
}

Taxonomy Taxonomy::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("taxonomy JSON parse error: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("taxonomy JSON must be an array");
  std::vector<TaxonomyEntry> entries;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("id") || !item.contains("name"))
      throw InputError("taxonomy entries must be objects with \"id\" and \"name\"");
    entries.push_back({item["id"].get<std::string>(), item["name"].get<std::string>()});
  }
  return Taxonomy(std::move(entries));
}

Taxonomy Taxonomy::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open taxonomy file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

bool Taxonomy::contains(const std::string& id) const { return index_of(id).has_value(); }

std::optional<std::size_t> Taxonomy::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].id == id) return i;
  return std::nullopt;
}

std::vector<std::string> Taxonomy::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

}  // namespace geoecon
