#pragma once

#include <optional>
#include <string>
#include <vector>

namespace geoecon {

struct TaxonomyEntry {
  std::string id;
  std::string name;
};

// Ordered list of emerging-technology domains. Order is significant: it fixes
// column order in every matrix and breaks probability ties in classification.
class Taxonomy {
 public:
  Taxonomy() = default;
  explicit Taxonomy(std::vector<TaxonomyEntry> entries);

  // The 18 built-in domains, ids D01..D18.
  static Taxonomy builtin();

  // Parse from a JSON array of {"id":..., "name":...}.
  static Taxonomy from_json_text(const std::string& text);
  static Taxonomy from_file(const std::string& path);

  const std::vector<TaxonomyEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const std::string& id) const;
  // Position of a domain id in taxonomy order, or nullopt.
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::vector<std::string> ids() const;

 private:
  std::vector<TaxonomyEntry> entries_;
};

}  // namespace geoecon
