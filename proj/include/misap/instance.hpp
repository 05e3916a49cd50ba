#pragma once

// Serializable matroid descriptions and the on-disk instance format:
// JSON with explicit family tags, element ids implicit by position.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "misap/matroid.hpp"
#include "misap/online.hpp"

namespace misap {

class MatroidDescription {
public:
  MatroidDescription() = default;  // null until assigned

  static MatroidDescription uniform(std::size_t n, int k);
  static MatroidDescription partition(std::size_t n,
                                      const std::vector<std::vector<ElementId>>& blocks,
                                      const std::vector<int>& capacities);
  static MatroidDescription laminar(std::size_t n, const std::vector<LaminarSet>& sets);
  static MatroidDescription graphic(std::size_t num_vertices,
                                    const std::vector<std::pair<int, int>>& edges);
  static MatroidDescription transversal(std::size_t n, std::size_t num_right,
                                        const std::vector<std::vector<int>>& adj);
  static MatroidDescription gammoid(std::size_t num_vertices,
                                    const std::vector<std::pair<int, int>>& arcs,
                                    const std::vector<int>& sources,
                                    const std::vector<int>& ground_vertices);
  static MatroidDescription direct_sum(const std::vector<MatroidDescription>& components);
  // Both minors reindex: new element i is the i-th surviving original id,
  // in increasing order, so serialized ground sets stay dense.
  static MatroidDescription restriction(const MatroidDescription& base,
                                        const std::vector<ElementId>& keep);
  static MatroidDescription contraction(const MatroidDescription& base,
                                        const std::vector<ElementId>& out);

  static MatroidDescription from_json(const nlohmann::json& j);
  const nlohmann::json& to_json() const { return j_; }

  std::string family() const;
  std::size_t ground_size() const;

  // Validates structural invariants and constructs the oracle.
  MatroidPtr build() const;

private:
  explicit MatroidDescription(nlohmann::json j) : j_(std::move(j)) {}
  nlohmann::json j_;
};

struct InstanceFile {
  int version = 1;
  MatroidDescription matroid;
  std::vector<std::vector<ElementId>> parts;
  nlohmann::json metadata;  // generator provenance: name, seed, params, planted set

  nlohmann::json to_json() const;
  static InstanceFile from_json(const nlohmann::json& j);

  std::string serialize() const;
  static InstanceFile parse(const std::string& text);

  void save(const std::string& path) const;
  static InstanceFile load(const std::string& path);

  PartitionInstance build() const;
};

}  // namespace misap
