#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "anick/polynomial.hpp"
#include "anick/ring.hpp"

namespace anick {

// An algebra K<X | R> (or K[X]/(R)). The augmentation sends every generator to 0.
struct Presentation {
  std::string name;
  RingPtr ring;
  std::vector<NcPoly> nc_relations;      // noncommutative kind
  std::vector<CommPoly> comm_relations;  // commutative kind

  AlgebraKind kind() const { return ring->kind(); }
  std::size_t generator_count() const { return ring->size(); }
  std::size_t relation_count() const {
    return kind() == AlgebraKind::noncommutative ? nc_relations.size() : comm_relations.size();
  }
  int max_relation_degree() const;
  bool is_homogeneous() const;
  // throws InputError naming the first inhomogeneous relation
  void require_homogeneous() const;
  std::vector<std::string> relation_strings() const;

  bool operator==(const Presentation& o) const;
};

Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

// A single polynomial over an existing ring, e.g. for normal-form queries.
NcPoly parse_nc_polynomial(const RingPtr& ring, std::string_view text);
CommPoly parse_comm_polynomial(const RingPtr& ring, std::string_view text);

Presentation make_Bn(int n);
Presentation free_product(const Presentation& p, const Presentation& q);

}  // namespace anick
