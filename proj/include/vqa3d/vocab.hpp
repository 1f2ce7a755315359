#pragma once

#include <string>
#include <vector>

namespace vqa3d {

// Closed vocabularies for the scene domain. Orderings here are normative:
// every probability row and serialized matrix indexes into these lists.
namespace vocab {

const std::vector<std::string>& categories();      // 5 vehicle categories
const std::vector<std::string>& subtypes();        // 21 fine-grained shapes
const std::vector<std::string>& colors();          // 8 color names
const std::vector<std::string>& materials();       // rubber, metal
const std::vector<std::string>& sizes();           // small, large
const std::vector<std::string>& directions();      // front, left, back, right
const std::vector<std::string>& part_names();      // union over all subtypes, sorted

int category_index(const std::string& name);       // -1 if unknown
int subtype_index(const std::string& name);
int color_index(const std::string& name);
int material_index(const std::string& name);
int size_index(const std::string& name);
int part_index(const std::string& name);

int category_of_subtype(int subtype_idx);
const std::vector<int>& subtypes_of_category(int category_idx);

// Part list for one subtype, in its canonical (table) order.
const std::vector<std::string>& parts_of_subtype(int subtype_idx);

bool is_category(const std::string& name);
bool is_subtype(const std::string& name);

}  // namespace vocab
}  // namespace vqa3d
