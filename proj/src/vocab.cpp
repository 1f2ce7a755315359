#include "vqa3d/vocab.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vqa3d {
namespace vocab {

namespace {

const std::vector<std::string> kCategories = {"car", "plane", "bicycle", "motorbike", "bus"};

struct SubtypeDef {
  std::string name;
  std::string category;
  std::vector<std::string> parts;
};

// Fine-grained shape inventory with per-shape part lists.
const std::vector<SubtypeDef>& subtype_defs() {
  static const std::vector<SubtypeDef> defs = {
      {"airliner", "plane",
       {"left door", "front wheel", "fin", "right engine", "propeller", "back left wheel",
        "left engine", "back right wheel", "left tailplane", "right door", "right tailplane",
        "right wing", "left wing"}},
      {"biplane", "plane",
       {"front wheel", "fin", "propeller", "left tailplane", "right tailplane", "right wing",
        "left wing"}},
      {"jet", "plane",
       {"left door", "front wheel", "fin", "right engine", "propeller", "back left wheel",
        "left engine", "back right wheel", "left tailplane", "right tailplane", "right wing",
        "left wing"}},
      {"fighter", "plane",
       {"fin", "right engine", "left engine", "left tailplane", "right tailplane", "right wing",
        "left wing"}},
      {"utility bike", "bicycle",
       {"left handle", "brake system", "front wheel", "left pedal", "right handle", "back wheel",
        "saddle", "carrier", "fork", "right crank arm", "front fender", "drive chain",
        "back fender", "left crank arm", "side stand", "right pedal"}},
      {"tandem bike", "bicycle",
       {"rearlight", "front wheel", "back wheel", "fork", "front fender", "back fender"}},
      {"road bike", "bicycle",
       {"left handle", "brake system", "front wheel", "left pedal", "right handle", "back wheel",
        "saddle", "fork", "right crank arm", "drive chain", "left crank arm", "right pedal"}},
      {"mountain bike", "bicycle",
       {"left handle", "brake system", "front wheel", "left pedal", "right handle", "back wheel",
        "saddle", "fork", "right crank arm", "drive chain", "left crank arm", "right pedal"}},
      {"articulated bus", "bus",
       {"left tail light", "front license plate", "front right door", "back bumper",
        "right head light", "front left wheel", "left mirror", "right tail light",
        "back right door", "back left wheel", "back right wheel", "back license plate",
        "front right wheel", "left head light", "right mirror", "trunk", "mid right door",
        "roof"}},
      {"double bus", "bus",
       {"left tail light", "front license plate", "front right door", "front bumper",
        "back bumper", "right head light", "front left wheel", "left mirror", "right tail light",
        "back left wheel", "back right wheel", "back license plate", "mid left door",
        "front left door", "front right wheel", "left head light", "right mirror", "trunk",
        "mid right door", "roof"}},
      {"regular bus", "bus",
       {"left tail light", "front license plate", "front right door", "front bumper",
        "back bumper", "right head light", "front left wheel", "left mirror", "right tail light",
        "back right door", "back left wheel", "back right wheel", "back license plate",
        "front right wheel", "left head light", "right mirror", "trunk", "mid right door",
        "roof"}},
      {"school bus", "bus",
       {"left tail light", "front license plate", "front right door", "front bumper",
        "back bumper", "right head light", "front left wheel", "left mirror", "right tail light",
        "back left wheel", "back right wheel", "back license plate", "mid left door",
        "front right wheel", "left head light", "right mirror", "roof"}},
      {"truck", "car",
       {"front left door", "left tail light", "left head light", "back right wheel",
        "right head light", "front bumper", "right mirror", "front license plate",
        "front right wheel", "back bumper", "left mirror", "back left wheel", "right tail light",
        "hood", "trunk", "front left wheel", "roof", "front right door"}},
      {"suv", "car",
       {"front left door", "left tail light", "left head light", "back left door",
        "back right wheel", "right head light", "front bumper", "right mirror",
        "front right wheel", "back bumper", "left mirror", "back left wheel", "right tail light",
        "hood", "trunk", "front left wheel", "back right door", "roof", "front right door"}},
      {"minivan", "car",
       {"front left door", "left tail light", "left head light", "back left door",
        "back right wheel", "right head light", "front bumper", "right mirror",
        "front license plate", "front right wheel", "back bumper", "left mirror",
        "back left wheel", "right tail light", "hood", "trunk", "front left wheel",
        "back right door", "roof", "front right door", "back license plate"}},
      {"sedan", "car",
       {"front left door", "left tail light", "left head light", "back left door",
        "back right wheel", "right head light", "front bumper", "right mirror",
        "front license plate", "front right wheel", "back bumper", "left mirror",
        "back left wheel", "right tail light", "hood", "trunk", "front left wheel",
        "back right door", "roof", "front right door", "back license plate"}},
      {"wagon", "car",
       {"front left door", "left tail light", "left head light", "back left door",
        "back right wheel", "right head light", "front bumper", "right mirror",
        "front license plate", "front right wheel", "back bumper", "left mirror",
        "back left wheel", "right tail light", "hood", "trunk", "front left wheel",
        "back right door", "roof", "front right door", "back license plate"}},
      {"chopper", "motorbike",
       {"left handle", "center headlight", "front wheel", "right handle", "back wheel",
        "center taillight", "left mirror", "gas tank", "front fender", "fork", "drive chain",
        "left footrest", "right mirror", "windscreen", "engine", "back fender", "right exhaust",
        "seat", "panel", "right footrest"}},
      {"scooter", "motorbike",
       {"left handle", "center headlight", "front wheel", "right handle", "back cover",
        "back wheel", "center taillight", "left mirror", "front cover", "fork", "drive chain",
        "right mirror", "engine", "left exhaust", "back fender", "seat", "panel"}},
      {"cruiser", "motorbike",
       {"left handle", "center headlight", "right headlight", "right taillight", "front wheel",
        "right handle", "back cover", "back wheel", "left taillight", "left mirror",
        "left headlight", "gas tank", "front cover", "front fender", "fork", "drive chain",
        "left footrest", "license plate", "right mirror", "windscreen", "left exhaust",
        "back fender", "right exhaust", "seat", "panel", "right footrest"}},
      {"dirtbike", "motorbike",
       {"left handle", "front wheel", "right handle", "back cover", "back wheel", "gas tank",
        "front cover", "front fender", "fork", "drive chain", "left footrest", "engine",
        "right exhaust", "seat", "panel", "right footrest"}},
  };
  return defs;
}

std::vector<std::string> build_subtype_names() {
  std::vector<std::string> names;
  for (const auto& d : subtype_defs()) names.push_back(d.name);
  return names;
}

std::vector<std::string> build_part_union() {
  std::set<std::string> all;
  for (const auto& d : subtype_defs())
    for (const auto& p : d.parts) all.insert(p);
  return {all.begin(), all.end()};
}

int index_of(const std::vector<std::string>& v, const std::string& name) {
  auto it = std::find(v.begin(), v.end(), name);
  return it == v.end() ? -1 : int(it - v.begin());
}

}  // namespace

const std::vector<std::string>& categories() { return kCategories; }

const std::vector<std::string>& subtypes() {
  static const std::vector<std::string> v = build_subtype_names();
  return v;
}

const std::vector<std::string>& colors() {
  static const std::vector<std::string> v = {"gray",  "red",    "blue", "green",
                                             "brown", "purple", "cyan", "yellow"};
  return v;
}

const std::vector<std::string>& materials() {
  static const std::vector<std::string> v = {"rubber", "metal"};
  return v;
}

const std::vector<std::string>& sizes() {
  static const std::vector<std::string> v = {"small", "large"};
  return v;
}

const std::vector<std::string>& directions() {
  static const std::vector<std::string> v = {"front", "left", "back", "right"};
  return v;
}

const std::vector<std::string>& part_names() {
  static const std::vector<std::string> v = build_part_union();
  return v;
}

int category_index(const std::string& name) { return index_of(kCategories, name); }
int subtype_index(const std::string& name) { return index_of(subtypes(), name); }
int color_index(const std::string& name) { return index_of(colors(), name); }
int material_index(const std::string& name) { return index_of(materials(), name); }
int size_index(const std::string& name) { return index_of(sizes(), name); }
int part_index(const std::string& name) { return index_of(part_names(), name); }

int category_of_subtype(int subtype_idx) {
  const auto& defs = subtype_defs();
  if (subtype_idx < 0 || subtype_idx >= int(defs.size()))
    throw std::out_of_range("subtype index out of range");
  return category_index(defs[subtype_idx].category);
}

const std::vector<int>& subtypes_of_category(int category_idx) {
  static const std::vector<std::vector<int>> table = [] {
    std::vector<std::vector<int>> t(kCategories.size());
    const auto& defs = subtype_defs();
    for (int i = 0; i < int(defs.size()); ++i)
      t[category_index(defs[i].category)].push_back(i);
    return t;
  }();
  return table.at(category_idx);
}

const std::vector<std::string>& parts_of_subtype(int subtype_idx) {
  const auto& defs = subtype_defs();
  if (subtype_idx < 0 || subtype_idx >= int(defs.size()))
    throw std::out_of_range("subtype index out of range");
  return defs[subtype_idx].parts;
}

bool is_category(const std::string& name) { return category_index(name) >= 0; }
bool is_subtype(const std::string& name) { return subtype_index(name) >= 0; }

}  // namespace vocab
}  // namespace vqa3d
