#ifndef TWISTFLOER_SERIALIZE_HPP
#define TWISTFLOER_SERIALIZE_HPP

#include <json.hpp>

#include "twistfloer/floer.hpp"
#include "twistfloer/moduli.hpp"
#include "twistfloer/nocross.hpp"
#include "twistfloer/structmaps.hpp"

namespace twistfloer {

// Field order is fixed (insertion order) so identical inputs give
// byte-identical files. Schema version 1 throughout.
using json = nlohmann::ordered_json;

json to_json(const BasisLabel& label);
json to_json(const GradedF2Space& space);
json to_json(const F2Matrix& matrix);  // dense rows of 0/1
json to_json(const F2LinearMap& map);
json to_json(const ComplementSurface& cs);
json to_json(const FloerSpace& fs);
json to_json(const StructureMapReport& report);
json to_json(const H1ClassXD& c);
json to_json(const CrossingConfig& config);
json to_json(const CrossingReport& report);

std::string csv_trajectory(const Trajectory& t);  // "s,x" rows, fixed precision

}  // namespace twistfloer

#endif
