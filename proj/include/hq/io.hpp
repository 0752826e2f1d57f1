// JSON encoding of field elements, matrices, modules, Huang data and reports.
#pragma once

#include "hq/daha.hpp"

#include <json.hpp>

namespace hq {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"rat": "p/q", "irr": "p/q", "disc": D}; also accepts "p/q" strings and integers.
json to_json(const FieldElement& x);
FieldElement field_from_json(const json& j);

json to_json(const ExactMatrix& m);  // list of rows
ExactMatrix matrix_from_json(const json& j);

json to_json(const Seq& s);

json to_json(const HuangData& h);
HuangData huang_from_json(const json& j);

struct ModuleDescriptor {
    XType xtype;
    int n = 0;
    FieldElement q;
    KParams k;
};

ModuleDescriptor descriptor_from_json(const json& j);
json to_json(const ModuleDescriptor& d);

// descriptor plus generator matrices
json module_to_json(const HqModule& m);

json to_json(const Report& r);

}  // namespace hq
