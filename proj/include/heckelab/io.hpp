#ifndef HECKELAB_IO_HPP
#define HECKELAB_IO_HPP

#include <json.hpp>

#include "heckelab/bridge.hpp"
#include "heckelab/module.hpp"

namespace heckelab {

using Json = nlohmann::json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json svec_to_json(const SVec& v);
SVec svec_from_json(const Json& j);

Json matrix_to_json(const ExactMatrix& m);                 // row-major nested arrays
ExactMatrix matrix_from_json(const Json& j);

/// {"type":"A2","lattice":"gl","gamma":"flip|none"}
Json datum_description_to_json(const std::string& type, const std::string& gamma);

/// {"datum":{...},"k":{"all":"2"},"r":"1"}
GradedHeckeAlgebraSpec spec_from_json(const Json& j);
Json spec_to_json(const GradedHeckeAlgebraSpec& spec, const std::string& type,
                  const std::string& gamma, const std::map<std::string, Rat>& k);

/// {"n":3,"sigma":["2","0","-2"],"r":"1","y":[[...]]}
AdditiveParameter additive_from_json(const Json& j);
Json additive_to_json(const AdditiveParameter& p);

/// {"s_exp":[...],"q_exp":"2","N":[[...]]}
Json multiplicative_to_json(const MultiplicativeParameter& m);
MultiplicativeParameter multiplicative_from_json(const Json& j);

/// generator name -> row-major matrix: x1.., Ns1.., Ng1..
Json module_to_json(const FiniteModule& m);

Json weight_datum_to_json(const WeightDatum& w);

}  // namespace heckelab

#endif
