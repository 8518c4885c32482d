#ifndef FOURALG_IO_HPP
#define FOURALG_IO_HPP

#include <string>

#include <json.hpp>

#include "fouralg/classify.hpp"
#include "fouralg/cohomology.hpp"
#include "fouralg/morphgal.hpp"

namespace fouralg::io {

using json = nlohmann::ordered_json;

// Scalars are serialized as strings ("4", "3/7") so round-trips are
// bit-exact; bilinear maps use a sparse product list of entries
// {"i": i, "j": j, "coeffs": {"k": scalar}} with i <= j for symmetric maps
// (symmetric completion implied; omitted pairs are zero).

json field_to_json(const FieldSpec& fs);
FieldSpec field_from_json(const json& j);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& fs, const json& j);

json crossed_to_json(const CrossedData& cd);
/// base_dir resolves a relative "A" path entry, when the base algebra is
/// given by reference instead of inline.
CrossedData crossed_from_json(const json& j, const std::string& base_dir = "");

json validation_to_json(const CrossedValidation& v);
json quotient_to_json(const QuotientDesc& q);
json class_set_to_json(const CohomologyClassSet& s);
json classification_to_json(const ClassificationReport& r);
/// Element list plus the Cayley table (indices into the element list).
json galois_to_json(const GaloisGroup& g);

json load_json_file(const std::string& path);
Algebra load_algebra(const std::string& path);
CrossedData load_crossed(const std::string& path);

}  // namespace fouralg::io

#endif
