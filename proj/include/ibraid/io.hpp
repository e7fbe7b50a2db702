#pragma once

#include <optional>
#include <string>

#include "ibraid/constructions.hpp"
#include "ibraid/frt.hpp"

namespace ibraid {

// ==== document model ========================================================
//
// One JSON document per object, schema version 1, exact coefficient strings
// everywhere ("3/2", "s^2 - 1", "1 + 2*h"), 0-based indices. Kinds:
//   bialgebra   field, basis, mul/comul [i,j,k,coeff], unit/counit lists,
//               optional antipode [i,j,coeff]
//   element     field, dim, order, terms [i_1..i_order, coeff]
//   form        same shape as element, evaluated against basis tuples
//   braided_vs  field, dim, c/t as [i,j,k,l,coeff]; or q_matrix (+ p_matrix)
//               shortcut for the diagonal type
//   lie         field, basis, bracket [i,j,k,coeff], optional r terms
// Serializers emit a stable key order with two-space indentation and a
// trailing newline, so equal objects produce byte-identical files.

struct Document {
  std::string kind;
  std::optional<FinBialgebra> bialgebra;
  std::optional<Field> field;  // ambient field for element/form payloads
  std::optional<TensorElement> element;
  std::optional<MultiForm> form;
  std::optional<BraidedVS> braided;
  std::optional<LieAlgebraData> lie;
  std::optional<TensorElement> lie_r;  // optional r carried by a lie document
};

// ==== canonical serializers =================================================

std::string bialgebra_to_json(const FinBialgebra& h);
std::string element_to_json(const Field& f, const TensorElement& a);
std::string form_to_json(const Field& f, const MultiForm& a);
std::string braided_to_json(const BraidedVS& b);
std::string lie_to_json(const LieAlgebraData& g,
                        const TensorElement* r = nullptr);

// ==== parsing ===============================================================

// parse a document of any kind; errors are Err::Parse and name the offending
// field (coefficients additionally name the entry they sit in)
Document parse_document(const std::string& text);

Document load_document(const std::string& path);  // Err::Input when unreadable
void save_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace ibraid
