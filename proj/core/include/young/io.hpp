#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "young/matrix.hpp"
#include "young/tableau.hpp"

namespace young {

using TableauRows = std::vector<std::vector<std::vector<int>>>;  // component, row, column; 0 = inner box

struct MatrixDocument {
    std::string shape;
    std::string field;  // "rational", "q", "q-with-params", "cyclotomic:r"
    std::map<std::string, std::string> params;
    std::vector<TableauRows> basis;
    Matrix matrix;
};

// {"shape", "field", "params", "basis", "rows"}; inner boxes serialize as null.
std::string to_json(const MatrixDocument& doc);
MatrixDocument matrix_from_json(std::string_view text);

// Header row of basis words, then one row per matrix row.
std::string to_csv(const Matrix& m, const std::vector<std::string>& words);
Matrix matrix_from_csv(std::string_view text, const FieldDesc& field);

std::string tableau_to_json(const Tableau& t);

}  // namespace young
