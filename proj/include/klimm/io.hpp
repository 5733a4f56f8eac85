#pragma once

// JSON forms of matrices, grids and immanant results.

#include "klimm/exactmat.hpp"
#include "klimm/grid.hpp"
#include "klimm/immanant.hpp"

#include <json.hpp>

#include <filesystem>

namespace klimm {

using Json = nlohmann::ordered_json;

/// {"rows": r, "cols": c, "entries": [[...], ...]}; entries are "p/q" or
/// "p" strings. Integer entries are accepted on input.
Json to_json(const RationalMatrix &m);
RationalMatrix matrix_from_json(const Json &j);

RationalMatrix read_matrix(const std::filesystem::path &path);
void write_matrix(const std::filesystem::path &path, const RationalMatrix &m);

/// {"n", "cells": [[i, j], ...], "row_labels", "col_labels"}.
Json to_json(const LabeledGrid &g);

Json to_json(const ImmanantResult &r);

Json to_json(const Multiset &s);

} // namespace klimm
