#pragma once

#include <string>
#include <vector>

#include "polyalg/geometry.hpp"

namespace polyalg {

/// Grid text ('#'/'.') with the top file row mapping to the top lattice row,
/// or JSON {"cells": [[i,j], ...]}. The result is translated to the origin.
Polyomino parse_input(const std::string& text);

std::string render_ascii(const Polyomino& p);
std::string render_tikz(const Polyomino& p, const std::vector<Cell>& rooks = {});
std::string render_svg(const Polyomino& p, const std::vector<Cell>& rooks = {});

/// "x,y;x,y;..." used by the CLI --rooks flag.
std::vector<Cell> parse_rooks(const std::string& text);

std::string cells_json(const Polyomino& p);

}  // namespace polyalg
