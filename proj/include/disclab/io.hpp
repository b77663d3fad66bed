#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "disclab/disc_geometry.hpp"
#include "disclab/ode.hpp"

namespace disclab {

// one point per line as "re im"; blank lines and lines starting with '#' are
// skipped; throws std::runtime_error with the line number on malformed input
std::vector<cplx> load_points(std::istream& is, const std::string& origin = "<stream>");
std::vector<cplx> load_points_file(const std::string& path);

// writers emit full double precision (17 significant digits)
void write_points(std::ostream& os, const std::vector<cplx>& pts);
void write_grid(std::ostream& os, const SampleGrid& grid);          // re im weight
void write_path(std::ostream& os, const PathSpec& path);            // vertices, re im
void write_trace(std::ostream& os, const SolutionTrace& trace);     // s z f1 f1' f2 f2'

}  // namespace disclab
