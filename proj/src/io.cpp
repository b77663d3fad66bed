#include "disclab/io.hpp"

#include <fstream>
#include <sstream>

#include "disclab/report.hpp"

namespace disclab {

std::vector<cplx> load_points(std::istream& is, const std::string& origin) {
    std::vector<cplx> pts;
    std::string line;
    long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        double re = 0.0, im = 0.0;
        if (!(ls >> re >> im))
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": expected two floats per line (re im)");
        std::string rest;
        if (ls >> rest && !rest.empty() && rest[0] != '#')
            throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                     ": trailing characters after the point");
        pts.emplace_back(re, im);
    }
    return pts;
}

std::vector<cplx> load_points_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error(path + ": cannot open for reading");
    return load_points(f, path);
}

namespace {
void put(std::ostream& os, double v) { os << format_sig17(v); }
void put_pair(std::ostream& os, cplx z) {
    put(os, z.real());
    os << ' ';
    put(os, z.imag());
}
}  // namespace

void write_points(std::ostream& os, const std::vector<cplx>& pts) {
    for (cplx z : pts) {
        put_pair(os, z);
        os << '\n';
    }
}

void write_grid(std::ostream& os, const SampleGrid& grid) {
    os << "# re im weight\n";
    for (const GridNode& n : grid.nodes) {
        put_pair(os, n.z);
        os << ' ';
        put(os, n.weight);
        os << '\n';
    }
}

void write_path(std::ostream& os, const PathSpec& path) {
    os << "# re im\n";
    write_points(os, path.vertices);
}

void write_trace(std::ostream& os, const SolutionTrace& trace) {
    os << "# s z_re z_im f1_re f1_im f1p_re f1p_im f2_re f2_im f2p_re f2p_im\n";
    for (const BasisSample& s : trace.samples) {
        put(os, s.s);
        os << ' ';
        put_pair(os, s.z);
        for (const cplx& y : s.y) {
            os << ' ';
            put_pair(os, y);
        }
        os << '\n';
    }
}

}  // namespace disclab
