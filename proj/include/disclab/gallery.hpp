#pragma once

#include <functional>
#include <optional>

#include "disclab/disc_geometry.hpp"
#include "disclab/jet_provider.hpp"
#include "disclab/report.hpp"

namespace disclab {

// A catalog coefficient with bounded slowly-growing solution(s) and, where a
// natural pair exists, a full basis with its Wronskian.  Envelopes bound |f1|
// as a function of |z|.
struct GalleryEntry {
    std::string name;
    std::optional<double> p;
    ProviderPtr A;
    ProviderPtr f1;
    ProviderPtr f2;  // null when the entry ships only one solution
    cplx wronskian{1.0, 0.0};
    std::function<double(double)> envelope_lower;  // may be empty
    std::function<double(double)> envelope_upper;  // may be empty
    std::string profile_expectation;  // "growing" | "stabilized" for the alpha=2 coefficient profile
};

// names: thm1_i, thm1_ii (parameter p in (0, 1/2]), legendre, log_univalent, exp_singular
std::vector<std::string> gallery_names();
GalleryEntry gallery_entry(const std::string& name, std::optional<double> p = std::nullopt);

SolutionBasis gallery_basis(const GalleryEntry& e);  // throws when f2 is absent

struct GalleryVerifyOptions {
    double residual_tol = 1e-9;
    double wronskian_tol = 1e-9;
    double envelope_slack = 1e-12;
    std::size_t wronskian_stride = 37;  // node subsampling for the W sweep
};

std::vector<ReportRow> verify_entry(const GalleryEntry& e, const SampleGrid& grid,
                                    const GalleryVerifyOptions& opts = {});

}  // namespace disclab
