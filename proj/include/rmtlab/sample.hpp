#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rmtlab {

/// How spacings were pulled out of an eigenvalue sequence.
enum class ExtractionMode {
    AllConsecutive,
    CentralSpacing,
    SemicircleUnfolded,
    Direct,  // drawn straight from a law or a level file
};

std::string to_string(ExtractionMode mode);
ExtractionMode extraction_mode_from_string(const std::string& name);

/// A batch of nonnegative spacings together with its normalization record.
struct SpacingSample {
    std::vector<double> spacings;
    double grand_mean_used = 1.0;  // divisor applied to reach unit mean (1 if raw)
    ExtractionMode mode = ExtractionMode::Direct;
    std::string provenance;

    /// Divide by the current mean and record it. Throws if the mean is not
    /// strictly positive.
    void normalize_to_unit_mean();
};

}  // namespace rmtlab
