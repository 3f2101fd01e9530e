#ifndef CLUSTERLAB_IO_HPP
#define CLUSTERLAB_IO_HPP

#include <iosfwd>
#include <string>

#include "clusterlab/core.hpp"

namespace clusterlab {

/// Full-precision decimal rendering (round-trips a double exactly).
std::string format_double(double v);

/// Dataset CSV: header "x0,...,x{d-1},label" with the label column optional.
/// Unlabeled files load as datasets without ground truth.
Dataset read_dataset_csv(std::istream& in);
Dataset read_dataset_csv_file(const std::string& path);

void write_dataset_csv(const Dataset& ds, std::ostream& out);
void write_dataset_csv_file(const Dataset& ds, const std::string& path);

}  // namespace clusterlab

#endif  // CLUSTERLAB_IO_HPP
