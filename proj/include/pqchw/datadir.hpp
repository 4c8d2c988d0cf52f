// Resolution of the bundled data directory.
//
// Order: the PQCHW_DATA_DIR environment variable if set, otherwise the
// location baked in at configure time (the source tree's data/ directory).

#ifndef PQCHW_DATADIR_HPP
#define PQCHW_DATADIR_HPP

#include <filesystem>

namespace pqchw {

std::filesystem::path data_dir();

}  // namespace pqchw

#endif  // PQCHW_DATADIR_HPP
