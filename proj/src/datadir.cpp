#include "pqchw/datadir.hpp"

#include <cstdlib>
#include <stdexcept>

#ifndef PQCHW_DEFAULT_DATA_DIR
#define PQCHW_DEFAULT_DATA_DIR "data"
#endif

namespace pqchw {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("PQCHW_DATA_DIR"))
        return std::filesystem::path(env);
    return std::filesystem::path(PQCHW_DEFAULT_DATA_DIR);
}

}  // namespace pqchw
