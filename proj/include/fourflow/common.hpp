#pragma once

#include <stdexcept>
#include <string>

namespace fourflow {

/** Error in input data (notation strings, catalog files). CLI exit code 3. */
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/** Internal invariant violation; never expected on valid data. */
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/** Three-valued verdict for matching/verification with partial knowledge. */
enum class Tri { Holds, Fails, Unknown };

inline const char* triName(Tri t) {
    switch (t) {
        case Tri::Holds: return "holds";
        case Tri::Fails: return "fails";
        default: return "unknown";
    }
}

} // namespace fourflow
