// errors.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace oospc {

/// The requested design provably does not exist (e.g. CSTS(9), an even CDM,
/// an exhausted perfect-packing search).
class NoSuchDesign : public std::runtime_error {
public:
    explicit NoSuchDesign(const std::string& what) : std::runtime_error(what) {}
};

/// A search ran out of time before it could decide.
class SearchTimeout : public std::runtime_error {
public:
    explicit SearchTimeout(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace oospc
