#pragma once

#include <stdexcept>
#include <string>

namespace coverhom {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file or value.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

/// Group enumeration exceeded the configured size bound.
struct size_error : error {
    explicit size_error(const std::string& what) : error(what) {}
};

/// Generator images do not define a valid (surjective, relator-killing) homomorphism.
struct hom_error : error {
    explicit hom_error(const std::string& what) : error(what) {}
};

/// An automorphism does not stabilize the given homomorphism (f is not in Gamma).
struct stabilizer_error : error {
    explicit stabilizer_error(const std::string& what) : error(what) {}
};

/// An exact identity that must hold mathematically failed; indicates a bug or
/// a convention violation upstream.
struct consistency_error : error {
    explicit consistency_error(const std::string& what) : error(what) {}
};

} // namespace coverhom
