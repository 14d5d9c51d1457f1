#ifndef VGLAB_ERRORS_HPP
#define VGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vglab {

struct VglabError : std::runtime_error {
    explicit VglabError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : VglabError {
    explicit ParseError(const std::string& what) : VglabError("parse error: " + what) {}
};

// exact-algebra
struct InconsistentSamples : VglabError {
    explicit InconsistentSamples(const std::string& what) : VglabError(what) {}
};
struct Underdetermined : VglabError {
    explicit Underdetermined(const std::string& what) : VglabError(what) {}
};

// chow-chern
struct NonInvertibleClass : VglabError {
    explicit NonInvertibleClass(const std::string& what) : VglabError(what) {}
};
struct NonIntegerChi : VglabError {
    explicit NonIntegerChi(const std::string& what) : VglabError(what) {}
};

// bundle-specs
struct NotPresentable : VglabError {
    explicit NotPresentable(const std::string& what) : VglabError(what) {}
};
struct UnsupportedResolutionLength : VglabError {
    explicit UnsupportedResolutionLength(const std::string& what) : VglabError(what) {}
};
struct DegenerateLine : VglabError {
    explicit DegenerateLine(const std::string& what) : VglabError(what) {}
};
struct WrongFirstChern : VglabError {
    explicit WrongFirstChern(const std::string& what) : VglabError(what) {}
};
struct NotInM36 : VglabError {
    explicit NotInM36(const std::string& what) : VglabError(what) {}
};
struct NotGloballyGeneratedAt : VglabError {
    explicit NotGloballyGeneratedAt(const std::string& what) : VglabError(what) {}
};

// grassmann-maps
struct ShapeMismatch : VglabError {
    explicit ShapeMismatch(const std::string& what) : VglabError(what) {}
};
struct DegreeMismatch : VglabError {
    explicit DegreeMismatch(const std::string& what) : VglabError(what) {}
};
struct InterpolationInconsistent : VglabError {
    explicit InterpolationInconsistent(const std::string& what) : VglabError(what) {}
};

// verify-cli
struct UnknownCase : VglabError {
    explicit UnknownCase(const std::string& what) : VglabError(what) {}
};

} // namespace vglab

#endif
