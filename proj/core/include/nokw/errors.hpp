#ifndef NOKW_ERRORS_HPP
#define NOKW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nokw {

/**
 * Error hierarchy shared by the whole library.
 *
 * The three leaf categories deliberately mirror the process exit codes of the
 * command-line tool:
 *
 *   invalid_input          -> exit 2  (caller handed us something malformed or
 *                                      outside a documented precondition:
 *                                      zero weight, non-dominant weight, rank
 *                                      out of bounds, unsupported type for the
 *                                      telescope construction, ...)
 *   verification_failure   -> exit 1  (a theorem check that must pass did not;
 *                                      this always signals an implementation
 *                                      bug, never a property of the input)
 *   internal_error         -> exit 3  (an internal invariant was violated,
 *                                      e.g. an enumeration that should be a
 *                                      bijection repeats a root)
 */
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_input : public error {
public:
    explicit invalid_input(const std::string& what) : error(what) {}
};

/// Input is well-formed but the requested construction does not exist for it
/// (e.g. the Levi-telescope enumeration for G2, F4 or E8).
class unsupported_type : public invalid_input {
public:
    explicit unsupported_type(const std::string& what) : invalid_input(what) {}
};

class verification_failure : public error {
public:
    explicit verification_failure(const std::string& what) : error(what) {}
};

class internal_error : public error {
public:
    explicit internal_error(const std::string& what) : error(what) {}
};

/// Throws internal_error when `cond` is false.  Used for invariants that are
/// mathematically guaranteed; their failure means the code is wrong.
inline void require_internal(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

inline void require_input(bool cond, const std::string& what) {
    if (!cond) throw invalid_input(what);
}

} // namespace nokw

#endif // NOKW_ERRORS_HPP
