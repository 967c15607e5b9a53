#ifndef LCYCLE_ERROR_HPP
#define LCYCLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lcycle {

enum class Errc {
    invalid_argument,         // precondition violated
    end_mismatch,             // join requested between paths whose ordered ends differ
    nontrivial_intersection,  // joined paths share vertices outside the shared end
    bad_format,               // unparseable or inconsistent serialized input
    unsupported,              // instance outside the engine's representable range
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace lcycle

#endif
