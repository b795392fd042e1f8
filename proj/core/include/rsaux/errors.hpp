#ifndef RSAUX_ERRORS_HPP
#define RSAUX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsaux {

// Argument outside the domain an operation supports.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Evaluation requested at (or numerically indistinguishable from) a pole.
class pole_error : public domain_error {
public:
    explicit pole_error(const std::string& what) : domain_error(what) {}
};

// A branch-cut constraint was violated (argument landed on a cut).
class branch_error : public domain_error {
public:
    explicit branch_error(const std::string& what) : domain_error(what) {}
};

// Iterative refinement failed to contract.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested point is outside the range an evaluator supports.
class range_error : public std::runtime_error {
public:
    explicit range_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rsaux

#endif
