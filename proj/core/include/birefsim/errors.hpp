#pragma once

#include <stdexcept>
#include <string>

namespace birefsim {

/// Invalid physical parameters or out-of-domain arguments.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation requested at (or too close to) a point where the quantity
/// is genuinely undefined or unbounded (amplitude zeros, formula poles).
class singularity_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A numerical procedure (root bracketing, quadrature) failed to produce
/// a result within its contract.
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace birefsim
