#ifndef CTIDLAB_ERRORS_HPP
#define CTIDLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctidlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact division left a nonzero remainder. In identity verification this is
// evidence of a failed identity (or a bug), never something to truncate.
class NonDivisible : public Error {
public:
    using Error::Error;
};

// A term-count or grid budget was exceeded.
class SizeLimit : public Error {
public:
    using Error::Error;
};

// A per-case wall-clock deadline expired.
class Timeout : public Error {
public:
    using Error::Error;
};

// A polynomial's total degree exceeds what the interpolation target admits.
class DegreeViolation : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

// Rational-function reconstruction did not fit the sampled values.
class ReconstructionFailed : public Error {
public:
    using Error::Error;
};

} // namespace ctidlab

#endif
