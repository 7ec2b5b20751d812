#pragma once

#include <stdexcept>
#include <string>

namespace qlucas {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// modarith
class InvalidModulus : public Error { public: using Error::Error; };
class ZeroInverse : public Error { public: using Error::Error; };

// lucas
class IndexTooLarge : public Error { public: using Error::Error; };

// represent
class NotOneModFour : public Error { public: using Error::Error; };

// oracle
class GateRejected : public Error { public: using Error::Error; };
class UnreachableBranch : public Error { public: using Error::Error; };

// quartic
class NotQuarticUnit : public Error { public: using Error::Error; };
class ZeroDenominator : public Error { public: using Error::Error; };
class SearchExhausted : public Error { public: using Error::Error; };
class NotRepresented : public Error { public: using Error::Error; };
class PipelinePreconditionFailed : public Error { public: using Error::Error; };

// harness
class ConfigError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

} // namespace qlucas
