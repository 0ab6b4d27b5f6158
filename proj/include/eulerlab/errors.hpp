#pragma once

#include <stdexcept>
#include <string>

namespace eulerlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonMonotonePL : public Error { public: using Error::Error; };
class SingularMatrix : public Error { public: using Error::Error; };
class IterationLimit : public Error { public: using Error::Error; };
class BallTooLarge : public Error { public: using Error::Error; };
class BadIndex : public Error { public: using Error::Error; };
class RankMismatch : public Error { public: using Error::Error; };
class NotAnInteger : public Error { public: using Error::Error; };
class NotACocycle : public Error { public: using Error::Error; };
class AssociativityFailure : public Error { public: using Error::Error; };
class NotASection : public Error { public: using Error::Error; };
class NotARepresentation : public Error { public: using Error::Error; };
class SchemaError : public Error { public: using Error::Error; };
class Degenerate : public Error { public: using Error::Error; };
class BadDeterminant : public Error { public: using Error::Error; };

} // namespace eulerlab
