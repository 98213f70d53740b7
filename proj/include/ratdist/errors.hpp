#pragma once

#include <stdexcept>
#include <string>

namespace ratdist {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RATDIST_ERROR(Name)                                              \
    struct Name : Error {                                                \
        explicit Name(const std::string& what = #Name) : Error(what) {}  \
    }

// exact-arith
RATDIST_ERROR(FactorizationLimitExceeded);
RATDIST_ERROR(MixedFieldError);

// quadforms
RATDIST_ERROR(NoSolution);
RATDIST_ERROR(SearchExhausted);
RATDIST_ERROR(DegenerateConic);

// geometry
RATDIST_ERROR(NotRationalGram);
RATDIST_ERROR(Collinear);
RATDIST_ERROR(NotCollinear);
RATDIST_ERROR(CoincidentPoints);

// deciders
RATDIST_ERROR(SingularMatrix);

// two-point
RATDIST_ERROR(DegenerateParameter);
RATDIST_ERROR(LineThroughOrigin);

// three-point
RATDIST_ERROR(NotAdmissible);
RATDIST_ERROR(LineOnCurve);
RATDIST_ERROR(SingularPoint);
RATDIST_ERROR(EtaEqualsP);
RATDIST_ERROR(PointAtInfinity);
RATDIST_ERROR(ExcludedDenominator);
RATDIST_ERROR(BZero);
RATDIST_ERROR(KZero);
RATDIST_ERROR(DegeneratePair);

// kummer
RATDIST_ERROR(BZeroDegenerate);

// integral-rings
RATDIST_ERROR(PerfectSquareDelta);
RATDIST_ERROR(AutomorphNotFound);

// cli / input
RATDIST_ERROR(ParseError);

#undef RATDIST_ERROR

} // namespace ratdist
