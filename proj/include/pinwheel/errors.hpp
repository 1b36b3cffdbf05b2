#pragma once

#include <stdexcept>
#include <string>

namespace pin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A corona could not be certified complete: the tile sits too close to the
// patch boundary. Retry with a larger patch.
struct BoundaryUncertain : Error {
    using Error::Error;
};

// Collared enumeration hit the level cap without consecutive-level equality
// plus substitution closure.
struct NonStabilized : Error {
    using Error::Error;
};

// A substituted child's corona class fell outside the enumerated set.
struct IncompleteEnumeration : Error {
    using Error::Error;
};

// A scanned patch has an edge shared by more than two triangles, a vertex in
// the interior of an edge, or mismatched cell contacts.
struct NonSimplicialAdjacency : Error {
    using Error::Error;
};

// A computed cell assignment fails boundary commutation or is not constant
// on glued cell classes.
struct NonCellular : Error {
    using Error::Error;
};

// Level / size caps.
struct ResourceLimit : Error {
    using Error::Error;
};

// Perron solve found an eigenspace of dimension != 1 or no positive vector.
struct EigenspaceError : Error {
    using Error::Error;
};

}  // namespace pin
