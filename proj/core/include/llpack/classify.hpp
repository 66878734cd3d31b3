#ifndef LLPACK_CLASSIFY_HPP
#define LLPACK_CLASSIFY_HPP

#include <string>
#include <vector>

#include "llpack/cuspdata.hpp"
#include "llpack/lparam.hpp"

namespace llpack::cls {

using cusp::TypeDatum;
using par::Parameter;
using par::PGroupKind;

// The parameter whose L-packet contains the compact induction of the datum.
// ambient fixes the p-adic family and, for even orthogonal groups, the
// discriminant class; ambient.n = 0 means the size is derived from the
// datum. Non-symmetric data raise NotSupported.
Parameter type_to_parameter(const TypeDatum& datum, const PGroupKind& ambient);

// The complete set of inducing type data of the packet of phi, one entry
// per supercuspidal member (totalled over pure inner forms in the
// odd-orthogonal case). Parameters not of the almost-symmetric shape raise
// NotTypicallySymmetric.
std::vector<TypeDatum> parameter_to_types(const PGroupKind& ambient, const Parameter& phi);

// One full-group datum together with the sign of the extension rho(+-) it
// restricts to on the index-two subgroup.
struct DescendEntry {
    TypeDatum datum;
    int sign = +1;
};

// Association of a full even-orthogonal packet with the connected group: in
// the non-exceptional case the pairing is a bijection onto the entries; in
// the exceptional case (a = c = -1) only the union of the two parameters
// phi_+, phi_- can be matched with the two restrictions rho_+, rho_-.
struct DescendResult {
    Parameter phi0;  // read mod dual-group conjugacy
    bool exceptional = false;
    std::vector<DescendEntry> entries;
};

DescendResult connected_descend(const Parameter& phi, const std::vector<TypeDatum>& data);

// Enumeration grid: |m_+|, |m_-| up to max_m, and deep multiplicities up to
// max_deep_m on the listed polynomials.
struct GridBounds {
    int max_m = 0;
    std::vector<poly::MonicPoly> polys;
    int max_deep_m = 0;
};

struct TableRow {
    Parameter phi;
    std::vector<TypeDatum> types;
};

// Every (parameter, type-set) row over the grid for the given finite
// family; odd-orthogonal grids produce rows for both ramified discriminant
// classes of the ambient group.
std::vector<TableRow> packet_table(cusp::Family family, const GridBounds& bounds);

}  // namespace llpack::cls

#endif
