#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gordian/diagram.hpp"

namespace gordian {

// Coefficients of z^0, z^1, ... with trailing zeros removed; the zero
// polynomial is [0].
struct ConwayPolynomial {
    std::vector<std::int64_t> coefficients{0};

    std::int64_t operator[](std::size_t i) const { return i < coefficients.size() ? coefficients[i] : 0; }
    bool operator==(const ConwayPolynomial&) const = default;
    std::string str() const;
};

// Which basepoints and component order the skein recursion walks with.
struct SkeinOrder {
    bool reverse_components = false;
    int basepoint_shift = 0;  // start k edges after the smallest label of each component
};

ConwayPolynomial conway(const Diagram& d, const SkeinOrder& order = {});
// Coefficients up to z^max_degree only; cheaper for large diagrams.
ConwayPolynomial conway_truncated(const Diagram& d, int max_degree, const SkeinOrder& order = {});

std::int64_t a2(const Diagram& d);
int linking_number(const Diagram& d);
int writhe(const Diagram& d);

// Order-2 invariant, equal to a2.
std::int64_t v2_gauss(const GaussCode& g);
// Order-3 invariant, normalized to 1 on the right-handed trefoil.
std::int64_t v3_gauss(const GaussCode& g);

// Signed count of a based arrow pattern in a one-component Gauss code. The
// pattern lists arrow endpoints in basepoint order, e.g. "U1 O2 O1 U2"; an
// occurrence contributes the product of the signs of its crossings.
std::int64_t count_pattern(const GaussCode& g, const std::string& pattern);
// Same for the pattern read on a circle: every based pattern obtained by
// moving the basepoint is counted once.
std::int64_t count_circle_pattern(const GaussCode& g, const std::string& pattern);

// Exact recomputation used to compare two knots.
struct InvariantSuite {
    ConwayPolynomial conway;
    std::int64_t v3 = 0;

    bool operator==(const InvariantSuite&) const = default;
};
InvariantSuite invariant_suite(const Diagram& knot);

}  // namespace gordian
