// Invariant factors of a smooth fan and the etale-cohomology groups they
// determine: H^1 with mu_nu coefficients and the nu-torsion of the Brauer
// group, over a field described by a finite descriptor.
//
// All groups are computed as isomorphism classes in canonical form; the
// descriptor supplies the field's own contributions as abstract groups.
#pragma once

#include "fan.hpp"
#include "matrix.hpp"

#include <string>
#include <vector>

namespace fanlab {

enum class FieldKind { algebraically_closed, real, custom };

struct FieldDescriptor {
    FieldKind kind = FieldKind::custom;
    Int characteristic = 0;   // 0 or a prime
    AbelianGroup h1_nu;       // H^1(k, Z/nu) as an abstract group
    AbelianGroup brauer_nu;   // nu-torsion of the field's Brauer group
    bool has_primitive_root = false;  // k contains a primitive nu-th root of unity

    // presets; "real" carries the nu = 2 data and rejects other nu
    static FieldDescriptor algebraically_closed_preset();
    static FieldDescriptor real_preset();
};

// Invariant factors a_1 | a_2 | ... | a_r of the sublattice generated by
// the rays: the Smith diagonal of the ray matrix, padded with zeros to the
// ambient rank. Tail zeros count the directions the rays miss.
// Throws HypothesisError("fan not smooth") unless every cone is smooth
// (checking the maximal cones suffices: faces of smooth cones are smooth).
std::vector<Int> invariant_factors(const Fan& f);

// H^1 of the variety with mu_nu coefficients:
//   h1_nu(k) + sum_i Z/gcd(nu, a_i), with gcd(nu, 0) = nu.
AbelianGroup h1_mu(const Fan& f, const Int& nu, const FieldDescriptor& k);

// nu-torsion of the Brauer group:
//   brauer_nu(k) + sum_i h1_nu(k) (x) Z/gcd(nu, a_i)
//               + sum_i (Z/gcd(nu, a_i))^(r-i)   [i = 1..r]
AbelianGroup brauer_nu(const Fan& f, const Int& nu, const FieldDescriptor& k);

// The real-field specialization at nu = 2: an elementary 2-group of rank
// 1 + t + t(t-1)/2 where t = #{a_i : gcd(2, a_i) != 1}.
AbelianGroup brauer_real(const Fan& f);

struct BrauerReport {
    Int nu;
    std::vector<Int> factors;  // length r
    AbelianGroup h1;
    AbelianGroup brauer;
};

BrauerReport brauer_report(const Fan& f, const Int& nu, const FieldDescriptor& k);

}  // namespace fanlab
