#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hwp/factor.hpp"
#include "hwp/search.hpp"

namespace hwp {

/// Thrown for parameters no explicit construction covers. This never claims
/// that a factorization does not exist.
class UnsupportedParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction produced a certificate that failed verification and could
/// not be repaired.
class TranscriptionFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Hosts on Z₂ × Z_m use vertex id layer·m + index. Every function verifies
// its certificate before returning; when an explicit family fails, the
// failing factors are re-derived by a bounded search on the leftover arcs and
// the deviation is recorded in Certificate::repairs.

/// C_m*[2] into r K₂*-factors and 4−r C⃗₂ₘ-factors, r ∈ {0,2,4}, m ≥ 3.
Certificate cm2_k2_vs_c2m(int m, int r);

/// Γ*ₘ into r K₂*-factors and 6−r C⃗₂ₘ-factors; r ∈ {2,4,6}, plus r = 0 by
/// search (three undirected 2m-cycle factors, lifted and oriented).
Certificate gamma_k2_vs_c2m(int m, int r);

/// C_m*[2] ⊕ I*₂ₘ into r K₂*-factors and 5−r C⃗₂ₘ-factors, r ∈ {0,1,3,5};
/// r = 0 needs m ≥ 5 and uses the explicit five-cycle families.
Certificate cm2_plus_I_k2_vs_c2m(int m, int r);

/// C_m*[2] into r K₂*-factors and 4−r C⃗ₘ-factors, m even, r ∈ {0,2,4}.
Certificate cm2_k2_vs_cm(int m, int r);

/// C_m*[2] ⊕ I*₂ₘ into r K₂*-factors and 5−r C⃗ₘ-factors, m even,
/// r ∈ {1,3,5}.
Certificate cm2_plus_I_k2_vs_cm(int m, int r);

/// Γ*ₘ into r K₂*-factors and 6−r C⃗ₘ-factors: r ∈ {2,4,6} for even m ≥ 4,
/// r ∈ {1,3} when m ≡ 2 (mod 4), r = 0 as gamma_cm_vs_c2m(m, 6).
Certificate gamma_k2_vs_cm(int m, int r);

/// C₄*[2] ⊕ I₈*, r ∈ {0,1,2,3,5}; r = 0 and r = 2 are fixed families.
Certificate c42_plus_I8(int r);

/// K₁₂* into r K₂*-factors and 11−r C⃗₄-factors, r ∈ {0,1,2,3,4,5,7,9,11}.
/// r = 2 and r = 4 are fixed families; r = 0 comes from search.
Certificate k12_factorization(int r);

/// K*₍₄:₃₎ into r K₂*-factors and 8−r C⃗₄-factors, r ∈ {0,1,2,4,6,8}.
Certificate k43_factorization(int r);

/// Γ*ₘ into r C⃗ₘ-factors and 6−r C⃗₂ₘ-factors, r ∈ {0,6}. r = 6 is explicit
/// for m ≡ 2 (mod 4) and searched otherwise; r = 0 is searched.
Certificate gamma_cm_vs_c2m(int m, int r);

/// C_m*[2] ⊕ I*₂ₘ into r C⃗ₘ-factors and 5−r C⃗₂ₘ-factors, m even,
/// r ∈ {1,3}; r = 0 is cm2_plus_I_k2_vs_c2m(m, 0).
Certificate cm2_plus_I_cm_vs_c2m(int m, int r);

/// C_m*[2] into r C⃗ₘ-factors and 4−r C⃗₂ₘ-factors, m even, r ∈ {0,2,4}.
Certificate cm2_cm_vs_c2m(int m, int r);

/// Factorization of `host` found by backtrack_search with a fixed seed, for
/// parameter sets without an explicit family. `kinds` lists the directed
/// factor kinds. Throws UnsupportedParameters when the search does not succeed.
Certificate searched_factorization(const Digraph& host, const HostDescriptor& desc,
                                   const std::vector<SearchKind>& kinds, const std::string& label);

}  // namespace hwp
