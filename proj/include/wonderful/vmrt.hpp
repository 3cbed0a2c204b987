#pragma once

#include "wonderful/curve_classes.hpp"
#include "wonderful/kac.hpp"

#include <string>
#include <vector>

namespace wonderful {

enum class OrbitType { Min, SumSigma };
const char* to_string(OrbitType t);

struct Dimensions {
  std::int64_t boundary_degree = 0;      // ∂X·C
  std::int64_t dim_family = 0;           // dim K_x
  std::int64_t dim_nilpotent_orbit = 0;  // dim G·m
  std::int64_t dim_hc = 0;               // dim H·C
};

/// Sum of the positive roots sent to negative roots by σ.
Weight kappa(const Involution& inv);
/// Sum of the distinct restricted simple roots.
Weight sigma_sum(const RestrictedRootSystem& rrs);
Dimensions dimensions(const RestrictedRootSystem& rrs);

/// Literal σ(Θ) = −Θ.
bool sigma_theta_is_minus_theta(const RestrictedRootSystem& rrs);
/// Table convention: for group type 𝔭 is identified with 𝔥, where −σ(Θ) is
/// the copy of Θ in the second factor.
bool sigma_theta_column(const RestrictedRootSystem& rrs);
OrbitType orbit_type(const RestrictedRootSystem& rrs);

/// 2⟨Θ∨, ρ⟩ for one simple component.
std::int64_t dim_minimal_orbit(const RootSystem& rs, std::size_t component = 0);
/// #𝔤(1) + 2·#𝔤(2) under the grading by Θ∨ − σ(Θ)∨.
std::int64_t graded_orbit_dimension(const RestrictedRootSystem& rrs);
std::int64_t dim_isotropy_complement(const Involution& inv);
bool is_fano(const RestrictedRootSystem& rrs);

struct VmrtComponent {
  std::string name;
  std::int64_t dimension = 0;
};

/// Classification data the engine surfaces but does not derive.
struct StoredFacts {
  bool hermitian = false;
  std::string type_a_vmrt;  // closed-orbit name used when R̄ is A_r, r ≥ 2
  std::string embedding_degree;
};

struct VmrtReport {
  TypeLabel restricted_type;
  std::size_t rank = 0;
  bool sigma_theta_is_minus_theta = false;
  OrbitType orbit_type = OrbitType::Min;
  Dimensions dims;
  std::int64_t dim_p = 0;
  bool hermitian = false;
  bool exceptional = false;
  bool fano = false;
  std::size_t picard_rank = 0;
  std::vector<CurveClass> minimal_classes;
  std::vector<VmrtComponent> hc_components;
  std::vector<VmrtComponent> vmrt_components;
  std::string embedding_degree;
  Weight kappa, sigma_sum;
};

/// H·C components from the marked Kac diagrams: both marked diagrams when
/// Hermitian and non-exceptional, otherwise the first.
std::vector<SpaceDescriptor> hc_descriptors(const KacDiagram& kd, bool hermitian, bool exceptional);

VmrtReport vmrt_report(const CurveClassModel& model, const KacDiagram& kd, const StoredFacts& facts);

}  // namespace wonderful
