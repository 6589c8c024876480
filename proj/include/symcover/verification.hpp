#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcover/partition.hpp"
#include "symcover/workspace.hpp"

namespace symcover {

struct Check {
  std::string label;
  bool passed = false;
  std::string detail;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string name) : name_(std::move(name)) {}

  void add(std::string label, bool passed, std::string detail = {});
  void append(const VerificationReport& other);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  std::size_t passed_count() const;
  bool passed() const { return passed_count() == checks_.size(); }

 private:
  std::string name_;
  std::vector<Check> checks_;
};

/// Both directions of the covering-number theorem at n > 4: every nonlinear
/// χ has c(χ^{n-1}) and the union through n-1 equal to Irr(S_n), while for
/// (n-1,1) at k = n-2 both miss exactly the sign character; plus
/// e_max = d_max = n-1.
VerificationReport verify_theorem1(Workspace& ws, unsigned n);

/// c(θ_{n,2}) ⊆ c(χ_λ^2) for every non-rectangular λ ⊢ n, n >= 3.
VerificationReport verify_lemma_nonrectangle(Workspace& ws, unsigned n);

/// c(θ_{n,5}) ⊆ c(χ_λ^4) for rectangular λ ⊢ n of degree > 1, n > 6; for
/// n >= 10 also the two intermediate inclusions through (n-4,2,2).
VerificationReport verify_lemma_rectangle(Workspace& ws, unsigned n);

/// The 19 multiplicities <χ_ν, χ_{(6,2,2)}^2> over Λ.
VerificationReport verify_table1(Workspace& ws);

/// c(θ_{n,u}^v χ_λ) = {μ : |λ \ μ| <= uv} for every λ ⊢ n; u and v default
/// to every value in [0, 3] (u capped at n).
VerificationReport verify_theta_move(Workspace& ws, unsigned n, std::optional<unsigned> u = {},
                                     std::optional<unsigned> v = {});

/// Random instances of: ν ∈ c(χ_λχ_μ), γ ∈ c(χ_αχ_β) imply ν+γ lies in both
/// c(χ_{λ+α}χ_{μ+β}) and c(χ_{λ+'α}χ_{μ+'β}). Sizes satisfy |λ|+|α| <= max_size.
VerificationReport verify_semigroup(Workspace& ws, unsigned samples, unsigned max_size, std::uint64_t seed);

/// d(χ) <= |{χ(g)}| and d(χ) <= e(χ) for every nonlinear χ of S_n.
VerificationReport verify_brauer(Workspace& ws, unsigned n);

/// Support iteration agrees with exact powers for every λ ⊢ n and k <= n-1.
VerificationReport verify_oracle_equivalence(Workspace& ws, unsigned n);

/// Λ = {α +' (10 - |α|) : |α| <= 5}, canonical order.
std::vector<Partition> table1_lambda_set();

/// The published multiplicities, in the row order they are listed.
const std::vector<std::pair<Partition, unsigned>>& table1_expected();

}  // namespace symcover
