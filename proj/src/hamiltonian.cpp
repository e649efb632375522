// Copyright 2026 The gmqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gmqc/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "gmqc/errors.hpp"

namespace gmqc {

namespace {

constexpr double kGroundBand = 1e-9;
constexpr double kGapBand = 1e-6;

}  // namespace

std::size_t ChainSpec::dimension() const {
  std::size_t d = std::size_t{1} << boundary_count();
  for (int k = 0; k < sites; ++k) d *= 3;
  return d;
}

void ChainSpec::validate() const {
  if (sites < 1) throw ContractError("chain needs at least one spin-1 site");
  if (!(coupling > 0.0)) throw ContractError("coupling J must be positive");
  // 3^N overflows long before size_t would; bail early for absurd N.
  if (sites > 30 || dimension() > kDenseCap)
    throw SizeError("chain of " + std::to_string(sites) + " sites with " +
                    std::to_string(boundary_count()) +
                    " boundary spins exceeds the dense cap of " + std::to_string(kDenseCap) +
                    " basis states");
}

SiteLayout ChainSpec::layout() const {
  std::vector<int> dims;
  if (has_left()) dims.push_back(2);
  dims.insert(dims.end(), static_cast<std::size_t>(sites), 3);
  if (has_right()) dims.push_back(2);
  return SiteLayout(std::move(dims));
}

std::optional<int> ChainSpec::left_position() const {
  if (!has_left()) return std::nullopt;
  return 0;
}

std::optional<int> ChainSpec::right_position() const {
  if (!has_right()) return std::nullopt;
  return bulk_position(sites) + 1;
}

Hamiltonian::Hamiltonian(SiteLayout layout, std::vector<Term> terms)
    : layout_(std::move(layout)), terms_(std::move(terms)) {}

ComplexVector Hamiltonian::apply(const ComplexVector& psi) const {
  ComplexVector out = ComplexVector::Zero(psi.size());
  for (const auto& t : terms_) out += apply_local(t.op, t.sites, layout_, psi);
  return out;
}

std::vector<Hamiltonian::Entry> Hamiltonian::matrix_elements() const {
  std::vector<Entry> out;
  for (const auto& t : terms_) {
    const auto offsets = local_offsets(t.sites, layout_);
    const auto d = offsets.size();
    for (std::size_t col = 0; col < layout_.size(); ++col) {
      std::size_t local_in = 0;
      for (int s : t.sites) local_in = local_in * layout_.dim(s) + layout_.digit(col, s);
      const std::size_t base = col - offsets[local_in];
      for (std::size_t r = 0; r < d; ++r) {
        const Complex v = t.op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(local_in));
        if (v != Complex{0.0, 0.0}) out.push_back({base + offsets[r], col, v});
      }
    }
  }
  return out;
}

ComplexMatrix Hamiltonian::dense() const {
  if (dimension() > ChainSpec::kDenseCap)
    throw SizeError("dense Hamiltonian of dimension " + std::to_string(dimension()) +
                    " exceeds the cap of " + std::to_string(ChainSpec::kDenseCap));
  const auto n = static_cast<Eigen::Index>(dimension());
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (const auto& e : matrix_elements())
    h(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += e.value;
  return h;
}

std::vector<int> Hamiltonian::twice_sz() const {
  std::vector<int> out(layout_.size(), 0);
  for (std::size_t i = 0; i < layout_.size(); ++i) {
    int m2 = 0;
    for (std::size_t s = 0; s < layout_.num_sites(); ++s) {
      const int d = layout_.dim(s);
      // Local index 0 is the highest weight; 2m runs d-1, d-3, ..., -(d-1).
      m2 += (d - 1) - 2 * layout_.digit(i, s);
    }
    out[i] = m2;
  }
  return out;
}

ComplexMatrix Hamiltonian::block(const std::vector<std::size_t>& indices) const {
  std::vector<long> position(layout_.size(), -1);
  for (std::size_t k = 0; k < indices.size(); ++k) position[indices[k]] = static_cast<long>(k);
  const auto n = static_cast<Eigen::Index>(indices.size());
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  for (const auto& e : matrix_elements()) {
    const long r = position[e.row];
    const long c = position[e.col];
    if (r >= 0 && c >= 0) b(r, c) += e.value;
  }
  return b;
}

namespace {

std::vector<Term> bulk_terms(const ChainSpec& spec, int first) {
  std::vector<Term> terms;
  const ComplexMatrix p2 = spec.coupling * projector_spin2();
  for (int k = first; k < spec.sites; ++k) {
    terms.push_back({"P2[" + std::to_string(k) + "," + std::to_string(k + 1) + "]",
                     {spec.bulk_position(k), spec.bulk_position(k + 1)},
                     p2});
  }
  return terms;
}

Term right_boundary_term(const ChainSpec& spec) {
  // P^{3/2} is stored spin-1/2 first; list the sites in that order.
  return {"P3/2[" + std::to_string(spec.sites) + "," + std::to_string(spec.sites + 1) + "]",
          {*spec.right_position(), spec.bulk_position(spec.sites)},
          spec.coupling * projector_spin32()};
}

struct Sector {
  std::vector<std::size_t> indices;
  ComplexMatrix block;
};

// H commutes with total S^z, so every matrix element stays inside one sector.
std::vector<Sector> sectors(const Hamiltonian& h) {
  std::map<int, Sector> by_m2;
  const auto m2 = h.twice_sz();
  std::vector<std::size_t> position(m2.size());
  for (std::size_t i = 0; i < m2.size(); ++i) {
    auto& s = by_m2[m2[i]];
    position[i] = s.indices.size();
    s.indices.push_back(i);
  }
  for (auto& [key, s] : by_m2) {
    const auto n = static_cast<Eigen::Index>(s.indices.size());
    s.block = ComplexMatrix::Zero(n, n);
  }
  for (const auto& e : h.matrix_elements()) {
    if (m2[e.row] != m2[e.col])
      throw InconsistencyError("Hamiltonian couples different total-Sz sectors");
    by_m2[m2[e.row]].block(static_cast<Eigen::Index>(position[e.row]),
                           static_cast<Eigen::Index>(position[e.col])) += e.value;
  }
  std::vector<Sector> out;
  for (auto& [key, s] : by_m2) out.push_back(std::move(s));
  return out;
}

}  // namespace

Hamiltonian build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  auto terms = bulk_terms(spec, 1);
  if (spec.has_left())
    terms.push_back({"P3/2[0,1]", {*spec.left_position(), spec.bulk_position(1)},
                     spec.coupling * projector_spin32()});
  if (spec.has_right()) terms.push_back(right_boundary_term(spec));
  return Hamiltonian(spec.layout(), std::move(terms));
}

Hamiltonian residual_hamiltonian(const ChainSpec& spec, ResidualIndex index) {
  spec.validate();
  if (index.j < 1 || index.j > spec.sites + 1)
    throw ContractError("residual index must lie in 1..N+1");
  auto terms = bulk_terms(spec, index.j);
  if (spec.has_right() && index.j <= spec.sites) terms.push_back(right_boundary_term(spec));
  return Hamiltonian(spec.layout(), std::move(terms));
}

GroundSpace ground_space(const ComplexMatrix& h, double tol) {
  const auto dec = eigh(h);
  Eigen::Index count = 0;
  while (count < dec.values.size() && dec.values(count) < tol) ++count;
  if (count == 0)
    throw InconsistencyError("no eigenvalue below the ground tolerance; lowest is " +
                             std::to_string(dec.values.size() ? dec.values(0) : 0.0));
  return {dec.values(0), dec.vectors.leftCols(count)};
}

GroundSpace ground_space(const Hamiltonian& h, double tol) {
  std::vector<ComplexVector> vectors;
  double energy = std::numeric_limits<double>::infinity();
  const auto n = static_cast<Eigen::Index>(h.dimension());
  for (const auto& [indices, b] : sectors(h)) {
    if (eigvalsh(b)(0) >= tol) continue;
    const auto dec = eigh(b);
    energy = std::min(energy, dec.values(0));
    for (Eigen::Index k = 0; k < dec.values.size() && dec.values(k) < tol; ++k) {
      ComplexVector v = ComplexVector::Zero(n);
      for (std::size_t r = 0; r < indices.size(); ++r)
        v(static_cast<Eigen::Index>(indices[r])) = dec.vectors(static_cast<Eigen::Index>(r), k);
      vectors.push_back(std::move(v));
    }
  }
  if (vectors.empty()) throw InconsistencyError("no eigenvalue below the ground tolerance");
  GroundSpace g;
  g.energy = energy;
  g.basis.resize(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t k = 0; k < vectors.size(); ++k) g.basis.col(static_cast<Eigen::Index>(k)) = vectors[k];
  return g;
}

RealVector sector_spectrum(const Hamiltonian& h) {
  std::vector<double> all;
  all.reserve(h.dimension());
  for (const auto& [indices, b] : sectors(h)) {
    const auto values = eigvalsh(b);
    all.insert(all.end(), values.data(), values.data() + values.size());
  }
  std::sort(all.begin(), all.end());
  return Eigen::Map<RealVector>(all.data(), static_cast<Eigen::Index>(all.size()));
}

SpectralSummary spectral_summary(const ChainSpec& spec) {
  const auto values = sector_spectrum(build_hamiltonian(spec));
  const double j = spec.coupling;
  SpectralSummary s;
  s.ground_energy = values(0) / j;
  s.gap = std::numeric_limits<double>::quiet_NaN();
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) < kGroundBand * j) ++s.degeneracy;
    if (values(k) > kGapBand * j) {
      s.gap = values(k) / j;
      break;
    }
  }
  if (s.degeneracy == 0)
    throw InconsistencyError("no eigenvalue below the ground tolerance; lowest is " +
                             std::to_string(values(0)));
  return s;
}

double spectral_gap(const ChainSpec& spec) { return spectral_summary(spec).gap; }

ComplexMatrix string_operator(const ChainSpec& spec, ResidualIndex index, Axis axis) {
  spec.validate();
  if (!spec.has_right()) throw ContractError("string operator needs the right boundary spin");
  if (index.j < 1 || index.j > spec.sites)
    throw ContractError("string operator index must lie in 1..N");
  std::vector<ComplexMatrix> factors;
  if (spec.has_left()) factors.push_back(identity(2));
  const ComplexMatrix rotation = spin1_pi_rotation(axis);
  for (int k = 1; k <= spec.sites; ++k) factors.push_back(k < index.j ? identity(3) : rotation);
  factors.push_back(pauli(axis));
  return kron_all(factors);
}

double frustration_residual(const Hamiltonian& h, const ComplexMatrix& basis) {
  double worst = 0.0;
  for (const auto& t : h.terms())
    for (Eigen::Index k = 0; k < basis.cols(); ++k)
      worst = std::max(worst, apply_local(t.op, t.sites, h.layout(), basis.col(k)).norm());
  return worst;
}

}  // namespace gmqc
