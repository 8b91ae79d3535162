#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "monodim/mesh.hpp"

namespace monodim {

struct RoundSphere {
  double radius = 1.0;
};

struct FlatTorus {
  /// Rows are the two lattice generators of R^2 / (Z a + Z b).
  std::array<std::array<double, 2>, 2> lattice{{{1, 0}, {0, 1}}};
};

struct MeshMetric {
  std::string path;  // provenance only; empty for in-memory meshes
  std::shared_ptr<const Mesh> mesh;
};

using SurfaceMetric = std::variant<RoundSphere, FlatTorus, MeshMetric>;

/// One closed oriented boundary component: its genus, the first Chern number
/// of the eigenline bundle on it (the charge), a metric, and an overall scale
/// on the metric. Scaling the metric by c scales every Laplace eigenvalue by 1/c.
struct SurfaceComponent {
  int genus = 0;
  int charge = 0;
  SurfaceMetric metric = RoundSphere{};
  double area_scale = 1.0;

  /// Enforces genus/metric compatibility (sphere => genus 0, torus => genus 1,
  /// mesh => connected with matching genus) and area_scale > 0.
  void validate() const;
};

struct BoundarySurface {
  std::vector<SurfaceComponent> components;

  struct Betti {
    int b0 = 0, b1 = 0, b2 = 0;
  };
  /// b0 = #components, b1 = sum of 2 genus_i, b2 = b0.
  Betti betti() const;

  void validate() const;
};

struct SpectrumEntry {
  double eigenvalue = 0;
  int multiplicity = 0;
  int component = 0;
};

/// Laplace eigenvalues (functions) with multiplicities, ascending; complete up
/// to `cutoff`. Entries keep their component id, so tables of disjoint unions
/// are plain sorted merges.
struct SpectrumTable {
  std::vector<SpectrumEntry> entries;
  double cutoff = 0;
  bool from_mesh = false;

  /// Smallest positive eigenvalue; throws input_error if none is present.
  double smallest_positive() const;
  std::string to_csv() const;
};

/// Round sphere of the given radius: eigenvalues l(l+1)/r^2, multiplicity 2l+1.
SpectrumTable sphere_spectrum(double radius, double cutoff);

/// Flat torus R^2/lattice: eigenvalues 4 pi^2 |y|^2 over the dual lattice.
SpectrumTable torus_spectrum(const std::array<std::array<double, 2>, 2>& lattice, double cutoff);

/// Spectrum of one component, scaled by 1/area_scale, complete up to
/// nu_cutoff; entries are stamped with component_id. Mesh metrics are solved
/// with the finite-element Laplacian (see dec.hpp).
SpectrumTable component_spectrum(const SurfaceComponent& component, int component_id, double nu_cutoff);

/// Sorted merge keeping per-component entries.
SpectrumTable merge_spectra(const std::vector<SpectrumTable>& tables);

}  // namespace monodim
