#pragma once

#include <vector>

#include "monodim/boundary.hpp"
#include "monodim/mesh.hpp"

namespace monodim {

/// Smallest `count` eigenvalues of the cotangent-weight 0-form Laplacian with
/// lumped (diagonal) mass matrix, ascending. Solved as a symmetric shift-invert
/// Lanczos iteration with full reorthogonalization; deterministic.
std::vector<double> dec_eigenvalues(const Mesh& mesh, int count);

/// Eigenvalues clustered into (value, multiplicity) entries with relative gap
/// tolerance 1e-3; the zero cluster always has multiplicity equal to the number
/// of connected components.
SpectrumTable dec_function_spectrum(const Mesh& mesh, int count);

/// Adaptive variant: grows the eigenvalue count until the table is complete up
/// to nu_cutoff.
SpectrumTable dec_spectrum_to_cutoff(const Mesh& mesh, double nu_cutoff);

/// Total surface area (sum of triangle areas).
double mesh_area(const Mesh& mesh);

}  // namespace monodim
