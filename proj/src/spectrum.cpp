#include "ohsz/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ohsz/charpoly.hpp"
#include "ohsz/constants.hpp"
#include "ohsz/quartic.hpp"

namespace ohsz {

const char* parity_name(Parity p) { return p == Parity::e ? "e" : "f"; }

namespace {

struct BranchLabelPair {
  StateLabel plus, minus;
};

// Labels carried by the four radical branches: +sqrt(x[i]) gets `plus`,
// -sqrt(x[i]) gets `minus`.
constexpr std::array<BranchLabelPair, 4> branch_labels{{
    {{+3, Parity::f}, {-3, Parity::e}},
    {{+3, Parity::e}, {-3, Parity::f}},
    {{+1, Parity::f}, {-1, Parity::e}},
    {{+1, Parity::e}, {-1, Parity::f}},
}};

}  // namespace

Spectrum solve_spectrum(const MolecularParameters& p, const FieldPoint& f) {
  using LD = long double;
  const LD scale = static_cast<LD>(si::hbar) * static_cast<LD>(p.delta);
  const LD bt = 4.0L * static_cast<LD>(si::mu_bohr) * static_cast<LD>(f.b) / scale;
  const LD et = 2.0L * static_cast<LD>(p.mu_e) * static_cast<LD>(f.e) / scale;
  const LD dt = 5.0L;
  const auto coeff =
      detail::even_coefficients_impl<LD>(bt, et, dt, static_cast<LD>(f.theta));

  // The zero-field degeneracies are structural, not numerical: pass them to
  // the quartic solver explicitly instead of relying on threshold detection.
  QuarticStructure structure = QuarticStructure::generic;
  if (f.b == 0.0) {
    structure = (f.e == 0.0) ? QuarticStructure::quadruple_root
                             : QuarticStructure::paired_roots;
  }
  const LD s_lambda = std::max(dt, std::max(bt, et));
  const auto roots = detail::solve_quartic_impl<LD>(
      coeff.p0, coeff.p2, coeff.p4, coeff.p6, s_lambda * s_lambda,
      std::numeric_limits<LD>::epsilon(), structure);

  struct Entry {
    LD v;
    StateLabel lab;
    int pair;
    bool plus;
  };
  std::array<Entry, 8> entries;
  for (int i = 0; i < 4; ++i) {
    const LD r = std::sqrt(roots.x[i]);
    entries[2 * i] = {+r, branch_labels[i].plus, i, true};
    entries[2 * i + 1] = {-r, branch_labels[i].minus, i, false};
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.v < b.v; });

  Spectrum out;
  std::array<std::array<int, 2>, 4> pos{};
  for (int k = 0; k < 8; ++k) {
    out.eigenvalues[k] = static_cast<double>(entries[k].v * scale);
    out.labels[k] = entries[k].lab;
    pos[entries[k].pair][entries[k].plus ? 1 : 0] = k;
  }
  for (int i = 0; i < 4; ++i) {
    out.partner[pos[i][1]] = pos[i][0];
    out.partner[pos[i][0]] = pos[i][1];
  }
  return out;
}

}  // namespace ohsz
