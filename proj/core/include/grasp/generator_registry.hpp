#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "grasp/errors.hpp"

namespace grasp {

/// Families of anticommuting generators.  Each non-starred species pairs
/// with its starred partner under conjugation.
enum class Species : std::uint8_t { G, GStar, H, HStar, K, KStar };

bool is_starred(Species s);
Species star_of(Species s);
Species base_of(Species s);
char species_char(Species s);

/// Identity of a single generator: family plus 1-based mode index.
struct GeneratorLabel {
  Species species = Species::G;
  int mode = 1;

  std::string str() const;  // "g1", "g1*", "h2", ...
  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Ordered, append-only table of anticommuting generators.
///
/// The position of a label in the table is the generator index used by
/// monomial bitmasks; the ordering is total and never changes after a
/// generator is added.  Conjugation is a fixed-point-free involution on
/// the indices of paired generators.
class GeneratorRegistry {
 public:
  static constexpr std::size_t kMaxGenerators = 64;

  GeneratorRegistry() = default;

  /// Appends one generator.  If its conjugate partner is already present
  /// the two are linked.  Returns the new index.
  int add_generator(const GeneratorLabel& label);

  /// Appends `base` then its starred partner for `mode`; returns the index
  /// of the non-starred generator.
  int add_conjugate_pair(Species base, int mode);

  std::size_t count() const { return m_labels.size(); }
  const GeneratorLabel& label(int index) const;

  bool has_conjugate(int index) const;
  int conjugate_index(int index) const;  // throws PairingError if unpaired

  /// Index of (species, mode), or -1 when absent.
  int index_of(Species species, int mode) const;

  /// (x_i, x*_i) index pairs of a family, in ascending mode order.
  std::vector<std::pair<int, int>> family_pairs(Species base) const;

  /// Bitmask over all generators of the family (both starred and
  /// non-starred unless `starred_only`).
  std::uint64_t family_mask(Species base, bool starred_only = false) const;

  friend bool operator==(const GeneratorRegistry&, const GeneratorRegistry&) = default;

  /// Registry with the listed base families over modes 1..n, each family
  /// contiguous: x1, x1*, x2, x2*, ...
  static std::shared_ptr<const GeneratorRegistry> fermionic_modes(
      int n_modes, std::initializer_list<Species> base_families);

  /// Parses a label of the form "g3" or "g3*".
  static GeneratorLabel parse_label(const std::string& text);

 private:
  std::vector<GeneratorLabel> m_labels;
  std::vector<int> m_conjugate;  // -1 when unpaired
};

using RegistryPtr = std::shared_ptr<const GeneratorRegistry>;

/// True when both polynomial operands may be combined: same object or
/// identical content.
bool same_registry(const RegistryPtr& a, const RegistryPtr& b);

}  // namespace grasp
