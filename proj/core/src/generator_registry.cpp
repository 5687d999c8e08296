#include "grasp/generator_registry.hpp"

#include <algorithm>
#include <cctype>

namespace grasp {

bool is_starred(Species s) {
  switch (s) {
    case Species::GStar:
    case Species::HStar:
    case Species::KStar:
      return true;
    default:
      return false;
  }
}

Species star_of(Species s) {
  switch (s) {
    case Species::G:
      return Species::GStar;
    case Species::H:
      return Species::HStar;
    case Species::K:
      return Species::KStar;
    default:
      return s;
  }
}

Species base_of(Species s) {
  switch (s) {
    case Species::GStar:
      return Species::G;
    case Species::HStar:
      return Species::H;
    case Species::KStar:
      return Species::K;
    default:
      return s;
  }
}

char species_char(Species s) {
  switch (base_of(s)) {
    case Species::G:
      return 'g';
    case Species::H:
      return 'h';
    default:
      return 'k';
  }
}

std::string GeneratorLabel::str() const {
  std::string out;
  out += species_char(species);
  out += std::to_string(mode);
  if (is_starred(species)) out += '*';
  return out;
}

int GeneratorRegistry::add_generator(const GeneratorLabel& label) {
  if (m_labels.size() >= kMaxGenerators)
    throw RegistryError("registry is full (max 64 generators)");
  if (index_of(label.species, label.mode) >= 0)
    throw RegistryError("duplicate generator label " + label.str());

  const int index = static_cast<int>(m_labels.size());
  m_labels.push_back(label);
  m_conjugate.push_back(-1);

  const Species partner =
      is_starred(label.species) ? base_of(label.species) : star_of(label.species);
  const int partner_index = index_of(partner, label.mode);
  if (partner_index >= 0) {
    m_conjugate[index] = partner_index;
    m_conjugate[partner_index] = index;
  }
  return index;
}

int GeneratorRegistry::add_conjugate_pair(Species base, int mode) {
  const int index = add_generator({base, mode});
  add_generator({star_of(base), mode});
  return index;
}

const GeneratorLabel& GeneratorRegistry::label(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= m_labels.size())
    throw RegistryError("generator index " + std::to_string(index) +
                        " outside registry");
  return m_labels[index];
}

bool GeneratorRegistry::has_conjugate(int index) const {
  label(index);
  return m_conjugate[index] >= 0;
}

int GeneratorRegistry::conjugate_index(int index) const {
  label(index);
  if (m_conjugate[index] < 0)
    throw PairingError("generator " + m_labels[index].str() +
                       " has no conjugate partner");
  return m_conjugate[index];
}

int GeneratorRegistry::index_of(Species species, int mode) const {
  for (std::size_t i = 0; i < m_labels.size(); ++i)
    if (m_labels[i].species == species && m_labels[i].mode == mode)
      return static_cast<int>(i);
  return -1;
}

std::vector<std::pair<int, int>> GeneratorRegistry::family_pairs(Species base) const {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> modes;
  for (const auto& l : m_labels)
    if (l.species == base_of(base)) modes.push_back(l.mode);
  std::sort(modes.begin(), modes.end());
  for (int m : modes) {
    const int x = index_of(base_of(base), m);
    const int xs = index_of(star_of(base_of(base)), m);
    if (xs < 0)
      throw PairingError("family " + std::string(1, species_char(base)) +
                         " is missing a starred partner for mode " +
                         std::to_string(m));
    pairs.emplace_back(x, xs);
  }
  return pairs;
}

std::uint64_t GeneratorRegistry::family_mask(Species base, bool starred_only) const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m_labels.size(); ++i) {
    if (base_of(m_labels[i].species) != base_of(base)) continue;
    if (starred_only && !is_starred(m_labels[i].species)) continue;
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::shared_ptr<const GeneratorRegistry> GeneratorRegistry::fermionic_modes(
    int n_modes, std::initializer_list<Species> base_families) {
  auto reg = std::make_shared<GeneratorRegistry>();
  for (Species family : base_families)
    for (int mode = 1; mode <= n_modes; ++mode)
      reg->add_conjugate_pair(base_of(family), mode);
  return reg;
}

GeneratorLabel GeneratorRegistry::parse_label(const std::string& text) {
  if (text.size() < 2) throw RegistryError("malformed generator label '" + text + "'");
  Species base;
  switch (text[0]) {
    case 'g':
      base = Species::G;
      break;
    case 'h':
      base = Species::H;
      break;
    case 'k':
      base = Species::K;
      break;
    default:
      throw RegistryError("malformed generator label '" + text + "'");
  }
  std::size_t end = text.size();
  bool starred = false;
  if (text.back() == '*') {
    starred = true;
    --end;
  }
  if (end < 2) throw RegistryError("malformed generator label '" + text + "'");
  int mode = 0;
  for (std::size_t i = 1; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw RegistryError("malformed generator label '" + text + "'");
    mode = mode * 10 + (text[i] - '0');
  }
  return {starred ? star_of(base) : base, mode};
}

bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace grasp
