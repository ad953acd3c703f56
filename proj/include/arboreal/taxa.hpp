#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace arboreal {

// A subset of a TaxonSet, stored as a bitmask over taxon positions.
class TaxonSubset {
 public:
  static constexpr std::size_t kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr TaxonSubset() = default;
  constexpr explicit TaxonSubset(std::uint64_t bits) : bits_(bits) {}

  static constexpr TaxonSubset singleton(std::size_t i) { return TaxonSubset(std::uint64_t{1} << i); }
  static constexpr TaxonSubset first(std::size_t n) {
    return TaxonSubset(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t lowest() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr TaxonSubset with(std::size_t i) const { return TaxonSubset(bits_ | (std::uint64_t{1} << i)); }
  constexpr TaxonSubset without(std::size_t i) const { return TaxonSubset(bits_ & ~(std::uint64_t{1} << i)); }

  constexpr bool is_subset_of(TaxonSubset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool is_proper_subset_of(TaxonSubset o) const { return is_subset_of(o) && bits_ != o.bits_; }
  constexpr bool intersects(TaxonSubset o) const { return (bits_ & o.bits_) != 0; }

  constexpr TaxonSubset operator|(TaxonSubset o) const { return TaxonSubset(bits_ | o.bits_); }
  constexpr TaxonSubset operator&(TaxonSubset o) const { return TaxonSubset(bits_ & o.bits_); }
  constexpr TaxonSubset operator-(TaxonSubset o) const { return TaxonSubset(bits_ & ~o.bits_); }
  TaxonSubset& operator|=(TaxonSubset o) {
    bits_ |= o.bits_;
    return *this;
  }
  TaxonSubset& operator&=(TaxonSubset o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(const TaxonSubset&) const = default;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<std::size_t> members() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Canonical order on subsets: by size, then lexicographically on the sorted
// sequence of taxon positions.
constexpr bool canonical_less(TaxonSubset a, TaxonSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  const std::uint64_t diff = a.bits() ^ b.bits();
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(TaxonSubset a, TaxonSubset b) const { return canonical_less(a, b); }
};

// The ordered taxon set X. The order is fixed at construction and used for all
// deterministic tie-breaking. At most TaxonSubset::kCapacity taxa.
class TaxonSet {
 public:
  TaxonSet() = default;
  explicit TaxonSet(std::vector<std::string> names);

  // Taxa named "1", "2", ..., "n".
  static TaxonSet numbered(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws Error(UnknownTaxon) when absent.
  std::size_t index_of(std::string_view name) const;

  TaxonSubset all() const { return TaxonSubset::first(size()); }

  // Concatenated taxon names in set order, e.g. "1234".
  std::string subset_string(TaxonSubset s) const;
  std::vector<std::string> subset_names(TaxonSubset s) const;
  TaxonSubset subset_of(const std::vector<std::string>& names) const;

  // The taxa of `s`, in this set's order.
  TaxonSet restricted(TaxonSubset s) const;

  bool operator==(const TaxonSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace arboreal
