#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "marf/signature.hpp"

namespace marf {

// An m-Arf function stored by its values on a standard basis.
// alpha[i] = sigma(a_i), beta[i] = sigma(b_i), gamma[j] = sigma(c_{g+j}).
struct ArfFunction {
  Signature signature;
  int m = 1;
  std::vector<int> alpha;
  std::vector<int> beta;
  std::vector<int> gamma;

  // interleaved (alpha_1, beta_1, ..., alpha_g, beta_g)
  std::vector<int> tuple() const;

  friend bool operator==(const ArfFunction&, const ArfFunction&) = default;
};

ArfFunction new_arf(const Signature& sig, int m, const std::vector<int>& alphas,
                    const std::vector<int>& betas);
ArfFunction from_tuple(const Signature& sig, int m, const std::vector<int>& tuple);

int arf_invariant(const ArfFunction& f);
// same invariant from an interleaved tuple, no validation
int arf_invariant(const Signature& sig, int m, std::span<const int> tuple);
ArfType type_of(const ArfFunction& f);

// Lazily walks all m^{2g} functions in lexicographic order of tuple().
class ArfRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ArfFunction;
    using difference_type = std::ptrdiff_t;
    using pointer = const ArfFunction*;
    using reference = const ArfFunction&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || index_ == o.index_); }

   private:
    friend class ArfRange;
    ArfFunction current_;
    std::uint64_t index_ = 0;
    bool done_ = true;
  };

  ArfRange(Signature sig, int m);

  iterator begin() const;
  iterator end() const { return iterator{}; }
  std::uint64_t size() const { return size_; }

 private:
  Signature sig_;
  int m_;
  std::uint64_t size_;
  std::vector<int> gamma_;
};

// throws NotLiftable
ArfRange enumerate_all(const Signature& sig, int m);

}  // namespace marf
