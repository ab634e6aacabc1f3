#ifndef MODORDER_INDEX_SET_HPP_
#define MODORDER_INDEX_SET_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace modorder {

  //! Dense element index into the Cayley tables of a ring or module.
  using Index = std::uint32_t;

  //! Sorted, duplicate-free set of indices drawn from [0, universe).
  //!
  //! Used for annihilators, principal ideals, and submodules alike; equality
  //! and inclusion are plain set operations.
  class IndexSet {
   public:
    IndexSet() = default;

    explicit IndexSet(std::size_t universe) : universe_(universe) {}

    IndexSet(std::size_t universe, std::vector<Index> members)
        : universe_(universe), members_(std::move(members)) {
      std::sort(members_.begin(), members_.end());
      members_.erase(std::unique(members_.begin(), members_.end()),
                     members_.end());
    }

    IndexSet(std::size_t universe, std::initializer_list<Index> members)
        : IndexSet(universe, std::vector<Index>(members)) {}

    static IndexSet full(std::size_t universe) {
      std::vector<Index> all(universe);
      std::iota(all.begin(), all.end(), Index{0});
      IndexSet s(universe);
      s.members_ = std::move(all);
      return s;
    }

    static IndexSet from_mask(std::vector<bool> const& mask) {
      IndexSet s(mask.size());
      for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) {
          s.members_.push_back(static_cast<Index>(i));
        }
      }
      return s;
    }

    std::size_t universe() const noexcept {
      return universe_;
    }
    std::size_t size() const noexcept {
      return members_.size();
    }
    bool empty() const noexcept {
      return members_.empty();
    }
    std::vector<Index> const& members() const noexcept {
      return members_;
    }
    auto begin() const noexcept {
      return members_.begin();
    }
    auto end() const noexcept {
      return members_.end();
    }

    bool contains(Index i) const {
      return std::binary_search(members_.begin(), members_.end(), i);
    }

    bool is_subset_of(IndexSet const& other) const {
      return std::includes(other.members_.begin(),
                           other.members_.end(),
                           members_.begin(),
                           members_.end());
    }

    IndexSet intersect(IndexSet const& other) const {
      IndexSet out(universe_);
      std::set_intersection(members_.begin(),
                            members_.end(),
                            other.members_.begin(),
                            other.members_.end(),
                            std::back_inserter(out.members_));
      return out;
    }

    std::string to_string() const {
      std::string out = "{";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i != 0) {
          out += ",";
        }
        out += std::to_string(members_[i]);
      }
      return out + "}";
    }

    friend bool operator==(IndexSet const&, IndexSet const&) = default;

   private:
    std::size_t        universe_ = 0;
    std::vector<Index> members_;
  };

}  // namespace modorder

#endif  // MODORDER_INDEX_SET_HPP_
