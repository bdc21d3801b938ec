#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace diamond {

// One tensor factor of the composite space. `weights[l]` is the excitation
// carried by level l of this factor: the Fock number for a boson mode,
// (0,1,1,1) for a diamond atom (the upper level is reached by trading a
// classical-drive quantum for no cavity photon, so it carries one countable
// excitation, which is what makes the Hamiltonian commute with the total).
struct Factor {
    std::string label;
    int dim = 0;
    std::vector<int> weights;
};

// Composite Hilbert space over an ordered factor list, optionally restricted
// to one total-excitation sector. Basis enumeration is lexicographic over
// factor indices with factor 0 most significant (modes first, then atoms,
// Fock index ascending), matching the Kronecker-product convention.
class HilbertSpace {
  public:
    HilbertSpace() = default;
    explicit HilbertSpace(std::vector<Factor> factors);

    // Two boson modes labelled "a" and "b", each with levels 0..cutoff.
    static HilbertSpace two_modes(int cutoff);
    // Two boson modes followed by n four-level diamond atoms.
    static HilbertSpace diamond(int n_atoms, int cutoff);

    // Same factors, basis restricted to total excitation == sector.
    HilbertSpace restricted(int sector) const;

    const std::vector<Factor>& factors() const { return impl_->factors; }
    int num_factors() const { return static_cast<int>(impl_->factors.size()); }
    long total_dim() const { return impl_->total_dim; }  // product of factor dims
    long dim() const;                                    // basis size (sector-aware)
    std::optional<int> excitation_sector() const { return impl_->sector; }

    long stride(int factor) const { return impl_->strides[factor]; }

    // Full composite index of basis state b (identity map when unrestricted).
    long full_index(long b) const;
    // Basis position of a full composite index, if present.
    std::optional<long> find_full(long full) const;

    int level_at(long full_index, int factor) const;
    int weight_of_full(long full_index) const;

    bool same_space(const HilbertSpace& other) const { return impl_ == other.impl_; }
    bool compatible(const HilbertSpace& other) const;

  private:
    struct Impl {
        std::vector<Factor> factors;
        std::vector<long> strides;
        long total_dim = 1;
        std::optional<int> sector;
        std::vector<long> members;  // sorted full indices, only when sector is set
    };
    std::shared_ptr<const Impl> impl_;
};

}  // namespace diamond
