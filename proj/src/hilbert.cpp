#include "diamond/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diamond {

HilbertSpace::HilbertSpace(std::vector<Factor> factors) {
    if (factors.empty()) throw std::invalid_argument("HilbertSpace: no factors");
    auto impl = std::make_shared<Impl>();
    impl->factors = std::move(factors);
    impl->strides.assign(impl->factors.size(), 1);
    for (auto& f : impl->factors) {
        if (f.dim <= 0) throw std::invalid_argument("HilbertSpace: factor dim must be positive");
        if (static_cast<int>(f.weights.size()) != f.dim)
            throw std::invalid_argument("HilbertSpace: weights size mismatch for " + f.label);
    }
    for (int i = static_cast<int>(impl->factors.size()) - 2; i >= 0; --i)
        impl->strides[i] = impl->strides[i + 1] * impl->factors[i + 1].dim;
    impl->total_dim = impl->strides[0] * impl->factors[0].dim;
    impl_ = std::move(impl);
}

HilbertSpace HilbertSpace::two_modes(int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("two_modes: negative cutoff");
    std::vector<int> w(cutoff + 1);
    std::iota(w.begin(), w.end(), 0);
    return HilbertSpace({{"a", cutoff + 1, w}, {"b", cutoff + 1, w}});
}

HilbertSpace HilbertSpace::diamond(int n_atoms, int cutoff) {
    if (n_atoms < 1) throw std::invalid_argument("diamond: need at least one atom");
    std::vector<int> w(cutoff + 1);
    std::iota(w.begin(), w.end(), 0);
    std::vector<Factor> fs = {{"a", cutoff + 1, w}, {"b", cutoff + 1, w}};
    for (int k = 0; k < n_atoms; ++k)
        fs.push_back({"atom" + std::to_string(k + 1), 4, {0, 1, 1, 1}});
    return HilbertSpace(std::move(fs));
}

HilbertSpace HilbertSpace::restricted(int sector) const {
    if (sector < 0) throw std::invalid_argument("restricted: negative sector");
    HilbertSpace out;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->sector = sector;
    impl->members.clear();
    for (long i = 0; i < impl_->total_dim; ++i)
        if (weight_of_full(i) == sector) impl->members.push_back(i);
    if (impl->members.empty())
        throw std::invalid_argument("restricted: sector " + std::to_string(sector) +
                                    " is empty for this space");
    out.impl_ = std::move(impl);
    return out;
}

long HilbertSpace::dim() const {
    return impl_->sector ? static_cast<long>(impl_->members.size()) : impl_->total_dim;
}

long HilbertSpace::full_index(long b) const {
    return impl_->sector ? impl_->members[b] : b;
}

std::optional<long> HilbertSpace::find_full(long full) const {
    if (!impl_->sector) return full;
    auto it = std::lower_bound(impl_->members.begin(), impl_->members.end(), full);
    if (it == impl_->members.end() || *it != full) return std::nullopt;
    return static_cast<long>(it - impl_->members.begin());
}

int HilbertSpace::level_at(long full_index, int factor) const {
    return static_cast<int>((full_index / impl_->strides[factor]) % impl_->factors[factor].dim);
}

int HilbertSpace::weight_of_full(long full_index) const {
    int w = 0;
    for (int f = 0; f < num_factors(); ++f)
        w += impl_->factors[f].weights[level_at(full_index, f)];
    return w;
}

bool HilbertSpace::compatible(const HilbertSpace& other) const {
    if (impl_ == other.impl_) return true;
    if (impl_->sector != other.impl_->sector) return false;
    if (impl_->factors.size() != other.impl_->factors.size()) return false;
    for (size_t i = 0; i < impl_->factors.size(); ++i)
        if (impl_->factors[i].dim != other.impl_->factors[i].dim ||
            impl_->factors[i].weights != other.impl_->factors[i].weights)
            return false;
    return true;
}

}  // namespace diamond
