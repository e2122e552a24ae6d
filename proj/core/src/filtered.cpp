#include "khicalc/filtered.hpp"

#include <algorithm>

#include "khicalc/error.hpp"

namespace khicalc {

FilteredComplex::FilteredComplex(Matrix differential, std::vector<int> levels)
    : d_(std::move(differential)), levels_(std::move(levels))
{
    if (d_.rows() != d_.cols() || d_.rows() != levels_.size())
        throw Error(Errc::shape_mismatch, "FilteredComplex: differential must be square over the basis");
    if (!(d_ * d_).is_zero())
        throw std::invalid_argument("FilteredComplex: differential does not square to zero");
    for (std::size_t i = 0; i < levels_.size(); ++i)
        for (std::size_t j = 0; j < levels_.size(); ++j)
            if (!d_.at(i, j).is_zero() && levels_[i] < levels_[j])
                throw Error(Errc::not_subcomplex,
                            "FilteredComplex: differential drops the filtration level");
}

int FilteredComplex::min_level() const
{
    if (levels_.empty())
        return 0;
    return *std::min_element(levels_.begin(), levels_.end());
}

int FilteredComplex::max_level() const
{
    if (levels_.empty())
        return 0;
    return *std::max_element(levels_.begin(), levels_.end());
}

std::vector<std::size_t> FilteredComplex::filtration_indices(int s) const
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i] >= s)
            idx.push_back(i);
    return idx;
}

std::size_t FilteredComplex::homology_dim() const
{
    return dim() - 2 * d_.rank();
}

} // namespace khicalc
