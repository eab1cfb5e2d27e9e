#include "sullivan/genset.hpp"

#include <algorithm>

namespace sullivan {

GenSet::GenSet(std::vector<Generator> gens) {
    auto data = std::make_shared<Data>();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree < 1)
            throw DegreeError("generator '" + gens[i].name + "' must have degree >= 1");
        if (!data->index.emplace(gens[i].name, i).second)
            throw Error("duplicate generator name '" + gens[i].name + "'");
    }
    data->gens = std::move(gens);
    data_ = std::move(data);
}

GenSet GenSet::concat(const GenSet& a, const GenSet& b) {
    std::vector<Generator> gens;
    if (a.valid()) gens = a.gens();
    if (b.valid()) gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return GenSet(std::move(gens));
}

int GenSet::index_of(const std::string& name) const {
    if (!data_) return -1;
    auto it = data_->index.find(name);
    return it == data_->index.end() ? -1 : static_cast<int>(it->second);
}

std::vector<std::size_t> GenSet::indices_of_degree(int degree) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (gen(i).degree == degree) out.push_back(i);
    return out;
}

int GenSet::max_degree() const {
    int m = 0;
    for (std::size_t i = 0; i < size(); ++i) m = std::max(m, gen(i).degree);
    return m;
}

bool GenSet::has_degree_one() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (gen(i).degree == 1) return true;
    return false;
}

bool GenSet::same_as(const GenSet& other) const {
    if (data_ == other.data_) return true;
    if (!data_ || !other.data_) return false;
    return data_->gens == other.data_->gens;
}

}  // namespace sullivan
