#include "sullivan/render.hpp"

#include <sstream>

namespace sullivan {

std::string render_dual(const RationalVector& v, const std::vector<std::size_t>& ambient_gens,
                        const GenSet& gens) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1) os << to_string(c) << "*";
        os << gens.name(ambient_gens[i]) << "*";
    }
    if (first) return "0";
    return os.str();
}

std::string render_classes(const DualClasses& classes, const GenSet& gens) {
    auto reps = classes.representatives();
    if (reps.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < reps.size(); ++i)
        os << (i ? ", " : "") << render_dual(reps[i], classes.ambient_gens, gens);
    return os.str();
}

std::string render_derivation(const PhiDerivation& theta) {
    const auto& src = theta.along().source().gens();
    std::ostringstream os;
    bool first = true;
    for (std::size_t g = 0; g < src.size(); ++g) {
        const auto& value = theta.value_on(g);
        if (value.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << src.name(g) << ", " << value.to_string() << ")";
    }
    if (first) return "0";
    return os.str();
}

}  // namespace sullivan
