#include "gck/sha_parity.hpp"

#include "gck/errors.hpp"

namespace gck {

SquareClass square_class_product(SquareClass a, SquareClass b) {
    return a == b ? SquareClass::one : SquareClass::two;
}

SquareClass mu_place(const LocalDeficiencyData& data) {
    long deficient_pairs = 0;
    for (const ComponentDeficiency& comp : data.components) {
        if (comp.places_above.empty())
            throw EmptyPlacesAbove("component '" + comp.label + "' at place '" + data.place +
                                   "' lists no places above");
        for (const PlaceAbove& w : comp.places_above)
            if (w.deficient) ++deficient_pairs;
    }
    return deficient_pairs % 2 == 0 ? SquareClass::one : SquareClass::two;
}

SquareClass sha_two_class(const std::vector<LocalDeficiencyData>& places) {
    SquareClass total = SquareClass::one;
    for (const LocalDeficiencyData& d : places) total = square_class_product(total, mu_place(d));
    return total;
}

std::string square_class_name(SquareClass c) { return c == SquareClass::one ? "1" : "2"; }

} // namespace gck
