#pragma once

#include <string>
#include <vector>

namespace gck {

/*
 * Deficiency bookkeeping for the 2-part of Sha modulo squares. Whether each
 * geometrically connected piece is deficient at each place above is an input
 * flag; the arithmetic here is pure parity: mu contributes a factor 2 per
 * deficient (component, place-above) pair, reduced modulo squares.
 */
struct PlaceAbove {
    std::string label;
    bool deficient = false;
};

struct ComponentDeficiency {
    std::string label;
    std::vector<PlaceAbove> places_above; // nonempty: local algebras split somewhere
};

struct LocalDeficiencyData {
    std::string place;
    std::vector<ComponentDeficiency> components;
};

// The class of 2^k in Q^x / Q^x2: only the parity of k survives.
enum class SquareClass { one = 1, two = 2 };

SquareClass square_class_product(SquareClass a, SquareClass b);

// mu_v(X) = prod over components, places above: 2 if deficient.
// Throws EmptyPlacesAbove when a component lists no places.
SquareClass mu_place(const LocalDeficiencyData& data);

// #Sha_0[2^inf] mod squares = product of mu_place over all places.
SquareClass sha_two_class(const std::vector<LocalDeficiencyData>& places);

std::string square_class_name(SquareClass c);

} // namespace gck
