#include "cuntz/element.hpp"

namespace cuntz {

Element operator+(const Element& a, const Element& b) {
    if (a.N() != b.N()) throw InputError("Element addition: mismatched branching degree");
    Element out = a;
    for (const auto& [w, c] : b.terms()) out.add_term(w, c);
    return out;
}

Element operator-(const Element& a, const Element& b) {
    if (a.N() != b.N()) throw InputError("Element subtraction: mismatched branching degree");
    Element out = a;
    for (const auto& [w, c] : b.terms()) out.add_term(w, -c);
    return out;
}

Element operator*(Cx scalar, const Element& a) {
    Element out(a.N());
    if (scalar == Cx(0.0, 0.0)) return out;
    for (const auto& [w, c] : a.terms()) out.add_term(w, scalar * c);
    return out;
}

Element operator*(const Element& a, const Element& b) {
    if (a.N() != b.N()) throw InputError("Element product: mismatched branching degree");
    Element out(a.N());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            if (auto w = word_multiply(wa, wb)) out.add_term(*w, ca * cb);
        }
    }
    return out;
}

Element element_adjoint(const Element& a) {
    Element out(a.N());
    for (const auto& [w, c] : a.terms()) out.add_term(adjoint(w), std::conj(c));
    return out;
}

Element sharp_map(const Element& a) {
    Element out(a.N());
    for (const auto& [w, c] : a.terms()) out.add_term(sharp(w), c);
    return out;
}

Element fourier_coefficient(const Element& a, long long k) {
    if (k == 0) {
        Element out(a.N());
        for (const auto& [w, c] : a.terms())
            if (w.is_balanced()) out.add_term(w, c);
        return out;
    }
    if (k > 0) return fourier_coefficient(a * Element::generator_adjoint(a.N(), 0), k - 1);
    return fourier_coefficient(Element::generator(a.N(), 0) * a, k + 1);
}

} // namespace cuntz
