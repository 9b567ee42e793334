#include "cheb/perm.hpp"

namespace cheb {

Permutation::Permutation(std::vector<uint32_t> img) : images(std::move(img)) {
    if (images.empty()) throw Error("permutation must have degree >= 1");
    std::vector<bool> seen(images.size(), false);
    for (uint32_t v : images) {
        if (v >= images.size() || seen[v])
            throw Error("image array is not a bijection");
        seen[v] = true;
    }
}

bool Permutation::is_identity() const {
    for (uint32_t i = 0; i < degree(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation identity_perm(uint32_t degree) {
    std::vector<uint32_t> img(degree);
    for (uint32_t i = 0; i < degree; ++i) img[i] = i;
    return Permutation(std::move(img));
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw Error("degree mismatch in composition");
    std::vector<uint32_t> img(a.degree());
    for (uint32_t i = 0; i < a.degree(); ++i) img[i] = a.images[b.images[i]];
    Permutation out;
    out.images = std::move(img);  // bijection by construction
    return out;
}

Permutation perm_inverse(const Permutation& a) {
    std::vector<uint32_t> img(a.degree());
    for (uint32_t i = 0; i < a.degree(); ++i) img[a.images[i]] = i;
    Permutation out;
    out.images = std::move(img);
    return out;
}

Permutation perm_from_cycles(uint32_t degree,
                             const std::vector<std::vector<uint32_t>>& cycles) {
    Permutation p = identity_perm(degree);
    for (const auto& cyc : cycles) {
        for (size_t j = 0; j < cyc.size(); ++j) {
            uint32_t from = cyc[j], to = cyc[(j + 1) % cyc.size()];
            if (from >= degree || to >= degree) throw Error("cycle point out of range");
            p.images[from] = to;
        }
    }
    return Permutation(p.images);  // re-validate
}

}  // namespace cheb
