#include "cheb/group.hpp"

#include <json.hpp>

#include <unordered_map>

namespace cheb {

namespace {

using PermIndex = std::unordered_map<Permutation, uint32_t, PermHash>;

PermIndex index_map(const std::vector<Permutation>& elements) {
    PermIndex m;
    m.reserve(elements.size() * 2);
    for (uint32_t i = 0; i < elements.size(); ++i) m.emplace(elements[i], i);
    return m;
}

long mod_pow(long base, long e, long m) {
    long r = 1 % m;
    base %= m;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
    }
    return r;
}

long mod_inv(long a, long p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(long p, const std::string& family) {
    if (!small_prime(p)) throw Error(family + " requires a prime p, got " + std::to_string(p));
}

long primitive_root_mod(long p) {
    if (p == 2) return 1;
    std::vector<long> prime_factors;
    long m = p - 1;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw Error("no primitive root found");  // unreachable for prime p
}

}  // namespace

uint32_t PermGroup::index_of(const Permutation& p) const {
    for (uint32_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return i;
    throw Error("element not in group");
}

std::vector<Permutation> enumerate_elements(uint32_t degree,
                                            const std::vector<Permutation>& gens,
                                            uint64_t cap) {
    if (cap < 1) throw Error("enumeration cap must be >= 1");
    for (const auto& g : gens)
        if (g.degree() != degree) throw Error("generator degree mismatch");
    std::vector<Permutation> elements{identity_perm(degree)};
    PermIndex seen = index_map(elements);
    for (size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : gens) {
            Permutation next = perm_compose(elements[i], g);
            if (seen.emplace(next, static_cast<uint32_t>(elements.size())).second) {
                elements.push_back(std::move(next));
                if (elements.size() > cap)
                    throw Error("order cap exceeded (cap=" + std::to_string(cap) + ")");
            }
        }
    }
    return elements;
}

PermGroup group_from_generators(uint32_t degree, const std::vector<Permutation>& gens,
                                uint64_t cap) {
    PermGroup G;
    G.degree = degree;
    G.generators = gens;
    G.elements = enumerate_elements(degree, gens, cap);
    return G;
}

ConjugacyTable conjugacy_classes(const PermGroup& G) {
    if (G.elements.empty()) throw Error("group not enumerated");
    PermIndex idx = index_map(G.elements);
    std::vector<Permutation> gen_invs;
    gen_invs.reserve(G.generators.size());
    for (const auto& g : G.generators) gen_invs.push_back(perm_inverse(g));

    ConjugacyTable T;
    T.class_of.assign(G.elements.size(), UINT32_MAX);
    for (uint32_t start = 0; start < G.elements.size(); ++start) {
        if (T.class_of[start] != UINT32_MAX) continue;
        uint32_t cls = static_cast<uint32_t>(T.class_reps.size());
        T.class_reps.push_back(start);
        T.class_sizes.push_back(0);
        std::vector<uint32_t> queue{start};
        T.class_of[start] = cls;
        while (!queue.empty()) {
            uint32_t x = queue.back();
            queue.pop_back();
            ++T.class_sizes[cls];
            for (size_t gi = 0; gi < G.generators.size(); ++gi) {
                Permutation y = perm_compose(perm_compose(G.generators[gi], G.elements[x]),
                                             gen_invs[gi]);
                uint32_t yi = idx.at(y);
                if (T.class_of[yi] == UINT32_MAX) {
                    T.class_of[yi] = cls;
                    queue.push_back(yi);
                }
            }
        }
    }
    return T;
}

GroupTables build_tables(const PermGroup& G) {
    GroupTables T;
    T.order = G.order();
    const uint64_t n = T.order;
    PermIndex idx = index_map(G.elements);
    T.mult.resize(n * n);
    T.inv.resize(n);
    for (uint64_t i = 0; i < n; ++i) T.inv[i] = idx.at(perm_inverse(G.elements[i]));

    // Filling the table with one composition per cell is O(n^2 * degree).
    // Instead decompose every element as parent*generator along a BFS from
    // the identity; then row entries follow from earlier entries in O(1):
    // a*(p*g) = (a*p)*g needs only the precomputed right-multiplication by g.
    uint32_t id = 0;
    while (id < n && !G.elements[id].is_identity()) ++id;
    if (id >= n) throw Error("group tables: identity element missing");
    std::vector<std::vector<uint32_t>> rightmul(G.generators.size(),
                                                std::vector<uint32_t>(n));
    for (size_t k = 0; k < G.generators.size(); ++k)
        for (uint64_t x = 0; x < n; ++x)
            rightmul[k][x] = idx.at(perm_compose(G.elements[x], G.generators[k]));
    std::vector<uint32_t> order{id};
    std::vector<uint32_t> parent(n, UINT32_MAX), via(n, 0);
    parent[id] = id;
    for (size_t qi = 0; qi < order.size(); ++qi)
        for (size_t k = 0; k < G.generators.size(); ++k) {
            uint32_t y = rightmul[k][order[qi]];
            if (parent[y] == UINT32_MAX) {
                parent[y] = order[qi];
                via[y] = static_cast<uint32_t>(k);
                order.push_back(y);
            }
        }
    if (order.size() != n) throw Error("group tables: generators do not span the group");
    for (uint64_t i = 0; i < n; ++i) {
        uint32_t* row = &T.mult[i * n];
        row[id] = static_cast<uint32_t>(i);
        for (size_t qi = 1; qi < order.size(); ++qi) {
            uint32_t y = order[qi];
            row[y] = rightmul[via[y]][row[parent[y]]];
        }
    }
    return T;
}

PermGroup coset_action(const PermGroup& G, const std::vector<uint32_t>& N, uint64_t cap) {
    if (N.empty()) throw Error("subgroup must contain the identity");
    PermIndex idx = index_map(G.elements);
    std::vector<bool> in_N(G.order(), false);
    for (uint32_t i : N) {
        if (i >= G.order()) throw Error("subgroup index out of range");
        in_N[i] = true;
    }
    if (!in_N[0]) throw Error("subgroup must contain the identity");
    for (uint32_t a : N)
        for (uint32_t b : N)
            if (!in_N[idx.at(perm_compose(G.elements[a], G.elements[b]))])
                throw Error("given set is not a subgroup");
    for (const auto& g : G.generators) {
        Permutation ginv = perm_inverse(g);
        for (uint32_t a : N)
            if (!in_N[idx.at(perm_compose(perm_compose(g, G.elements[a]), ginv))])
                throw Error("subgroup is not normal");
    }

    // left cosets xN, labelled in first-element order
    std::vector<uint32_t> coset_of(G.order(), UINT32_MAX);
    std::vector<uint32_t> reps;
    for (uint32_t x = 0; x < G.order(); ++x) {
        if (coset_of[x] != UINT32_MAX) continue;
        uint32_t c = static_cast<uint32_t>(reps.size());
        reps.push_back(x);
        for (uint32_t n : N)
            coset_of[idx.at(perm_compose(G.elements[x], G.elements[n]))] = c;
    }

    std::vector<Permutation> images;
    for (const auto& g : G.generators) {
        std::vector<uint32_t> img(reps.size());
        for (uint32_t c = 0; c < reps.size(); ++c)
            img[c] = coset_of[idx.at(perm_compose(g, G.elements[reps[c]]))];
        images.emplace_back(std::move(img));
    }
    PermGroup Q = group_from_generators(static_cast<uint32_t>(reps.size()), images, cap);
    if (Q.order() * N.size() != G.order()) throw Error("coset action order mismatch");
    return Q;
}

PermGroup direct_product(const PermGroup& G1, const PermGroup& G2, uint64_t cap) {
    uint32_t d = G1.degree + G2.degree;
    std::vector<Permutation> gens;
    for (const auto& g : G1.generators) {
        Permutation e = identity_perm(d);
        for (uint32_t i = 0; i < G1.degree; ++i) e.images[i] = g.images[i];
        gens.push_back(std::move(e));
    }
    for (const auto& g : G2.generators) {
        Permutation e = identity_perm(d);
        for (uint32_t i = 0; i < G2.degree; ++i) e.images[G1.degree + i] = G1.degree + g.images[i];
        gens.push_back(std::move(e));
    }
    PermGroup P = group_from_generators(d, gens, cap);
    if (P.order() != G1.order() * G2.order()) throw Error("direct product order mismatch");
    return P;
}

// ---- named families -------------------------------------------------------

PermGroup cyclic_group(long n, uint64_t cap) {
    if (n < 1) throw Error("cyclic(n) needs n >= 1");
    if (n == 1) return group_from_generators(1, {}, cap);
    std::vector<uint32_t> cyc(n);
    for (long i = 0; i < n; ++i) cyc[i] = static_cast<uint32_t>(i);
    return group_from_generators(static_cast<uint32_t>(n),
                                 {perm_from_cycles(static_cast<uint32_t>(n), {cyc})}, cap);
}

PermGroup dihedral_group(long order2n, uint64_t cap) {
    if (order2n < 6 || order2n % 2 != 0)
        throw Error("dihedral(2n) needs an even order >= 6");
    long n = order2n / 2;
    uint32_t d = static_cast<uint32_t>(n);
    std::vector<uint32_t> rot(d), flip(d);
    for (long i = 0; i < n; ++i) {
        rot[i] = static_cast<uint32_t>((i + 1) % n);
        flip[i] = static_cast<uint32_t>((n - i) % n);
    }
    return group_from_generators(d, {Permutation(rot), Permutation(flip)}, cap);
}

PermGroup symmetric_group(long n, uint64_t cap) {
    if (n < 1) throw Error("symmetric(n) needs n >= 1");
    uint32_t d = static_cast<uint32_t>(n);
    if (n == 1) return group_from_generators(1, {}, cap);
    std::vector<Permutation> gens{perm_from_cycles(d, {{0, 1}})};
    if (n > 2) {
        std::vector<uint32_t> cyc(n);
        for (long i = 0; i < n; ++i) cyc[i] = static_cast<uint32_t>(i);
        gens.push_back(perm_from_cycles(d, {cyc}));
    }
    return group_from_generators(d, gens, cap);
}

PermGroup alternating_group(long n, uint64_t cap) {
    if (n < 1) throw Error("alternating(n) needs n >= 1");
    uint32_t d = static_cast<uint32_t>(n);
    if (n <= 2) return group_from_generators(d, {}, cap);
    std::vector<Permutation> gens{perm_from_cycles(d, {{0, 1, 2}})};
    if (n > 3) {
        std::vector<uint32_t> cyc;
        // a full cycle when n is odd, an (n-1)-cycle fixing 0 when n is even:
        // either way an even permutation
        for (long i = (n % 2 == 0 ? 1 : 0); i < n; ++i) cyc.push_back(static_cast<uint32_t>(i));
        gens.push_back(perm_from_cycles(d, {cyc}));
    }
    return group_from_generators(d, gens, cap);
}

PermGroup abelian_group(const std::vector<long>& factors, uint64_t cap) {
    if (factors.empty()) throw Error("abelian(factors) needs at least one factor");
    uint32_t degree = 0;
    for (long f : factors) {
        if (f < 1) throw Error("abelian factor must be >= 1");
        degree += static_cast<uint32_t>(f);
    }
    std::vector<Permutation> gens;
    uint32_t base = 0;
    for (long f : factors) {
        if (f > 1) {
            std::vector<uint32_t> cyc(f);
            for (long i = 0; i < f; ++i) cyc[i] = base + static_cast<uint32_t>(i);
            gens.push_back(perm_from_cycles(degree, {cyc}));
        }
        base += static_cast<uint32_t>(f);
    }
    return group_from_generators(degree, gens, cap);
}

PermGroup elementary_abelian_group(long p, long k, uint64_t cap) {
    require_prime(p, "elementary_abelian");
    if (k < 1) throw Error("elementary_abelian(p,k) needs k >= 1");
    return abelian_group(std::vector<long>(k, p), cap);
}

PermGroup psl2_group(long p, uint64_t cap) {
    require_prime(p, "psl2");
    uint32_t d = static_cast<uint32_t>(p + 1);  // point p is the point at infinity
    std::vector<uint32_t> shift(d), inv(d);
    for (long x = 0; x < p; ++x) shift[x] = static_cast<uint32_t>((x + 1) % p);
    shift[p] = static_cast<uint32_t>(p);
    inv[0] = static_cast<uint32_t>(p);  // x -> -1/x
    inv[p] = 0;
    for (long x = 1; x < p; ++x) inv[x] = static_cast<uint32_t>((p - mod_inv(x, p)) % p);
    return group_from_generators(d, {Permutation(shift), Permutation(inv)}, cap);
}

namespace {

// action of a 2x2 matrix (column convention) on nonzero vectors of F_p^2,
// point (x,y) <-> index x + p*y - 1
Permutation mat2_perm(long p, long a, long b, long c, long dd) {
    uint32_t deg = static_cast<uint32_t>(p * p - 1);
    std::vector<uint32_t> img(deg);
    for (long y = 0; y < p; ++y)
        for (long x = 0; x < p; ++x) {
            if (x == 0 && y == 0) continue;
            long nx = (a * x + b * y) % p, ny = (c * x + dd * y) % p;
            img[x + p * y - 1] = static_cast<uint32_t>(nx + p * ny - 1);
        }
    return Permutation(img);
}

}  // namespace

PermGroup sl2_group(long p, uint64_t cap) {
    require_prime(p, "sl2");
    return group_from_generators(static_cast<uint32_t>(p * p - 1),
                                 {mat2_perm(p, 1, 1, 0, 1), mat2_perm(p, 1, 0, 1, 1)}, cap);
}

PermGroup affine_subgroup(long p, long ell, uint64_t cap) {
    require_prime(p, "affine");
    if (ell < 1 || (p - 1) % ell != 0)
        throw Error("affine dilation index must divide p-1");
    uint32_t d = static_cast<uint32_t>(p);
    std::vector<uint32_t> shift(d);
    for (long x = 0; x < p; ++x) shift[x] = static_cast<uint32_t>((x + 1) % p);
    std::vector<Permutation> gens{Permutation(shift)};
    long a = p == 2 ? 1 : mod_pow(primitive_root_mod(p), ell, p);
    if (a != 1) {
        std::vector<uint32_t> dil(d);
        for (long x = 0; x < p; ++x) dil[x] = static_cast<uint32_t>(a * x % p);
        gens.push_back(Permutation(dil));
    }
    return group_from_generators(d, gens, cap);
}

PermGroup affine_group(long p, uint64_t cap) { return affine_subgroup(p, 1, cap); }

PermGroup borel3_group(long p, uint64_t cap) {
    require_prime(p, "borel3");
    uint32_t deg = static_cast<uint32_t>(p * p * p - 1);
    // point (x,y,z) <-> index x + p*y + p^2*z - 1
    auto mat_perm = [&](long m[3][3]) {
        std::vector<uint32_t> img(deg);
        for (long z = 0; z < p; ++z)
            for (long y = 0; y < p; ++y)
                for (long x = 0; x < p; ++x) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    long nx = (m[0][0] * x + m[0][1] * y + m[0][2] * z) % p;
                    long ny = (m[1][0] * x + m[1][1] * y + m[1][2] * z) % p;
                    long nz = (m[2][0] * x + m[2][1] * y + m[2][2] * z) % p;
                    img[x + p * y + p * p * z - 1] =
                        static_cast<uint32_t>(nx + p * ny + p * p * nz - 1);
                }
        return Permutation(img);
    };
    std::vector<Permutation> gens;
    long u1[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    long u2[3][3] = {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}};
    gens.push_back(mat_perm(u1));
    gens.push_back(mat_perm(u2));
    if (p > 2) {
        long g = primitive_root_mod(p), gi = mod_inv(g, p);
        long d1[3][3] = {{g, 0, 0}, {0, gi, 0}, {0, 0, 1}};
        long d2[3][3] = {{1, 0, 0}, {0, g, 0}, {0, 0, gi}};
        gens.push_back(mat_perm(d1));
        gens.push_back(mat_perm(d2));
    }
    return group_from_generators(deg, gens, cap);
}

// ---- GroupSpec ------------------------------------------------------------

namespace {

GroupSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw Error("group spec must be a JSON object with a \"family\" string");
    GroupSpec s;
    s.family = j["family"].get<std::string>();
    auto get_long = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number_integer())
            throw Error("group spec family \"" + s.family + "\" needs integer \"" + key + "\"");
        return j[key].get<long>();
    };
    if (s.family == "cyclic" || s.family == "symmetric" || s.family == "alternating") {
        s.n = get_long("n");
    } else if (s.family == "dihedral") {
        s.n = get_long("order");
    } else if (s.family == "psl2" || s.family == "sl2" || s.family == "affine" ||
               s.family == "borel3") {
        s.p = get_long("p");
    } else if (s.family == "elementary_abelian") {
        s.p = get_long("p");
        s.k = get_long("k");
    } else if (s.family == "abelian") {
        if (!j.contains("factors") || !j["factors"].is_array())
            throw Error("abelian spec needs a \"factors\" array");
        for (const auto& f : j["factors"]) s.factors.push_back(f.get<long>());
    } else if (s.family == "generators") {
        s.degree = get_long("degree");
        if (!j.contains("generators") || !j["generators"].is_array())
            throw Error("generators spec needs a \"generators\" array");
        for (const auto& g : j["generators"])
            s.generators.push_back(g.get<std::vector<uint32_t>>());
    } else if (s.family == "direct_product") {
        if (!j.contains("left") || !j.contains("right"))
            throw Error("direct_product spec needs \"left\" and \"right\"");
        s.product.push_back(std::make_shared<GroupSpec>(spec_from_json(j["left"])));
        s.product.push_back(std::make_shared<GroupSpec>(spec_from_json(j["right"])));
    } else {
        throw Error("unknown group family: " + s.family);
    }
    return s;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw Error("invalid JSON in group spec");
    return spec_from_json(j);
}

PermGroup build_group(const GroupSpec& s, uint64_t cap) {
    if (s.family == "cyclic") return cyclic_group(s.n, cap);
    if (s.family == "dihedral") return dihedral_group(s.n, cap);
    if (s.family == "symmetric") return symmetric_group(s.n, cap);
    if (s.family == "alternating") return alternating_group(s.n, cap);
    if (s.family == "elementary_abelian") return elementary_abelian_group(s.p, s.k, cap);
    if (s.family == "abelian") return abelian_group(s.factors, cap);
    if (s.family == "psl2") return psl2_group(s.p, cap);
    if (s.family == "sl2") return sl2_group(s.p, cap);
    if (s.family == "affine") return affine_group(s.p, cap);
    if (s.family == "borel3") return borel3_group(s.p, cap);
    if (s.family == "generators") {
        if (s.degree < 1) throw Error("generators spec needs degree >= 1");
        std::vector<Permutation> gens;
        for (const auto& img : s.generators) gens.emplace_back(img);
        return group_from_generators(static_cast<uint32_t>(s.degree), gens, cap);
    }
    if (s.family == "direct_product")
        return direct_product(build_group(*s.product[0], cap), build_group(*s.product[1], cap),
                              cap);
    throw Error("unknown group family: " + s.family);
}

}  // namespace cheb
