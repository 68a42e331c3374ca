#include "k3mw/autgroup.hpp"

namespace k3mw {

namespace {

using Mat3 = std::array<std::array<Int, 3>, 3>;

Mat3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat3 mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

std::array<Int, 3> act(const Mat3& m, const std::array<Int, 3>& v) {
    std::array<Int, 3> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * v[j];
    return r;
}

} // namespace

GenName gen_from_string(const std::string& s) {
    if (s == "epsilon") return GenName::Epsilon;
    if (s == "T1") return GenName::T1;
    if (s == "T1_inv") return GenName::T1Inv;
    throw std::invalid_argument("unknown generator name: " + s);
}

IsometryGen epsilon_gen() {
    return {GenName::Epsilon, {{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}};
}

IsometryGen t1_gen(Int d) {
    return {GenName::T1, {{{1, d, 2 * d}, {0, 1, 0}, {0, 1, 1}}}};
}

IsometryGen t1_inv_gen(Int d) {
    return {GenName::T1Inv, {{{1, d, -2 * d}, {0, 1, 0}, {0, -1, 1}}}};
}

bool preserves_gram(const IsometryGen& g, Int d) {
    auto L = fibration_basis_lattice(d);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) s += g.m[k][i] * L.g[k][l] * g.m[l][j];
            if (s != L.g[i][j]) return false;
        }
    return true;
}

namespace {

Mat3 matrix_of(GenName g, Int d) {
    switch (g) {
        case GenName::Epsilon: return epsilon_gen().m;
        case GenName::T1: return t1_gen(d).m;
        case GenName::T1Inv: return t1_inv_gen(d).m;
    }
    throw std::logic_error("unreachable");
}

} // namespace

DivisorClass apply_word(Int d, const std::vector<GenName>& word, const DivisorClass& v) {
    if (d < 1) throw std::domain_error("family parameter d must be >= 1");
    if (!(v.lat == fibration_basis_lattice(d)))
        throw std::invalid_argument("class does not live in the Lambda_d fibration basis");
    if (d == 1)
        for (auto g : word)
            if (g != GenName::Epsilon)
                throw std::domain_error(
                    "d=1: translation is an isometry but not an automorphism "
                    "(it sends the effective class F-b3 to the non-effective -F-b3)");
    std::array<Int, 3> c = {v.c[0], v.c[1], v.c[2]};
    for (auto g : word) c = act(matrix_of(g, d), c);
    return DivisorClass::of(v.lat, {c[0], c[1], c[2]});
}

bool verify_relations(Int d) {
    if (d < 2) throw std::domain_error("relations are checked for d >= 2");
    Mat3 E = epsilon_gen().m, T = t1_gen(d).m, Ti = t1_inv_gen(d).m;
    if (mul(T, Ti) != identity3()) return false;
    if (mul(E, E) != identity3()) return false;
    Mat3 TE = mul(T, E);
    if (mul(TE, TE) != identity3()) return false;
    if (mul(mul(E, T), E) != Ti) return false;
    Mat3 acc = identity3();
    for (int n = 1; n <= 20; ++n) {
        acc = mul(acc, T);
        if (acc == identity3()) return false;
    }
    return preserves_gram(epsilon_gen(), d) && preserves_gram(t1_gen(d), d);
}

std::set<DivisorClass> orbit(Int d, const DivisorClass& v, Int radius) {
    if (d < 2) throw std::domain_error("orbit is computed for d >= 2");
    Int vsq = self_pairing(v);
    auto L = fibration_basis_lattice(d);
    DivisorClass F = DivisorClass::of(L, {1, 0, 0});
    Int vf = pair_value(v, F);

    std::set<DivisorClass> seen = {v};
    std::vector<DivisorClass> frontier = {v};
    for (Int step = 0; step < radius; ++step) {
        std::vector<DivisorClass> next;
        for (const auto& u : frontier)
            for (auto g : {GenName::Epsilon, GenName::T1, GenName::T1Inv}) {
                DivisorClass w = apply_word(d, {g}, u);
                if (self_pairing(w) != vsq || pair_value(w, F) != vf)
                    throw std::logic_error("orbit image broke an invariant");
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    return seen;
}

Effectivity effectivity_test(Int d, const DivisorClass& v) {
    auto L = fibration_basis_lattice(d);
    if (!(v.lat == L))
        throw std::invalid_argument("class does not live in the Lambda_d fibration basis");
    bool zero = true;
    for (int i = 0; i < 3; ++i)
        if (v.c[i] != 0) zero = false;
    if (zero) return Effectivity::Zero;
    if (self_pairing(v) != -2)
        throw std::domain_error("effectivity test applies to (-2)-classes");
    DivisorClass h = DivisorClass::of(L, {3, 1, 0});
    DivisorClass F = DivisorClass::of(L, {1, 0, 0});
    DivisorClass O = DivisorClass::of(L, {0, 1, 0});
    if (self_pairing(h) <= 0 || pair_value(h, F) <= 0 || pair_value(h, O) <= 0)
        throw std::logic_error("reference class h fails its positivity checks");
    Int s = pair_value(v, h);
    if (s == 0) throw std::domain_error("inconclusive: candidate is orthogonal to h");
    return s > 0 ? Effectivity::PlausiblyEffective : Effectivity::NotEffective;
}

} // namespace k3mw
