#pragma once

// Seifert indices and Fuchsian signatures: validation, normal forms, fiber
// orientation reversal, orbifold invariants, and presentation emission.
//
// Conventions (Jankins-Neumann): the index (g; b; (a1,b1),...,(an,bn))
// describes the closed oriented Seifert manifold with
//   pi_1 = < a_i, b_i, q_j, h | h central, q_j^{a_j} = h^{b_j},
//                               q_1...q_n [a_1,b_1]...[a_g,b_g] = h^{-b} >.

#include "numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace seifert {

struct InvalidGenus : Error {
    using Error::Error;
};

struct InvalidBranchIndex : Error {
    using Error::Error;
};

/// Base orbifold data (g; alpha_1, ..., alpha_n). Every alpha_j >= 2.
struct FuchsianSignature {
    int genus = 0;
    std::vector<Integer> branch_indices;

    std::size_t cone_points() const { return branch_indices.size(); }

    friend bool operator==(const FuchsianSignature&, const FuchsianSignature&) = default;
};

/// One exceptional fiber (alpha, beta), alpha >= 2.
struct Fiber {
    Integer alpha;
    Integer beta;

    friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Seifert index (g; b; (alpha_1,beta_1), ..., (alpha_n,beta_n)).
struct SeifertIndex {
    int genus = 0;
    Integer b;
    std::vector<Fiber> fibers;

    std::size_t fiber_count() const { return fibers.size(); }

    FuchsianSignature signature() const {
        FuchsianSignature sig;
        sig.genus = genus;
        sig.branch_indices.reserve(fibers.size());
        for (const Fiber& f : fibers)
            sig.branch_indices.push_back(f.alpha);
        return sig;
    }

    bool is_normalized() const {
        for (const Fiber& f : fibers)
            if (f.beta < 0 || f.beta >= f.alpha)
                return false;
        return true;
    }

    friend bool operator==(const SeifertIndex&, const SeifertIndex&) = default;
};

inline FuchsianSignature validate(FuchsianSignature sig) {
    if (sig.genus < 0)
        throw InvalidGenus("genus must be non-negative, got " + std::to_string(sig.genus));
    for (const Integer& a : sig.branch_indices)
        if (a < 2)
            throw InvalidBranchIndex("branch index must be >= 2, got " + a.str());
    return sig;
}

/// Checks ranges only; the returned index is not necessarily normalized.
/// A pair with alpha = 1 is rejected rather than absorbed into b, so the
/// exceptional-fiber count n stays unambiguous.
inline SeifertIndex validate(SeifertIndex index) {
    if (index.genus < 0)
        throw InvalidGenus("genus must be non-negative, got " + std::to_string(index.genus));
    for (const Fiber& f : index.fibers)
        if (f.alpha < 2)
            throw InvalidBranchIndex("fiber multiplicity must be >= 2, got " + f.alpha.str());
    return index;
}

/// Unique representative with 0 <= beta_j < alpha_j; b absorbs the floor
/// quotients. Represents the same cohomology class and the same manifold.
inline SeifertIndex normalize(SeifertIndex index) {
    for (Fiber& f : index.fibers) {
        index.b += floor_div(f.beta, f.alpha);
        f.beta = floor_mod(f.beta, f.alpha);
    }
    return index;
}

/// Index of the manifold with reversed fiber orientation:
/// (b, beta_j) -> (-b, -beta_j), then renormalize. An involution on
/// normalized indices.
inline SeifertIndex orientation_reverse(SeifertIndex index) {
    index.b = -index.b;
    for (Fiber& f : index.fibers)
        f.beta = -f.beta;
    return normalize(std::move(index));
}

/// chi = 2 - 2g - sum (alpha_j - 1)/alpha_j, exact.
inline Rational orbifold_euler_characteristic(const FuchsianSignature& sig) {
    Rational chi = 2 - 2 * Integer(sig.genus);
    for (const Integer& a : sig.branch_indices)
        chi -= Rational(a - 1, a);
    return chi;
}

/// Index of the unit tangent bundle of the orbifold:
/// (g; 2g-2; (alpha_j, alpha_j - 1)). Always normalized.
inline SeifertIndex unit_tangent_bundle(const FuchsianSignature& sig) {
    SeifertIndex index;
    index.genus = sig.genus;
    index.b = 2 * Integer(sig.genus) - 2;
    index.fibers.reserve(sig.branch_indices.size());
    for (const Integer& a : sig.branch_indices)
        index.fibers.push_back({a, a - 1});
    return index;
}

// --- presentations ----------------------------------------------------------

struct Syllable {
    std::string gen;
    Integer exp;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::vector<std::string> annotations;
};

/// Every generator name used in a relator appears in the generator list.
inline bool well_formed(const Presentation& p) {
    for (const Word& w : p.relators)
        for (const Syllable& s : w)
            if (std::find(p.generators.begin(), p.generators.end(), s.gen) == p.generators.end())
                return false;
    return true;
}

inline std::string to_string(const Word& w) {
    if (w.empty())
        return "1";
    std::string out;
    for (const Syllable& s : w) {
        if (!out.empty())
            out += ' ';
        out += s.gen;
        if (s.exp != 1)
            out += '^' + s.exp.str();
    }
    return out;
}

namespace detail {

inline void append_syllable(Word& w, const std::string& gen, const Integer& exp) {
    if (exp != 0)
        w.push_back({gen, exp});
}

inline Word commutator(const std::string& x, const std::string& y) {
    return {{x, 1}, {y, 1}, {x, -1}, {y, -1}};
}

inline std::vector<std::string> surface_generators(int genus) {
    std::vector<std::string> gens;
    for (int i = 1; i <= genus; ++i) {
        gens.push_back("a" + std::to_string(i));
        gens.push_back("b" + std::to_string(i));
    }
    return gens;
}

} // namespace detail

/// Presentation of pi_1 for a normalized index. Relator order: centrality
/// commutators [h,x], torsion relators q_j^{alpha_j} h^{-beta_j}, then the
/// long relator q_1...q_n [a_1,b_1]...[a_g,b_g] h^b (omitted if empty).
inline Presentation pi1_presentation(const SeifertIndex& index) {
    const std::size_t n = index.fiber_count();
    Presentation p;
    p.generators = detail::surface_generators(index.genus);
    for (std::size_t j = 1; j <= n; ++j)
        p.generators.push_back("q" + std::to_string(j));
    std::vector<std::string> non_central = p.generators;
    p.generators.push_back("h");

    for (const std::string& x : non_central)
        p.relators.push_back(detail::commutator("h", x));
    for (std::size_t j = 0; j < n; ++j) {
        Word w;
        detail::append_syllable(w, "q" + std::to_string(j + 1), index.fibers[j].alpha);
        detail::append_syllable(w, "h", -index.fibers[j].beta);
        p.relators.push_back(std::move(w));
    }
    Word long_rel;
    for (std::size_t j = 0; j < n; ++j)
        detail::append_syllable(long_rel, "q" + std::to_string(j + 1), 1);
    for (int i = 1; i <= index.genus; ++i) {
        Word c = detail::commutator("a" + std::to_string(i), "b" + std::to_string(i));
        long_rel.insert(long_rel.end(), c.begin(), c.end());
    }
    detail::append_syllable(long_rel, "h", index.b);
    if (!long_rel.empty())
        p.relators.push_back(std::move(long_rel));

    p.annotations.push_back("h is central");
    return p;
}

/// Presentation of the Fuchsian group Gamma(g; alpha_1,...,alpha_n):
/// q_j^{alpha_j} = 1 and q_1...q_n [a_1,b_1]...[a_g,b_g] = 1. Equal to the
/// pi_1 presentation with h deleted.
inline Presentation fuchsian_presentation(const FuchsianSignature& sig) {
    const std::size_t n = sig.cone_points();
    Presentation p;
    p.generators = detail::surface_generators(sig.genus);
    for (std::size_t j = 1; j <= n; ++j)
        p.generators.push_back("q" + std::to_string(j));

    for (std::size_t j = 0; j < n; ++j)
        p.relators.push_back({{"q" + std::to_string(j + 1), sig.branch_indices[j]}});
    Word long_rel;
    for (std::size_t j = 0; j < n; ++j)
        detail::append_syllable(long_rel, "q" + std::to_string(j + 1), 1);
    for (int i = 1; i <= sig.genus; ++i) {
        Word c = detail::commutator("a" + std::to_string(i), "b" + std::to_string(i));
        long_rel.insert(long_rel.end(), c.begin(), c.end());
    }
    if (!long_rel.empty())
        p.relators.push_back(std::move(long_rel));
    return p;
}

// --- text format -------------------------------------------------------------

/// `g; b; a1/b1,a2/b2,...`, or `g; b` when there are no exceptional fibers.
inline std::string format_index(const SeifertIndex& index) {
    std::string out = std::to_string(index.genus) + "; " + index.b.str();
    if (!index.fibers.empty()) {
        out += "; ";
        for (std::size_t j = 0; j < index.fibers.size(); ++j) {
            if (j)
                out += ',';
            out += index.fibers[j].alpha.str() + '/' + index.fibers[j].beta.str();
        }
    }
    return out;
}

/// Parses `g ';' b [';' a '/' b (',' a '/' b)*]`, whitespace-insensitive.
/// Accepts arbitrary integers for b and the beta_j; normalization is a
/// separate, explicit step. Syntax only: ranges are checked by validate().
inline SeifertIndex parse_index(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == ';') {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    parts.push_back(current);
    if (parts.size() != 2 && parts.size() != 3)
        throw ParseError("expected `g; b; a1/b1,...`, got \"" + text + "\"");

    SeifertIndex index;
    Integer genus = parse_integer(parts[0]);
    if (genus > 1000000 || genus < -1000000)
        throw ParseError("genus out of range: " + genus.str());
    index.genus = genus.convert_to<int>();
    index.b = parse_integer(parts[1]);

    if (parts.size() == 3) {
        const std::string& fibers = parts[2];
        if (fibers.find_first_not_of(" \t") != std::string::npos) {
            std::string pair;
            std::vector<std::string> pair_texts;
            for (char ch : fibers) {
                if (ch == ',') {
                    pair_texts.push_back(pair);
                    pair.clear();
                } else {
                    pair += ch;
                }
            }
            pair_texts.push_back(pair);
            for (const std::string& pt : pair_texts) {
                std::size_t slash = pt.find('/');
                if (slash == std::string::npos || pt.find('/', slash + 1) != std::string::npos)
                    throw ParseError("expected `alpha/beta`, got \"" + pt + "\"");
                index.fibers.push_back(
                    {parse_integer(pt.substr(0, slash)), parse_integer(pt.substr(slash + 1))});
            }
        }
    }
    return index;
}

} // namespace seifert
