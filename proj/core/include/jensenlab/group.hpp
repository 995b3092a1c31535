#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jensenlab/elements.hpp"
#include "jensenlab/heisenberg.hpp"
#include "jensenlab/triangular.hpp"
#include "jensenlab/wreath.hpp"

namespace jensenlab {

enum class GroupKind { free_abelian, cyclic, heisenberg, triangular, wreath, direct_product };

// A configured group: descriptor plus exact arithmetic. Cheap to copy; all
// operations are pure functions of their inputs and the descriptor.
//
// Descriptor text grammar (also accepted by the CLI):
//   heisenberg | z | z^d:<rank> | zn:<modulus> | t2:q | t2:fp:<odd prime>
//   | wreath:<base>:<factors> | <a>*<b>[*<c>...]
// The '*' form builds a direct product of non-wreath components; a wreath
// base may itself be a product, e.g. "wreath:z*zn:3:8".
class Group {
public:
    static Group parse(std::string_view text);

    static Group integers();
    static Group free_abelian(int rank);
    static Group cyclic(long modulus);
    static Group heisenberg_group();
    static Group t2_rationals();
    static Group t2_prime(long p);
    static Group wreath_product(const Group& base, int factors);
    static Group direct_product(std::vector<Group> factors);

    const std::string& id() const;
    GroupKind kind() const;

    int rank() const;                             // free_abelian
    long modulus() const;                         // cyclic
    const Field& field() const;                   // triangular
    int wreath_factors() const;                   // wreath
    const Group& wreath_base() const;             // wreath
    const std::vector<Group>& product_factors() const;  // direct_product

    GroupElement identity() const;
    bool is_identity(const GroupElement& x) const;

    std::vector<std::pair<std::string, GroupElement>> generators() const;

    GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;
    GroupElement power(const GroupElement& x, const Int& n) const;
    // x^-1 y^-1 x y
    GroupElement commutator(const GroupElement& x, const GroupElement& y) const;
    // b^-1 x b
    GroupElement conjugate(const GroupElement& x, const GroupElement& b) const;

    // Least n <= cap with x^n = 1, or nullopt when no such n was found.
    std::optional<long> element_order(const GroupElement& x, long cap = 64) const;

    // Injective, platform-stable byte encoding. Identity encodings per kind
    // are fixed constants, e.g. heisenberg: 'H' followed by three zero-length
    // integer bodies (13 bytes total).
    Bytes canonical_encoding(const GroupElement& x) const;

    std::string to_string(const GroupElement& x) const;

    // All elements when the group is finite and no larger than cap.
    std::optional<std::vector<GroupElement>> try_enumerate(std::size_t cap) const;

    // Element builders (validate coordinates and canonicalize).
    GroupElement make_integer(Int n) const;
    GroupElement make_vector(std::vector<Int> coords) const;
    GroupElement make_cyclic(Int r) const;
    GroupElement make_heisenberg(Int m, Int n, Int k) const;
    GroupElement make_triangular(FieldScalar alpha, FieldScalar t, FieldScalar beta) const;
    GroupElement make_wreath(std::uint32_t shift,
                             std::vector<std::pair<std::uint32_t, GroupElement>> parts) const;
    GroupElement make_product(std::vector<GroupElement> components) const;

    bool operator==(const Group& o) const { return id() == o.id(); }

private:
    struct Desc;
    explicit Group(std::shared_ptr<const Desc> d) : d_(std::move(d)) {}
    void check_member(const GroupElement& x) const;
    wreath::BaseOps wreath_base_ops() const;

    std::shared_ptr<const Desc> d_;
};

// Conjugation by a fixed element, x -> conjugator^-1 x conjugator.
struct InnerAutomorphism {
    GroupElement conjugator;
    GroupElement apply(const Group& g, const GroupElement& x) const {
        return g.conjugate(x, conjugator);
    }
};

// --- kind-specific entry points -------------------------------------------

Ut3Matrix heisenberg_to_ut3(const GroupElement& x);
GroupElement ut3_to_heisenberg(const Group& g, const Mat3& matrix);

GroupElement t2_projection_tau(const Group& g, const GroupElement& x);
triangular::SubgroupFlags t2_subgroup_membership(const Group& g, const GroupElement& x);

bool wreath_commuting_block_check(
    const Group& g, const std::vector<std::pair<std::uint32_t, GroupElement>>& parts);

// --- sampled structure probes ----------------------------------------------

class ElementSampler;

struct MetabelianWitness {
    GroupElement x, y, z;  // [[x,y],z] != 1
};

// Searches N sampled triples for a violation of [[x,y],z] = 1.
std::optional<MetabelianWitness> find_metabelian_witness(const Group& g,
                                                         ElementSampler& sampler,
                                                         int samples);

}  // namespace jensenlab
