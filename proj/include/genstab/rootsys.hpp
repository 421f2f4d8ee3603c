#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace genstab {

/// Root in simple-root coordinates.
using Root = std::vector<int>;

/// Irreducible root system of Lie type A-G with Bourbaki labelling.
///
/// Roots are indexed 0..2N-1. The first N are positive, sorted by height and
/// then by descending lexicographic order of their coordinates; root N+i is
/// the negative of root i.
class RootSystem {
public:
    RootSystem(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_roots() / 2; }

    const Root& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }
    const std::vector<Root>& roots() const { return roots_; }
    /// Index of r, or -1 when r is not a root.
    int index(const Root& r) const;
    int negative(int i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
    bool is_positive(int i) const { return i < num_positive(); }
    int height(int i) const;
    int simple(int i) const { return i; }

    /// Symmetrised form (a, b); simply-laced roots have length 2.
    int inner(const Root& a, const Root& b) const;
    int inner(int i, int j) const { return inner(root(i), root(j)); }
    /// <a, b^vee> = 2 (a, b) / (b, b).
    int pairing(int i, int j) const;
    /// Bourbaki Cartan matrix entry <alpha_i, alpha_j^vee>.
    int cartan(int i, int j) const { return pairing(i, j); }

    /// Chevalley structure constant N_{i,j} with positive extraspecial signs; 0 when i+j is not a root.
    int structure_constant(int i, int j) const;
    /// Index of root(i) + root(j), or -1.
    int sum_index(int i, int j) const;
    /// Extraspecial pair of a non-simple positive root.
    std::pair<int, int> extraspecial_pair(int xi) const;
    /// Largest p with root(j) - p root(i) a root.
    int string_down(int i, int j) const;

    /// Simple reflection s_k applied to root i.
    int reflect(int i, int k) const;
    /// w(root i) for w = s_{w[0]} s_{w[1]} ... (rightmost applied first).
    int apply_word(const std::vector<int>& word, int i) const;

    /// Coefficients of the sum of positive coroots in the simple-coroot basis.
    std::vector<int> two_rho_check() const;

private:
    char type_;
    int rank_;
    std::vector<std::vector<int>> gram_;
    std::vector<Root> roots_;
    std::map<Root, int> index_;
    struct StructureTable {
        std::once_flag once;
        std::vector<int> table;  // num_roots^2, built on first use
    };
    std::shared_ptr<StructureTable> structure_ = std::make_shared<StructureTable>();
    void build_roots();
    std::vector<int> build_structure_constants() const;
};

/// Validates (type, rank) and builds the root system.
RootSystem build_root_system(char type, int rank);
/// dim G = |Phi| + rank.
int group_dim(char type, int rank);

/// Parses "n2n1n2", "s1s2" or "2,1,2" into 0-based simple reflection indices.
std::vector<int> parse_weyl_word(const std::string& text);

/// Roots of the standard parabolic P_J (J = removed nodes, 0-based).
std::vector<int> parabolic_roots(const RootSystem& rs, const std::vector<int>& removed);
int parabolic_dim(const RootSystem& rs, const std::vector<int>& removed);

struct ParabolicIntersection {
    std::vector<int> roots;
    int unipotent_dim = 0;
    int torus_rank = 0;
    std::string levi;   // semisimple part such as "A1" or "A2A1", empty if none
    std::string shape;  // e.g. "U3T2" or "U3A1T1"
};

/// Roots common to P_J and w P_J w^{-1}, with the induced group shape.
ParabolicIntersection parabolic_common_roots(const RootSystem& rs, const std::vector<int>& removed,
                                             const std::vector<int>& word);

/// Type label of a root subsystem given by root indices closed under negation.
std::string subsystem_type(const RootSystem& rs, const std::vector<int>& roots);

}  // namespace genstab
