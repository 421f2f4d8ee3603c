#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genstab/form.hpp"
#include "genstab/report.hpp"
#include "genstab/rootsys.hpp"

namespace genstab {

/// Subspace dimension with an optional half-dimension component marker (k', k'').
struct KValue {
    int k = 0;
    int component = 0;  // 0 none, 1 for k', 2 for k''
    std::string to_string() const;
    friend bool operator==(const KValue&, const KValue&) = default;
};
/// Parses "3", "7'" or "7''".
KValue parse_k(const std::string& s);

/// Dimension of the variety of totally singular k-spaces in an n-dimensional geometry.
/// With d_special_rank = l the D_l value dim D_l - dim P_{l-1,l} is returned (requires n = 2l, k = l-1).
int grass_dim(int n, const KValue& k, FormKind form, std::optional<int> d_special_rank = std::nullopt);

/// Integer expression in l and p: + - * ( ), div(a,b) = [a | b] (false for a = 0), eq(a,b), gcd(a,b).
long eval_expression(const std::string& expr, long l, long p);

/// Comma-separated conjunction of conditions on a rank or a characteristic (p = 0 for characteristic zero).
bool rank_condition_holds(const std::string& cond, int l);
bool char_condition_holds(const std::string& cond, long p, int l);

struct HighestWeight {
    std::vector<int> coeffs;  // coefficient of each fundamental weight, Frobenius twists folded in
    bool twisted = false;
};
HighestWeight parse_weight(const std::string& text, int rank);

struct ModuleRecord {
    int table = 0;
    char series = 'A';
    std::string rank;    // rank condition
    std::string weight;  // weight terms
    std::string p;       // characteristic condition
    std::string dim;     // dimension expression
    FormKind form = FormKind::Orthogonal;
    std::vector<std::string> k;  // listed k values
    int line = 0;                // line number in the data file
    std::string describe() const;
};

/// Stabilizer as a sequence of factors, e.g. U_6A_2T_1 or T_2.U_1.Z_2(*).
struct StabilizerStructure {
    std::string text;
    int unipotent = 0;
    int torus = 0;
    std::vector<std::pair<char, int>> simple;  // (series, rank), repeated for powers
    std::vector<std::string> finite;           // finite tokens, dimension 0
    std::optional<std::vector<int>> parabolic; // 1-based removed nodes of P_J in the ambient group
    bool semi_generic = false;
};
/// Parses a stabilizer string, resolving l (and k for P_k) at the given values.
/// For P_k with k = l, the component k'' selects node l-1 (type D).
StabilizerStructure parse_stabilizer(const std::string& text, int l = 0, const KValue& k = {});
/// Sum of unipotent, simple and torus dimensions; a parabolic needs the ambient root system.
int stabilizer_dim(const StabilizerStructure& s, const RootSystem* ambient = nullptr);

struct QuadrupleRow {
    ModuleRecord module;
    std::string stab;
    bool dense = false;
};

struct Catalog {
    std::vector<ModuleRecord> records;  // all tables
    std::vector<QuadrupleRow> rows;     // table 1 only, aligned with its records
    std::vector<const ModuleRecord*> table(int t) const;
};

Catalog parse_catalog(std::string_view text);
Catalog load_catalog(const std::string& path);
/// The catalog shipped with the library, or the file named by GENSTAB_CATALOG when set.
const Catalog& default_catalog();
std::string_view embedded_catalog();

/// One concrete quadruple obtained by fixing rank, characteristic and k.
struct Instance {
    const ModuleRecord* record = nullptr;
    int rank = 0;
    long p = 0;
    KValue k;
    int dim = 0;
    int group_dim = 0;
    std::string describe() const;
};
/// Characteristics sampled when a condition leaves p free.
const std::vector<long>& sample_characteristics();
/// Ranks satisfying the record's condition up to max_rank.
std::vector<int> expand_ranks(const ModuleRecord& r, int max_rank = 12);
/// k values listed for the record at rank l and module dimension n.
std::vector<KValue> expand_k(const ModuleRecord& r, int l, int n);
std::vector<Instance> expand(const ModuleRecord& r, int max_rank = 12);

bool is_small_quadruple(const ModuleRecord& r, int l, long p, const KValue& k);

/// Orthogonal or symplectic from the parity of <lambda, 2 rho-check>. In characteristic 2 the
/// catalog value is returned and *from_catalog is set.
FormKind form_type(const ModuleRecord& r, int l, long p, bool* from_catalog = nullptr);

/// For every table 1 instance: stabilizer dim >= dim G - dim S_k, with equality exactly when dense.
VerificationReport table1_consistency(const Catalog& c = default_catalog(), int max_rank = 12);

/// grass_dim against dim G - dim P for every B, C, D ambient with module dimension up to max_module_dim.
VerificationReport grass_dim_crosscheck(int max_module_dim = 32);

}  // namespace genstab
