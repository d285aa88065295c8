#pragma once

#include <cstdint>
#include <string>

#include "valforge/symbols.hpp"

namespace valforge {

// ground fields this toolkit models: Q, F_q, F_q(t)
struct FieldDescriptor {
    enum class Kind { Q, Fq, Fqt };
    Kind kind = Kind::Q;
    std::int64_t q = 0;   // unused for Q
};

// grammar: "Q", "F7", "F7t", "F9t", ... (q a prime power)
FieldDescriptor parse_descriptor(const std::string& text);
std::string print_descriptor(const FieldDescriptor& F);

// trdeg over F_p in characteristic p; trdeg over Q plus 1 in characteristic 0
int kronecker_dimension(const FieldDescriptor& F);

struct DefectReport {
    bool one_defectless = false;
    int field_dim = 0;
    int residue_dim = 0;   // -1 when there is no residue field in scope
    std::string note;
};

// a place drops the Kronecker dimension by exactly 1; the trivial valuation
// (residue field = the field itself) is the documented negative case
DefectReport one_defectless_q(const QPlace& P);
DefectReport one_defectless_fqt(const FqtGround& g, const FqtPlace& P);
DefectReport one_defectless_trivial(const FieldDescriptor& F);

struct Prop2Shadow {
    bool dim_matches = false;    // (1) d = n + 1
    WedgeReport wedge;           // (2) symbol form of the cup-product condition
    bool gamma_bound = false;    // (3) 1 <= n
    bool verdict = false;
    std::string scope = "base-level shadow";
};

// checks the base local model only, not extensions; hence the scope label
template <class G>
Prop2Shadow prop2_shadow_report(const ClassSpace<G>& V, int n) {
    Prop2Shadow rep;
    rep.dim_matches = V.dim() == n + 1;
    rep.wedge = wedge_iso_check(V);
    rep.gamma_bound = 1 <= n;
    rep.verdict = rep.dim_matches && rep.wedge.holds && rep.gamma_bound;
    return rep;
}

}  // namespace valforge
