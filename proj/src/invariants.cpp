#include "valforge/invariants.hpp"

#include <stdexcept>

namespace valforge {

FieldDescriptor parse_descriptor(const std::string& text) {
    if (text == "Q") return {FieldDescriptor::Kind::Q, 0};
    if (text.size() < 2 || text[0] != 'F')
        throw std::invalid_argument("bad field descriptor: " + text);
    bool fn_field = text.back() == 't';
    std::string digits = text.substr(1, text.size() - 1 - (fn_field ? 1 : 0));
    if (digits.empty()) throw std::invalid_argument("bad field descriptor: " + text);
    std::int64_t q = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad field descriptor: " + text);
        q = q * 10 + (c - '0');
        if (q > (std::int64_t(1) << 40)) throw std::invalid_argument("field size out of range: " + text);
    }
    FqField::make_from_size(q);  // validates q is a prime power
    return {fn_field ? FieldDescriptor::Kind::Fqt : FieldDescriptor::Kind::Fq, q};
}

std::string print_descriptor(const FieldDescriptor& F) {
    switch (F.kind) {
        case FieldDescriptor::Kind::Q: return "Q";
        case FieldDescriptor::Kind::Fq: return "F" + std::to_string(F.q);
        case FieldDescriptor::Kind::Fqt: return "F" + std::to_string(F.q) + "t";
    }
    throw std::logic_error("unreachable");
}

int kronecker_dimension(const FieldDescriptor& F) {
    switch (F.kind) {
        case FieldDescriptor::Kind::Q: return 1;    // trdeg(Q/Q) + 1
        case FieldDescriptor::Kind::Fq: return 0;   // trdeg over the prime field
        case FieldDescriptor::Kind::Fqt: return 1;
    }
    throw std::logic_error("unreachable");
}

DefectReport one_defectless_q(const QPlace& P) {
    DefectReport rep;
    rep.field_dim = 1;
    if (P.real) {
        rep.residue_dim = -1;
        rep.note = "no residue field in scope";
        return rep;
    }
    rep.residue_dim = 0;  // finite residue field
    rep.one_defectless = rep.field_dim == rep.residue_dim + 1;
    return rep;
}

DefectReport one_defectless_fqt(const FqtGround& g, const FqtPlace& P) {
    DefectReport rep;
    rep.field_dim = 1;
    (void)g.residue_data(P);  // materialize to confirm the place is honest
    rep.residue_dim = 0;
    rep.one_defectless = true;
    return rep;
}

DefectReport one_defectless_trivial(const FieldDescriptor& F) {
    DefectReport rep;
    rep.field_dim = kronecker_dimension(F);
    rep.residue_dim = rep.field_dim;  // trivial valuation: residue field is the field itself
    rep.one_defectless = false;
    rep.note = "trivial valuation: dimension drop is 0";
    return rep;
}

}  // namespace valforge
