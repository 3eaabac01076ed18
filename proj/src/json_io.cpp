#include "hermlat/json_io.hpp"

#include <sstream>

namespace hermlat {

namespace {

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rat parse_rat(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Rat r;
        if (r.set_str(j.get<std::string>(), 10) != 0) throw ParseError(what);
        r.canonicalize();
        return r;
    }
    throw ParseError(what);
}

Int parse_int(const Json& j, const char* what) {
    Rat r = parse_rat(j, what);
    if (r.get_den() != 1) throw ParseError(what);
    return r.get_num();
}

}  // namespace

Json int_to_json(const Int& n) {
    if (n.fits_slong_p()) return Json(n.get_si());
    return Json(n.get_str());
}

Json elem_to_json(const KRat& x) {
    if (x.delta == 0) {
        if (x.a.get_den() == 1 && x.a.get_num().fits_slong_p()) return Json(x.a.get_num().get_si());
        return Json(rat_str(x.a));
    }
    Int u, v, den;
    kr_half_coords(x, u, v, den);
    if (den == 1 && kr_is_integral(x)) return Json::array({int_to_json(u), int_to_json(v)});
    return Json::array({int_to_json(u), int_to_json(v), int_to_json(den)});
}

KRat json_to_elem(int delta, const Json& j) {
    if (j.is_number_integer() || (j.is_string() && delta != 0))
        return j.is_string() ? kr_parse(delta, j.get<std::string>())
                             : KRat(delta, Rat(static_cast<long>(j.get<long long>())), 0);
    if (j.is_string()) return KRat(parse_rat(j, "element"));
    if (j.is_array() && (j.size() == 2 || j.size() == 3)) {
        if (delta == 0) throw ParseError("coordinate pair in a rational context");
        Int u = parse_int(j[0], "element");
        Int v = parse_int(j[1], "element");
        Int den = j.size() == 3 ? parse_int(j[2], "element") : Int(1);
        if (den == 0) throw ParseError("element denominator");
        Rat a = Rat(u) / (2 * den);
        Rat b = Rat(v) / (2 * den);
        a.canonicalize();
        b.canonicalize();
        return KRat(delta, a, b);
    }
    throw ParseError("element");
}

Json matrix_to_json(const ExactMatrix& m) {
    Json j;
    if (m.tag.quadratic())
        j["ring"] = m.tag.delta;
    else
        j["ring"] = m.tag.kind == RingKind::Z ? "Z" : "Q";
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.cols; ++k) row.push_back(elem_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

ExactMatrix json_to_matrix(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("entries")) throw ParseError("matrix");
    RingTag tag;
    if (j["ring"].is_string()) {
        std::string r = j["ring"].get<std::string>();
        if (r == "Z")
            tag = RingTag::Zt();
        else if (r == "Q")
            tag = RingTag::Qt();
        else
            throw ParseError("matrix.ring");
    } else {
        int delta = j["ring"].get<int>();
        if (!supported_discriminant(delta)) throw ParseError("matrix.ring");
        tag = RingTag::OKt(delta);
    }
    const Json& rows = j["entries"];
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix.entries");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows[0].size());
    ExactMatrix m(tag, r, c);
    for (int i = 0; i < r; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
            throw ParseError("matrix.entries");
        for (int k = 0; k < c; ++k) m.at(i, k) = json_to_elem(tag.delta, rows[i][k]);
    }
    if (j.contains("rows") && j["rows"].get<int>() != r) throw ParseError("matrix.rows");
    if (j.contains("cols") && j["cols"].get<int>() != c) throw ParseError("matrix.cols");
    if (tag.integral() && !mat_is_integral(m)) tag.kind = tag.quadratic() ? RingKind::K : RingKind::Q;
    m.tag = tag;
    return m;
}

Json lattice_to_json(const HermLattice& l) {
    Json j;
    j["ring"] = l.space.ring.delta;
    j["gram"] = matrix_to_json(l.space.gram);
    bool ident = l.basis == ExactMatrix::identity(l.basis.tag, l.space.n);
    if (!ident) j["basis"] = matrix_to_json(l.basis);
    return j;
}

HermLattice json_to_lattice(const Json& j) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("gram")) throw ParseError("lattice");
    int delta = j["ring"].get<int>();
    if (!supported_discriminant(delta)) throw ParseError("lattice.ring");
    RingDesc ring = make_ring(delta);

    Json gram_json = j["gram"];
    if (gram_json.is_array()) {
        // bare array of rows shorthand
        Json wrapped;
        wrapped["ring"] = delta;
        wrapped["entries"] = gram_json;
        gram_json = wrapped;
    } else if (gram_json.is_object() && !gram_json.contains("ring")) {
        gram_json["ring"] = delta;
    }
    ExactMatrix gram = json_to_matrix(gram_json);
    if (gram.tag.delta != 0 && gram.tag.delta != delta) throw ParseError("lattice.gram");

    if (!j.contains("basis")) return standard_lattice(ring, gram);
    Json basis_json = j["basis"];
    if (basis_json.is_array()) {
        Json wrapped;
        wrapped["ring"] = delta;
        wrapped["entries"] = basis_json;
        basis_json = wrapped;
    }
    ExactMatrix basis = json_to_matrix(basis_json);
    return lattice_in_space(make_space(ring, gram), basis);
}

Json disc_group_to_json(const DiscGroup& g) {
    Json j;
    Json divs = Json::array();
    for (const auto& d : g.divisors) divs.push_back(elem_to_json(kr_from_elem(d)));
    j["divisors"] = std::move(divs);
    j["order"] = int_to_json(g.order);
    Json shape = Json::array();
    for (const auto& q : g.shape) shape.push_back(int_to_json(q));
    j["shape"] = std::move(shape);
    return j;
}

Json chain_report_to_json(const ChainReport& r) {
    Json j;
    j["holds"] = r.holds;
    j["quotient_1"] = disc_group_to_json(r.quotient_1);
    j["quotient_2"] = disc_group_to_json(r.quotient_2);
    j["total_index"] = int_to_json(r.total_index);
    j["multiplicative"] = r.multiplicative;
    return j;
}

Json reduction_to_json(const ModPiReduction& r) {
    Json j;
    j["p"] = r.p;
    j["residue"] = matrix_to_json(r.residue);
    j["radical_dim"] = r.radical_dim;
    j["radical_basis"] = matrix_to_json(r.radical_basis);
    return j;
}

Json solution_set_to_json(const RepSolutionSet& s) {
    Json j;
    j["t"] = int_to_json(s.t);
    j["count"] = int_to_json(s.count);
    Json vs = Json::array();
    for (const auto& x : s.vectors) {
        Json v = Json::array();
        for (const auto& c : x) v.push_back(elem_to_json(kr_from_elem(c)));
        vs.push_back(std::move(v));
    }
    j["vectors"] = std::move(vs);
    return j;
}

Json case_profile_to_json(const CaseProfile& p) {
    Json j;
    j["name"] = p.name;
    j["ring"] = p.delta;
    if (p.d != 0)
        j["d"] = p.d;
    else
        j["d"] = nullptr;
    j["n"] = p.n;
    j["signature"] = Json::array({p.sig.first, p.sig.second});
    j["dim_A"] = p.dim_a;
    j["pol_degree"] = int_to_json(p.pol_degree);
    Json q1 = Json::array(), q2 = Json::array();
    for (const auto& q : p.quotient_1) q1.push_back(int_to_json(q));
    for (const auto& q : p.quotient_2) q2.push_back(int_to_json(q));
    j["quotient_1"] = std::move(q1);
    j["quotient_2"] = std::move(q2);
    j["zrank"] = p.zrank;
    j["excluded_cycle_t"] = p.excluded_cycle_t;
    j["radical_dim"] = p.radical_dim;
    if (p.has_l_dual_shape) {
        Json s = Json::array();
        for (const auto& q : p.l_dual_shape) s.push_back(int_to_json(q));
        j["l_dual_quotient"] = std::move(s);
    }
    if (p.has_l_pi_shape) {
        Json s = Json::array();
        for (const auto& q : p.l_pi_shape) s.push_back(int_to_json(q));
        j["l_pi_quotient"] = std::move(s);
    }
    if (p.has_sym_disc) j["sym_disc"] = int_to_json(p.sym_disc);
    return j;
}

Json case_report_to_json(const CaseReport& r) {
    Json j;
    j["case"] = r.name;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["id"] = c.id;
        cj["expected"] = c.expected;
        cj["actual"] = c.actual;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["pass"] = r.pass;
    return j;
}

}  // namespace hermlat
