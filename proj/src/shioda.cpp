#include "octavic/shioda.hpp"

#include <nlohmann/json.hpp>

namespace octavic {

CovariantSet covariants(const BinaryForm& f) {
    if (f.degree() != 8) throw input_error("covariants require a degree-8 form");
    CovariantSet cs;
    cs.g = transvectant(f, f, 4);
    cs.k = transvectant(f, f, 6);
    cs.h = transvectant(cs.k, cs.k, 2);
    cs.m = transvectant(f, cs.k, 4);
    cs.n = transvectant(f, cs.h, 4);
    cs.p = transvectant(cs.g, cs.k, 4);
    cs.q = transvectant(cs.g, cs.h, 4);
    return cs;
}

namespace {

Rat big(long a, unsigned long e) { return Rat(int_pow(Int(a), e)); }

}  // namespace

InvariantTuple shioda_invariants(const BinaryForm& f) {
    if (f.degree() != 8) throw input_error("invariants require a degree-8 form");
    const CovariantSet cs = covariants(f);
    InvariantTuple J;
    J.J2 = big(2, 2) * 5 * 7 * transvectant(f, f, 8).scalar_value();
    J.J3 = Rat(1, 3) * big(2, 4) * 25 * big(7, 3) * transvectant(f, cs.g, 8).scalar_value();
    J.J4 = big(2, 9) * 3 * big(7, 4) * transvectant(cs.k, cs.k, 4).scalar_value();
    J.J5 = big(2, 9) * 5 * big(7, 5) * transvectant(cs.m, cs.k, 4).scalar_value();
    J.J6 = big(2, 14) * 9 * big(7, 6) * transvectant(cs.k, cs.h, 4).scalar_value();
    J.J7 = big(2, 14) * 15 * big(7, 7) * transvectant(cs.m, cs.h, 4).scalar_value();
    J.J8 = big(2, 17) * 75 * big(7, 9) * transvectant(cs.p, cs.h, 4).scalar_value();
    J.J9 = big(2, 19) * 45 * big(7, 9) * transvectant(cs.n, cs.h, 4).scalar_value();
    J.J10 = big(2, 22) * 225 * big(7, 11) * transvectant(cs.q, cs.h, 4).scalar_value();
    J.J14 = discriminant(f);
    return J;
}

WeightedPoint moduli_point(const BinaryForm& f) {
    InvariantTuple J = shioda_invariants(f);
    if (J.J14 == 0)
        throw math_domain_error("discriminant vanishes: the curve is singular");
    bool all_zero = true;
    for (const auto& c : J.point_coords())
        if (c != 0) { all_zero = false; break; }
    if (all_zero) throw math_domain_error("degenerate form: all moduli coordinates vanish");
    return WeightedPoint(J.point_coords());
}

std::string InvariantTuple::to_json() const {
    nlohmann::json j;
    j["J2"] = rat_to_string(J2);
    j["J3"] = rat_to_string(J3);
    j["J4"] = rat_to_string(J4);
    j["J5"] = rat_to_string(J5);
    j["J6"] = rat_to_string(J6);
    j["J7"] = rat_to_string(J7);
    j["J8"] = rat_to_string(J8);
    j["J9"] = rat_to_string(J9);
    j["J10"] = rat_to_string(J10);
    j["J14"] = rat_to_string(J14);
    return j.dump();
}

InvariantTuple InvariantTuple::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    InvariantTuple t;
    t.J2 = parse_rational(j.at("J2").get<std::string>());
    t.J3 = parse_rational(j.at("J3").get<std::string>());
    t.J4 = parse_rational(j.at("J4").get<std::string>());
    t.J5 = parse_rational(j.at("J5").get<std::string>());
    t.J6 = parse_rational(j.at("J6").get<std::string>());
    t.J7 = parse_rational(j.at("J7").get<std::string>());
    t.J8 = parse_rational(j.at("J8").get<std::string>());
    t.J9 = parse_rational(j.at("J9").get<std::string>());
    t.J10 = parse_rational(j.at("J10").get<std::string>());
    t.J14 = parse_rational(j.at("J14").get<std::string>());
    return t;
}

}  // namespace octavic
