#include "octavic/relations.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "octavic/binary_form.hpp"
#include "octavic/exact_linear.hpp"
#include "octavic/sha256.hpp"
#include "octavic/shioda.hpp"

namespace octavic {

std::vector<std::vector<int>> weighted_monomials(int d, const std::vector<int>& weights) {
    if (d < 0) throw input_error("negative weighted degree");
    for (int w : weights)
        if (w <= 0) throw input_error("weights must be positive");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(weights.size(), 0);
    auto rec = [&](auto&& self, size_t idx, int rem) -> void {
        if (idx == weights.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        const int w = weights[idx];
        for (int e = 0; e * w <= rem; ++e) {
            cur[idx] = e;
            self(self, idx + 1, rem - e * w);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int ta = 0, tb = 0;
        for (int x : a) ta += x;
        for (int x : b) tb += x;
        if (ta != tb) return ta > tb;
        return a > b;  // lex descending
    });
    return out;
}

namespace {

constexpr std::uint64_t kSampleStream = 0x8F1BBCDC4D9F2133ULL;

WeightedMonomial make_wm(const std::vector<int>& e27, int e8) {
    WeightedMonomial m;
    for (size_t i = 0; i < e27.size(); ++i) m.e[i] = e27[i];
    m.e[6] = e8;
    return m;
}

bool term_order_before(const WeightedMonomial& a, const WeightedMonomial& b) {
    int ta = a.total_degree(), tb = b.total_degree();
    if (ta != tb) return ta > tb;
    return a.e > b.e;
}

std::vector<WeightedMonomial> syzygy_basis() {
    std::vector<WeightedMonomial> basis;
    const std::vector<int> w27{2, 3, 4, 5, 6, 7};
    for (int j = 0; j <= 4; ++j)
        for (const auto& e : weighted_monomials(40 - 8 * j, w27)) basis.push_back(make_wm(e, j));
    return basis;
}

std::vector<WeightedMonomial> disc_basis() {
    std::vector<WeightedMonomial> basis;
    for (const auto& e : weighted_monomials(14, {2, 3, 4, 5, 6, 7})) basis.push_back(make_wm(e, 0));
    for (const auto& e : weighted_monomials(6, {2, 3, 4, 5, 6})) {
        std::vector<int> e27(e);
        e27.push_back(0);  // J7 exponent
        basis.push_back(make_wm(e27, 1));
    }
    return basis;
}

struct Sample {
    std::array<Int, 7> J;   // J2..J8 (integral for integer forms)
    Rat J14;
};

std::vector<Sample> draw_samples(int count, std::uint64_t seed, int bound) {
    std::vector<Sample> out;
    out.reserve(static_cast<size_t>(count));
    SplitMix64 master(seed ^ kSampleStream);
    for (int i = 0; i < count; ++i) {
        BinaryForm f = random_form(8, bound, master.next());
        InvariantTuple t = shioda_invariants(f);
        Sample s;
        auto pc = t.point_coords();
        for (int k = 0; k < 7; ++k) {
            if (pc[static_cast<size_t>(k)].get_den() != 1)
                throw validation_error("non-integral invariant for an integer form");
            s.J[static_cast<size_t>(k)] = pc[static_cast<size_t>(k)].get_num();
        }
        s.J14 = t.J14;
        out.push_back(std::move(s));
    }
    return out;
}

Int eval_monomial_int(const std::array<Int, 7>& J, const WeightedMonomial& m) {
    Int v(1);
    for (int k = 0; k < 7; ++k) {
        const int e = m.e[static_cast<size_t>(k)];
        if (e) v *= int_pow(J[static_cast<size_t>(k)], static_cast<unsigned long>(e));
    }
    return v;
}

void sort_terms(RelationPoly& poly) {
    std::sort(poly.terms.begin(), poly.terms.end(),
              [](const auto& a, const auto& b) { return term_order_before(a.first, b.first); });
}

std::string poly_canonical_text(const RelationPoly& poly) {
    std::ostringstream os;
    for (const auto& [m, c] : poly.terms) {
        for (int k = 0; k < 7; ++k) {
            if (k) os << ",";
            os << m.e[static_cast<size_t>(k)];
        }
        os << ":" << rat_to_string(c) << "\n";
    }
    return os.str();
}

nlohmann::json poly_to_json(const RelationPoly& poly) {
    nlohmann::json monos = nlohmann::json::array();
    for (const auto& [m, c] : poly.terms) {
        nlohmann::json jm;
        jm["exponents"] = m.e;
        jm["coefficient"] = rat_to_string(c);
        monos.push_back(std::move(jm));
    }
    nlohmann::json j;
    j["degree"] = poly.weighted_degree;
    j["monomials"] = std::move(monos);
    return j;
}

RelationPoly poly_from_json(const nlohmann::json& j) {
    RelationPoly poly;
    poly.weighted_degree = j.at("degree").get<int>();
    for (const auto& jm : j.at("monomials")) {
        WeightedMonomial m;
        auto ev = jm.at("exponents").get<std::vector<int>>();
        if (ev.size() != 7) throw input_error("exponent vector must have 7 entries");
        for (int k = 0; k < 7; ++k) m.e[static_cast<size_t>(k)] = ev[static_cast<size_t>(k)];
        poly.terms.emplace_back(m, parse_rational(jm.at("coefficient").get<std::string>()));
    }
    return poly;
}

}  // namespace

Rat RelationPoly::evaluate(const std::array<Rat, 7>& J) const {
    std::array<int, 7> maxe{};
    for (const auto& [m, c] : terms)
        for (int k = 0; k < 7; ++k)
            maxe[static_cast<size_t>(k)] = std::max(maxe[static_cast<size_t>(k)], m.e[static_cast<size_t>(k)]);
    std::array<std::vector<Rat>, 7> pows;
    for (int k = 0; k < 7; ++k) {
        auto& tab = pows[static_cast<size_t>(k)];
        tab.resize(static_cast<size_t>(maxe[static_cast<size_t>(k)]) + 1);
        tab[0] = Rat(1);
        for (int e = 1; e <= maxe[static_cast<size_t>(k)]; ++e)
            tab[static_cast<size_t>(e)] = tab[static_cast<size_t>(e - 1)] * J[static_cast<size_t>(k)];
    }
    Rat acc(0);
    for (const auto& [m, c] : terms) {
        Rat v = c;
        for (int k = 0; k < 7; ++k) {
            const int e = m.e[static_cast<size_t>(k)];
            if (e) v *= pows[static_cast<size_t>(k)][static_cast<size_t>(e)];
        }
        acc += v;
    }
    return acc;
}

int syzygy_unknown_count() { return static_cast<int>(syzygy_basis().size()); }
int disc_unknown_count() { return static_cast<int>(disc_basis().size()); }

RelationPoly derive_syzygy(int samples, std::uint64_t seed, int coeff_bound, int held_out,
                           std::string* report) {
    const auto basis = syzygy_basis();
    const int n = static_cast<int>(basis.size());
    if (samples < 2 * n)
        throw input_error("syzygy derivation needs at least " + std::to_string(2 * n) +
                          " samples (2x unknowns), got " + std::to_string(samples));
    if (held_out < 1 || held_out >= samples - n)
        throw input_error("held-out count out of range");

    auto all = draw_samples(samples, seed, coeff_bound);
    const int rows = samples - held_out;

    std::vector<std::vector<Int>> A(static_cast<size_t>(rows), std::vector<Int>(static_cast<size_t>(n)));
    std::vector<Int> b(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        const auto& J = all[static_cast<size_t>(i)].J;
        for (int j = 0; j < n; ++j)
            A[static_cast<size_t>(i)][static_cast<size_t>(j)] = eval_monomial_int(J, basis[static_cast<size_t>(j)]);
        b[static_cast<size_t>(i)] = -int_pow(J[6], 5);
    }

    ExactSolution sol = solve_multimodular(A, b);
    if (!sol.unique)
        throw validation_error("syzygy interpolation is not unique: sampling degeneracy, re-seed");

    RelationPoly F;
    F.weighted_degree = 40;
    for (int j = 0; j < n; ++j) {
        if (sol.x[static_cast<size_t>(j)] != 0)
            F.terms.emplace_back(basis[static_cast<size_t>(j)], sol.x[static_cast<size_t>(j)]);
    }
    WeightedMonomial monic;
    monic.e = {0, 0, 0, 0, 0, 0, 5};
    F.terms.emplace_back(monic, Rat(1));
    sort_terms(F);

    // exact residues on the disjoint held-out set
    int checked = 0;
    for (int i = rows; i < samples; ++i) {
        std::array<Rat, 7> J;
        for (int k = 0; k < 7; ++k) J[static_cast<size_t>(k)] = Rat(all[static_cast<size_t>(i)].J[static_cast<size_t>(k)]);
        if (F.evaluate(J) != 0)
            throw validation_error(
                "syzygy held-out residue nonzero: transvectant or constant convention mismatch");
        ++checked;
    }
    if (report) {
        std::ostringstream os;
        os << "syzygy: " << F.terms.size() << " terms, " << rows << " equations, "
           << checked << " held-out residues all exactly zero";
        *report = os.str();
    }
    return F;
}

RelationPoly derive_disc_expr(int samples, std::uint64_t seed, int coeff_bound, int held_out,
                              std::string* report) {
    const auto basis = disc_basis();
    const int n = static_cast<int>(basis.size());
    if (samples < 2 * n)
        throw input_error("disc derivation needs at least " + std::to_string(2 * n) + " samples");
    if (held_out < 1 || held_out >= samples - n)
        throw input_error("held-out count out of range");

    // separate stream from the syzygy samples
    auto all = draw_samples(samples, seed ^ 0xD6E8FEB86659FD93ULL, coeff_bound);
    const int rows = samples - held_out;

    std::vector<std::vector<Rat>> A(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(n)));
    std::vector<Rat> b(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        const auto& J = all[static_cast<size_t>(i)].J;
        for (int j = 0; j < n; ++j)
            A[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rat(eval_monomial_int(J, basis[static_cast<size_t>(j)]));
        b[static_cast<size_t>(i)] = all[static_cast<size_t>(i)].J14;
    }

    ExactSolution sol;
    try {
        sol = solve_exact_linear(A, b);
    } catch (const validation_error& e) {
        throw validation_error(std::string("discriminant expression representation failure: ") +
                               e.what());
    }
    if (!sol.unique)
        throw validation_error("disc interpolation is not unique: sampling degeneracy, re-seed");

    RelationPoly P;
    P.weighted_degree = 14;
    for (int j = 0; j < n; ++j) {
        if (sol.x[static_cast<size_t>(j)] != 0)
            P.terms.emplace_back(basis[static_cast<size_t>(j)], sol.x[static_cast<size_t>(j)]);
    }
    sort_terms(P);

    int checked = 0;
    for (int i = rows; i < samples; ++i) {
        std::array<Rat, 7> J;
        for (int k = 0; k < 7; ++k) J[static_cast<size_t>(k)] = Rat(all[static_cast<size_t>(i)].J[static_cast<size_t>(k)]);
        if (P.evaluate(J) != all[static_cast<size_t>(i)].J14)
            throw validation_error("disc expression held-out mismatch");
        ++checked;
    }
    if (report) {
        std::ostringstream os;
        os << "disc_expr: " << P.terms.size() << " terms, " << rows << " equations, "
           << checked << " held-out values matched exactly";
        *report = os.str();
    }
    return P;
}

RelationSet derive_relations(const DeriveOptions& opt) {
    RelationSet rel;
    const int n_syz = syzygy_unknown_count();
    const int n_disc = disc_unknown_count();
    const int s_syz = opt.syzygy_samples > 0 ? opt.syzygy_samples : 2 * n_syz + opt.held_out;
    const int s_disc = opt.disc_samples > 0 ? opt.disc_samples : 2 * n_disc + opt.held_out;
    std::string rep_s, rep_d;
    rel.syzygy = derive_syzygy(s_syz, opt.seed, opt.coeff_bound, opt.held_out, &rep_s);
    rel.disc_expr = derive_disc_expr(s_disc, opt.seed, opt.coeff_bound, opt.held_out, &rep_d);
    rel.provenance.seed = opt.seed;
    rel.provenance.samples = s_syz;
    rel.provenance.validation = rep_s + "; " + rep_d;
    rel.provenance.hash = rel.content_hash();
    return rel;
}

std::string RelationSet::content_hash() const {
    Sha256 h;
    h.update("octavic-relations-v1\nsyzygy\n");
    h.update(poly_canonical_text(syzygy));
    h.update("disc_expr\n");
    h.update(poly_canonical_text(disc_expr));
    return h.hex_digest();
}

std::string RelationSet::to_json() const {
    nlohmann::json j;
    j["format"] = "octavic-relations";
    j["version"] = 1;
    j["weights"] = {2, 3, 4, 5, 6, 7, 8};
    j["syzygy"] = poly_to_json(syzygy);
    j["disc_expr"] = poly_to_json(disc_expr);
    j["provenance"] = {{"seed", provenance.seed},
                       {"samples", provenance.samples},
                       {"hash", provenance.hash},
                       {"validation", provenance.validation}};
    return j.dump(1);
}

RelationSet RelationSet::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("format", "") != "octavic-relations")
        throw input_error("not a relation artifact");
    RelationSet rel;
    rel.syzygy = poly_from_json(j.at("syzygy"));
    rel.disc_expr = poly_from_json(j.at("disc_expr"));
    const auto& p = j.at("provenance");
    rel.provenance.seed = p.at("seed").get<std::uint64_t>();
    rel.provenance.samples = p.at("samples").get<int>();
    rel.provenance.hash = p.at("hash").get<std::string>();
    rel.provenance.validation = p.value("validation", "");
    return rel;
}

void RelationSet::save(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw validation_error("cannot write relation artifact: " + path);
    os << to_json() << "\n";
}

RelationSet RelationSet::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw validation_error("cannot read relation artifact: " + path);
    std::stringstream buf;
    buf << is.rdbuf();
    RelationSet rel = from_json(buf.str());
    if (rel.content_hash() != rel.provenance.hash)
        throw validation_error("relation artifact hash mismatch: file is corrupt or was edited");
    return rel;
}

namespace {

std::array<Rat, 7> point_rats(const WeightedPoint& t) {
    return t.coords();
}

}  // namespace

bool syzygy_check(const RelationSet& rel, const WeightedPoint& t) {
    if (!rel.initialized()) throw validation_error("relation set not initialized");
    return rel.syzygy.evaluate(point_rats(t)) == 0;
}

bool disc_check(const RelationSet& rel, const WeightedPoint& t) {
    if (!rel.initialized() || rel.disc_expr.empty())
        throw validation_error("relation set not initialized");
    return rel.disc_expr.evaluate(point_rats(t)) != 0;
}

}  // namespace octavic
