#include "nccr/mf.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"

namespace nccr {

namespace {

// compare both products against sign*f*I; first offending entry reported
std::optional<ValidationWitness> check_sign(const MatrixFactorization& mf, int sign) {
    size_t n = mf.phi.rows();
    Polynomial target = mf.ring.f.scalar_mul(Rational(sign));
    const char* names[2] = {"phi*psi", "psi*phi"};
    for (int which = 0; which < 2; ++which) {
        PolyMatrix prod = which == 0 ? mf.phi * mf.psi : mf.psi * mf.phi;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const Polynomial& expect = i == j ? target : Polynomial();
                if (!(prod.at(i, j) == expect))
                    return ValidationWitness{names[which], i, j, prod.at(i, j), expect};
            }
    }
    return std::nullopt;
}

}  // namespace

Validation validate(const MatrixFactorization& mf) {
    if (mf.phi.rows() != mf.phi.cols() || mf.psi.rows() != mf.psi.cols() ||
        mf.phi.rows() != mf.psi.rows())
        throw std::invalid_argument("validate: matrices must be square of equal size");
    if (mf.ring.f.is_zero()) throw std::invalid_argument("validate: f must be nonzero");
    Validation v;
    std::vector<int> signs = mf.sign == 0 ? std::vector<int>{1, -1} : std::vector<int>{mf.sign};
    for (int s : signs) {
        auto w = check_sign(mf, s);
        if (!w) {
            v.ok = true;
            v.sign = s;
            return v;
        }
        if (s == signs.back()) v.witness = w;
    }
    return v;
}

MatrixFactorization syzygy(const MatrixFactorization& mf) {
    Validation v = validate(mf);
    if (!v.ok) throw std::invalid_argument("syzygy: input is not a valid matrix factorization");
    MatrixFactorization out = mf;
    std::swap(out.phi, out.psi);
    out.sign = v.sign;
    return out;
}

MatrixFactorization knorrer(const MatrixFactorization& mf, const std::string& u,
                            const std::string& v) {
    Validation val = validate(mf);
    if (!val.ok) throw std::invalid_argument("knorrer: input is not a valid matrix factorization");
    for (auto& var : mf.ring.variables)
        if (var == u || var == v)
            throw std::invalid_argument("knorrer: variable name '" + (var == u ? u : v) +
                                        "' clashes with the base ring");
    size_t a = mf.phi.rows();
    Polynomial pu = Polynomial::variable(u), pv = Polynomial::variable(v);
    // normalize to phi*psi = +f I so the output lands over uv - f exactly
    PolyMatrix psi_n = val.sign == 1 ? mf.psi : -mf.psi;
    auto block = [&](const PolyMatrix& tl, const PolyMatrix& br) {
        PolyMatrix m(2 * a, 2 * a);
        for (size_t i = 0; i < a; ++i)
            for (size_t j = 0; j < a; ++j) {
                m.at(i, j) = -tl.at(i, j);
                m.at(a + i, a + j) = br.at(i, j);
            }
        for (size_t i = 0; i < a; ++i) {
            m.at(i, a + i) = -pu;
            m.at(a + i, i) = pv;
        }
        return m;
    };
    MatrixFactorization out;
    out.ring.variables = mf.ring.variables;
    out.ring.variables.push_back(u);
    out.ring.variables.push_back(v);
    out.ring.f = pu * pv - mf.ring.f;
    out.phi = block(mf.phi, psi_n);
    out.psi = block(psi_n, mf.phi);
    out.sign = -val.sign;
    if (out.sign == 1) {
        // flip Psi so the stored sign matches the product
        out.psi = -out.psi;
    }
    return out;
}

CokernelPresentation cokernel_presentation(const MatrixFactorization& mf) {
    Validation v = validate(mf);
    if (!v.ok)
        throw std::invalid_argument("cokernel_presentation: input is not a valid matrix factorization");
    CokernelPresentation p;
    p.ring = mf.ring;
    for (size_t j = 0; j < mf.phi.cols(); ++j) {
        std::vector<Polynomial> col;
        for (size_t i = 0; i < mf.phi.rows(); ++i) col.push_back(mf.phi.at(i, j));
        p.columns.push_back(std::move(col));
    }
    return p;
}

namespace {

Polynomial det_rec(const PolyMatrix& m, size_t row, uint64_t colmask,
                   std::map<uint64_t, Polynomial>& memo) {
    size_t n = m.rows();
    if (row == n) return Polynomial(Rational(1));
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Polynomial acc;
    int parity = 0;
    for (size_t j = 0; j < n; ++j) {
        if (colmask & (uint64_t(1) << j)) continue;
        if (!m.at(row, j).is_zero()) {
            Polynomial sub = det_rec(m, row + 1, colmask | (uint64_t(1) << j), memo);
            Polynomial term = m.at(row, j) * sub;
            acc = parity % 2 == 0 ? acc + term : acc - term;
        }
        ++parity;
    }
    memo.emplace(colmask, acc);
    return acc;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    if (m.rows() == 0) return Polynomial(Rational(1));
    if (m.rows() > 12) throw std::invalid_argument("determinant: size beyond supported range");
    std::map<uint64_t, Polynomial> memo;
    return det_rec(m, 0, 0, memo);
}

PolyMatrix adjugate(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: matrix not square");
    size_t n = m.rows();
    PolyMatrix adj(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1);
            for (size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;  // adj(i,j) = cofactor(j,i)
                for (size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc++) = m.at(r, c);
                }
                ++mr;
            }
            Polynomial cof = determinant(minor);
            adj.at(i, j) = (i + j) % 2 == 0 ? cof : -cof;
        }
    return adj;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) return std::nullopt;
    // cancel leading terms; exact quotients always reduce to zero
    const auto& dlt = *d.terms().begin();
    Polynomial rem = p, q;
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().begin();
        if (!rlt.first.divisible_by(dlt.first)) return std::nullopt;
        Monomial m = rlt.first / dlt.first;
        Rational c = rlt.second / dlt.second;
        Polynomial term(c, m);
        q += term;
        rem -= term * d;
    }
    return q;
}

std::optional<MatrixFactorization> solve_partner(const HypersurfaceRing& ring,
                                                 const PolyMatrix& phi) {
    if (phi.rows() != phi.cols() || phi.rows() == 0) return std::nullopt;
    size_t n = phi.rows();
    // phi adj(phi) = det I, so psi = adj(phi) * f / det whenever det/f divides
    // the adjugate entrywise; then phi psi = f I
    Polynomial det = determinant(phi);
    if (det.is_zero()) return std::nullopt;
    auto g = exact_divide(det, ring.f);
    if (!g) return std::nullopt;
    PolyMatrix adj = adjugate(phi);
    MatrixFactorization out;
    out.ring = ring;
    out.phi = phi;
    out.psi = PolyMatrix(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto q = exact_divide(adj.at(i, j), *g);
            if (!q) return std::nullopt;
            out.psi.at(i, j) = *q;
        }
    out.sign = 1;
    Validation v = validate(out);
    if (!v.ok) return std::nullopt;
    return out;
}

namespace {

nlohmann::json matrix_to_json(const PolyMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

PolyMatrix matrix_from_json(const nlohmann::json& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    PolyMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("mf json: ragged matrix");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = parse_polynomial(rows[i][j].get<std::string>());
    }
    return m;
}

}  // namespace

std::string mf_to_json(const MatrixFactorization& mf) {
    nlohmann::json j;
    j["version"] = 1;
    j["ring"] = {{"vars", mf.ring.variables}, {"f", mf.ring.f.to_string()}};
    j["phi"] = matrix_to_json(mf.phi);
    j["psi"] = matrix_to_json(mf.psi);
    j["sign"] = mf.sign;
    return j.dump(2);
}

MatrixFactorization mf_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("mf json: parse failure: ") + e.what());
    }
    if (!j.contains("version") || j["version"] != 1)
        throw std::invalid_argument("mf json: missing or unsupported 'version'");
    MatrixFactorization mf;
    for (auto& v : j.at("ring").at("vars")) mf.ring.variables.push_back(v.get<std::string>());
    mf.ring.f = parse_polynomial(j.at("ring").at("f").get<std::string>());
    mf.phi = matrix_from_json(j.at("phi"));
    if (j.contains("psi")) mf.psi = matrix_from_json(j["psi"]);
    mf.sign = j.contains("sign") ? j["sign"].get<int>() : 0;
    return mf;
}

std::string cokernel_to_json(const CokernelPresentation& p) {
    nlohmann::json j;
    j["version"] = 1;
    j["ring"] = {{"vars", p.ring.variables}, {"f", p.ring.f.to_string()}};
    nlohmann::json cols = nlohmann::json::array();
    for (auto& col : p.columns) {
        nlohmann::json jc = nlohmann::json::array();
        for (auto& poly : col) jc.push_back(poly.to_string());
        cols.push_back(jc);
    }
    j["columns"] = cols;
    return j.dump(2);
}

}  // namespace nccr
