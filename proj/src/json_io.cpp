#include "qtorus/json_io.hpp"

#include "qtorus/error.hpp"

#include <fstream>
#include <sstream>

namespace qtorus::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::invalid_input, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

Integer as_integer(const Json& j) {
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (!j.is_string())
        bad("integer must be a decimal string or a number");
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0)
        bad("'" + j.get<std::string>() + "' is not a decimal integer");
    return out;
}

std::string str(const Integer& z) { return z.get_str(); }

Json rational_json(const Rational& r) { return Json::array({str(r.get_num()), str(r.get_den())}); }

Rational rational_from(const Json& j) {
    if (j.is_array() && j.size() == 2) {
        const Integer den = as_integer(j[1]);
        if (den == 0)
            bad("zero denominator");
        Rational r(as_integer(j[0]), den);
        r.canonicalize();
        return r;
    }
    return Rational(as_integer(j));
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_input, e.what());
    }
}

} // namespace

Json to_json(const Cyclotomic& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coeffs())
        coeffs.push_back(rational_json(r));
    return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string())
        return Cyclotomic(Rational(as_integer(j)));
    return guarded([&] {
        const std::int64_t m = as_int(field(j, "conductor"), "conductor");
        const Json& cs = field(j, "coeffs");
        if (!cs.is_array())
            bad("coeffs must be an array");
        std::vector<Rational> coeffs;
        for (const auto& c : cs)
            coeffs.push_back(rational_from(c));
        if (m >= 1 && coeffs.size() < static_cast<std::size_t>(euler_phi(m)))
            coeffs.resize(static_cast<std::size_t>(euler_phi(m)));
        return Cyclotomic(m, std::move(coeffs));
    });
}

Json to_json(const Degree& a) { return a.values(); }

Degree degree_from_json(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n)
        bad("degree must be an array of " + std::to_string(n) + " integers");
    Degree a(n);
    for (std::size_t i = 0; i < n; ++i)
        a[i] = as_int(j[i], "degree entry");
    return a;
}

Degree parse_degree(const std::string& text, std::size_t n) {
    IntVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size())
                bad("bad degree entry '" + item + "'");
        } catch (const std::logic_error&) {
            bad("bad degree entry '" + item + "'");
        }
    }
    if (v.size() != n)
        bad("degree '" + text + "' must have " + std::to_string(n) + " entries");
    return Degree(std::move(v));
}

Json to_json(const QMatrix& q) { return {{"n", q.n()}, {"conductor", q.conductor()}, {"exps", q.exps()}}; }

QMatrixPtr torus_from_json(const Json& j) {
    return guarded([&] {
        const std::int64_t n = as_int(field(j, "n"), "n");
        const std::int64_t m = as_int(field(j, "conductor"), "conductor");
        const Json& e = field(j, "exps");
        if (n < 1)
            bad("n must be positive");
        if (!e.is_array() || e.size() != static_cast<std::size_t>(n))
            bad("exps must be an n x n array");
        IntMatrix exps;
        for (const auto& row : e) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
                bad("exps must be an n x n array");
            IntVector r;
            for (const auto& x : row)
                r.push_back(as_int(x, "exponent"));
            exps.push_back(std::move(r));
        }
        return make_qmatrix(m, std::move(exps));
    });
}

Json to_json(const TorusElement& x) {
    Json terms = Json::array();
    for (const auto& [a, c] : x.terms())
        terms.push_back({{"exp", to_json(a)}, {"coef", to_json(c)}});
    return {{"terms", terms}};
}

TorusElement torus_element_from_json(const QMatrixPtr& q, const Json& j) {
    return guarded([&] {
        TorusElement x(q);
        for (const auto& t : field(j, "terms"))
            x.add_term(degree_from_json(field(t, "exp"), q->n()), cyclotomic_from_json(field(t, "coef")));
        return x;
    });
}

Json to_json(const HC1Element& x) {
    Json terms = Json::array();
    for (const auto& [key, c] : x.terms())
        terms.push_back({{"i", key.first}, {"r", to_json(key.second)}, {"coef", to_json(c)}});
    return {{"terms", terms}};
}

HC1Element hc1_from_json(const QMatrixPtr& q, const Json& j) {
    return guarded([&] {
        HC1Element h(q);
        for (const auto& t : field(j, "terms")) {
            const std::int64_t i = as_int(field(t, "i"), "symbol index");
            if (i < 0 || static_cast<std::size_t>(i) >= q->n())
                bad("symbol index out of range");
            h.add_symbol(static_cast<std::size_t>(i), degree_from_json(field(t, "r"), q->n()),
                         cyclotomic_from_json(field(t, "coef")));
        }
        return h;
    });
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    return guarded([&] {
        if (!j.is_array() || j.empty())
            bad("matrix must be a non-empty array of rows");
        std::vector<Vector> rows;
        for (const auto& r : j) {
            if (!r.is_array() || r.size() != j[0].size())
                bad("matrix rows must have equal length");
            Vector row;
            for (const auto& x : r)
                row.push_back(cyclotomic_from_json(x));
            rows.push_back(std::move(row));
        }
        return Matrix::from_rows(rows);
    });
}

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& c : v)
        out.push_back(to_json(c));
    return out;
}

Json to_json(const ToroidalElement& x) {
    Json mat = Json::array();
    for (const auto& [a, m] : x.matpart())
        mat.push_back({{"entries", to_json(m)}, {"exp", to_json(a)}});
    return {{"mat", mat}, {"hc1", to_json(x.hcpart())}, {"der", to_json(Vector(x.derpart()))}};
}

ToroidalElement toroidal_from_json(const QMatrixPtr& q, std::size_t d, const Json& j) {
    return guarded([&] {
        if (!j.is_object())
            bad("element must be an object");
        ToroidalElement x(q, d);
        if (j.contains("mat"))
            for (const auto& t : j.at("mat")) {
                const Matrix m = matrix_from_json(field(t, "entries"));
                if (m.rows() != d || m.cols() != d)
                    bad("matrix term must be d x d");
                x.add_matrix(degree_from_json(field(t, "exp"), q->n()), m);
            }
        if (j.contains("hc1"))
            x.add_hc1(hc1_from_json(q, j.at("hc1")));
        if (j.contains("der")) {
            const Json& der = j.at("der");
            if (!der.is_array() || der.size() != q->n())
                bad("der must have n entries");
            for (std::size_t i = 0; i < q->n(); ++i)
                x.add_derivation(i, cyclotomic_from_json(der[i]));
        }
        return x;
    });
}

Json to_json(const Weight& w) {
    auto list = [](const std::vector<Rational>& v) {
        Json out = Json::array();
        for (const auto& r : v)
            out.push_back(rational_json(r));
        return out;
    };
    return {{"finite", list(w.finite)}, {"delta", list(w.delta)}, {"omega", list(w.omega)}};
}

Weight weight_from_json(const Json& j) {
    return guarded([&] {
        auto list = [](const Json& a) {
            if (!a.is_array())
                bad("weight coordinates must be arrays");
            std::vector<Rational> out;
            for (const auto& x : a)
                out.push_back(rational_from(x));
            return out;
        };
        Weight w;
        w.finite = list(field(j, "finite"));
        w.delta = list(field(j, "delta"));
        w.omega = list(field(j, "omega"));
        if (w.delta.size() != w.omega.size())
            bad("delta and omega must have the same length");
        return w;
    });
}

Json to_json(const EvalPoints& p) {
    Json pts = Json::array();
    for (const auto& list : p.values) {
        Json row = Json::array();
        for (const auto& c : list)
            row.push_back(to_json(c));
        pts.push_back(std::move(row));
    }
    return {{"points", pts}};
}

EvalPoints points_from_json(const Json& j) {
    return guarded([&] {
        const Json& pts = j.is_array() ? j : field(j, "points");
        if (!pts.is_array())
            bad("points must be an array of lists");
        EvalPoints p;
        for (const auto& list : pts) {
            if (!list.is_array())
                bad("points must be an array of lists");
            std::vector<Cyclotomic> row;
            for (const auto& c : list)
                row.push_back(cyclotomic_from_json(c));
            p.values.push_back(std::move(row));
        }
        return p;
    });
}

Json to_json(const WedderburnReport& w) {
    return {{"dim", w.dim}, {"center_dim", w.center_dim}, {"blocks", w.blocks}, {"size", w.size}, {"simple", w.simple}};
}

Json to_json(const MatrixRep& r) {
    Json images = Json::array();
    for (const auto& m : r.images)
        images.push_back(to_json(m));
    Json values = Json::array();
    for (const auto& v : r.values)
        values.push_back(to_json(v));
    return {{"size", r.size()}, {"values", values}, {"periods", r.periods}, {"images", images},
            {"relations_hold", verify_relations(r)}};
}

Json to_json(const WindowReport& r) {
    Json dims = Json::array();
    for (const auto& [m, d] : r.dims)
        dims.push_back({{"grade", to_json(m)}, {"dim", d}});
    Json weight = Json::array();
    for (const auto& x : r.seed_weight)
        weight.push_back(rational_json(x));
    return {{"window", r.bound}, {"seed_grade", to_json(r.seed_grade)}, {"seed_weight", weight}, {"dims", dims}};
}

Json to_json(const Decomposition& d) {
    Json comps = Json::array();
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        Json item = to_json(d.components[c]);
        item["class"] = d.class_of[c];
        comps.push_back(std::move(item));
    }
    return {{"window", d.bound},       {"classes", d.classes},
            {"components", comps},     {"direct", d.direct},
            {"covers_interior", d.covers_interior}};
}

ModuleSpec module_spec_from_json(const Json& j) {
    return guarded([&] {
        ModuleSpec s;
        s.torus = torus_from_json(field(j, "torus"));
        if (j.contains("d")) {
            const std::int64_t d = as_int(j.at("d"), "d");
            if (d < 2)
                bad("d must be at least 2");
            s.d = static_cast<std::size_t>(d);
        }
        if (j.contains("points"))
            s.points = points_from_json(j.at("points"));
        else
            s.points.values.assign(s.torus->n(), {Cyclotomic(1L)});
        if (j.contains("rep")) {
            if (!j.at("rep").is_string())
                bad("rep must be a string");
            s.rep = j.at("rep").get<std::string>();
        }
        if (j.contains("window"))
            s.window = as_int(j.at("window"), "window");
        validate_points(*s.torus, s.points);
        parse_rep_spec(s.rep);
        return s;
    });
}

Json to_json(const ModuleSpec& s) {
    return {{"torus", to_json(*s.torus)},
            {"d", s.d},
            {"points", to_json(s.points).at("points")},
            {"rep", s.rep},
            {"window", s.window}};
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        bad("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        bad("'" + path + "': " + e.what());
    }
}

} // namespace qtorus::io
