#include "nilcensus/report.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace nilcensus {

namespace {

std::string rat_num(const BigRat& r) { return numerator(r).str(); }
std::string rat_den(const BigRat& r) { return denominator(r).str(); }

Json rational_json(const BigRat& r) {
    return Json{{"num", rat_num(r)}, {"den", rat_den(r)}};
}

BigRat rational_from_json(const Json& j) {
    return BigRat(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

std::string basis_row(const FpMat& m, Index r) {
    std::ostringstream os;
    for (Index j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(r, j);
    return os.str();
}

Json subspace_json(const Subspace& s) {
    Json rows = Json::array();
    for (Index r = 0; r < s.dim(); ++r) rows.push_back(basis_row(s.basis(), r));
    return Json{{"dim", s.dim()}, {"basis", rows}};
}

std::string strategy_name(EnumStrategy s) {
    return s == EnumStrategy::JoinClosure ? "join-closure" : "filter";
}

EnumStrategy strategy_from_name(const std::string& s) {
    if (s == "join-closure") return EnumStrategy::JoinClosure;
    if (s == "filter") return EnumStrategy::Filter;
    throw std::invalid_argument("unknown strategy: " + s);
}

}  // namespace

int stratum_of(const NilpotentAlgebra& algebra, const Subspace& ideal) {
    if (ideal.is_zero()) return 0;
    const auto& chain = algebra.annihilator_chain();
    for (int t = 1; t <= chain.length(); ++t)
        if (contains(chain.layers[static_cast<std::size_t>(t - 1)], ideal, algebra.modulus()))
            return t;
    throw std::logic_error("stratum_of: ideal not contained in the full algebra");
}

NilpotentAlgebra parse_builtin_algebra(const std::string& text) {
    static const std::regex grammar(R"(^\s*(uniserial|binomial|triangular)\((\d+)\)@(\d+)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, grammar))
        throw std::invalid_argument("not a builtin algebra: expected name(arg)@p, got '" + text +
                                    "'");
    return build_family_at(m[1].str() + "(" + m[2].str() + ")", std::stoll(m[3].str()));
}

NilpotentAlgebra build_family_at(const std::string& family_text, std::int64_t p) {
    static const std::regex grammar(R"(^\s*(uniserial|binomial|triangular)\((\d+)\)\s*$)");
    std::smatch m;
    if (!std::regex_match(family_text, m, grammar))
        throw std::invalid_argument("not an algebra family: expected name(arg), got '" +
                                    family_text + "'");
    const PrimeModulus prime(p);
    const int arg = std::stoi(m[2].str());
    const std::string name = m[1].str();
    if (name == "uniserial") return NilpotentAlgebra::uniserial(prime, arg);
    if (name == "binomial") return NilpotentAlgebra::binomial(prime, arg);
    return NilpotentAlgebra::triangular(prime, arg);
}

NilpotentAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
    Json j = Json::parse(in);
    const PrimeModulus p(j.at("p").get<std::int64_t>());
    const Index n = j.at("dim").get<Index>();
    std::vector<std::string> labels;
    if (j.contains("basis")) labels = j.at("basis").get<std::vector<std::string>>();
    std::vector<ProductEntry> products;
    for (const auto& e : j.value("products", Json::array())) {
        ProductEntry entry;
        entry.i = e.at("i").get<Index>();
        entry.j = e.at("j").get<Index>();
        for (const auto& [key, value] : e.at("coords").items())
            entry.coords.emplace_back(static_cast<Index>(std::stoll(key)),
                                      value.get<Scalar>());
        products.push_back(std::move(entry));
    }
    return NilpotentAlgebra::custom(p, n, std::move(labels), products);
}

NilpotentAlgebra resolve_algebra(const std::string& source) {
    try {
        return parse_builtin_algebra(source);
    } catch (const std::invalid_argument&) {
        if (std::ifstream(source).good()) return load_algebra_file(source);
        throw;
    }
}

Json algebra_json(const NilpotentAlgebra& algebra) {
    const auto& chain = algebra.annihilator_chain();
    return Json{{"descriptor", algebra.descriptor()},
                {"p", algebra.modulus().value()},
                {"dim", algebra.dim()},
                {"e", algebra.nil_index()},
                {"basis", algebra.basis_labels()},
                {"chain_dims", chain.dims},
                {"layer_dims", chain.layer_dims}};
}

Json describe_report(const NilpotentAlgebra& algebra) {
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", "describe"},
                {"algebra", algebra_json(algebra)}};
}

Json census_report_json(const NilpotentAlgebra& algebra, const CensusReport& report) {
    Json strata = Json::array();
    for (const auto& row : report.strata) {
        Json item{{"t", row.t},
                  {"d", row.d_t},
                  {"i_within", row.i_within.str()},
                  {"s_within", row.s_within.str()}};
        if (row.q_t) item["q"] = *row.q_t;
        strata.push_back(std::move(item));
    }
    Json out{{"schema_version", kReportSchemaVersion},
             {"command", report.fibers ? "fibers" : "count"},
             {"algebra", algebra_json(algebra)},
             {"strategy", strategy_name(report.strategy)},
             {"i", report.i_count.str()},
             {"s", report.s_count.str()},
             {"ratio", rational_json(report.ratio)},
             {"strata", strata}};

    if (report.fibers) {
        Json fibers = Json::array();
        BigInt ideal_total = 0, subspace_total = 0;
        std::map<std::tuple<int, Index, BigInt>, BigInt> groups;
        for (const auto& [ideal, count] : *report.fibers) {
            const int t = stratum_of(algebra, ideal);
            Json row = subspace_json(ideal);
            row["stratum"] = t;
            row["fiber"] = count.str();
            fibers.push_back(std::move(row));
            ideal_total += 1;
            subspace_total += count;
            groups[{t, ideal.dim(), count}] += 1;
        }
        Json grouped = Json::array();
        for (const auto& [key, ideals] : groups) {
            const auto& [t, dim, fiber] = key;
            grouped.push_back(Json{{"stratum", t},
                                   {"dim", dim},
                                   {"fiber", fiber.str()},
                                   {"ideals", ideals.str()},
                                   {"subspaces", BigInt(ideals * fiber).str()}});
        }
        out["fibers"] = std::move(fibers);
        out["fiber_groups"] = std::move(grouped);
        out["checks"] = Json{{"ideals_total", ideal_total.str()},
                             {"subspaces_total", subspace_total.str()},
                             {"ideals_expected", report.i_count.str()},
                             {"subspaces_expected", report.s_count.str()}};
    }
    return out;
}

CensusReport census_report_from_json(const Json& j) {
    CensusReport rep;
    rep.strategy = strategy_from_name(j.at("strategy").get<std::string>());
    rep.i_count = BigInt(j.at("i").get<std::string>());
    rep.s_count = BigInt(j.at("s").get<std::string>());
    rep.ratio = rational_from_json(j.at("ratio"));
    for (const auto& item : j.at("strata")) {
        StratumData row;
        row.t = item.at("t").get<int>();
        row.d_t = item.at("d").get<Index>();
        row.i_within = BigInt(item.at("i_within").get<std::string>());
        row.s_within = BigInt(item.at("s_within").get<std::string>());
        if (item.contains("q")) row.q_t = item.at("q").get<Index>();
        rep.strata.push_back(std::move(row));
    }
    return rep;
}

Json bound_report_json(const NilpotentAlgebra& algebra, const BoundReport& report) {
    Json out{{"schema_version", kReportSchemaVersion},
             {"command", "bounds"},
             {"algebra", algebra_json(algebra)},
             {"p", report.p},
             {"n", report.n},
             {"e", report.e},
             {"chain_dims", report.chain_dims},
             {"layer_dims", report.layer_dims},
             {"s", report.s_count.str()},
             {"lambda_lower", report.lambda.str()},
             {"rough_lower", report.rough.str()},
             {"hypothesis_e_below_p", report.hypothesis_ok},
             {"delta_gap_ok", report.delta_gap_ok},
             {"sign_note", report.sign_note}};
    if (report.hypothesis_ok) {
        out["q_mode"] = to_string(report.q_mode);
        out["q_values"] = report.q_values;
        out["upper_main_ratio"] = rational_json(*report.main_ratio);
        out["upper_main"] = rational_json(*report.main);
        out["upper_stratified"] = rational_json(*report.stratified);
        out["upper_stratified_dropped"] = rational_json(*report.stratified_dropped);
        out["upper_stratified_refined"] = rational_json(*report.stratified_refined);
        out["threshold_bound"] = rational_json(*report.threshold_bound);
        out["threshold_below_1_percent"] = *report.threshold_predicted;
    }
    if (report.small_e) out["upper_small_e"] = rational_json(*report.small_e);
    if (report.i_count) out["i"] = report.i_count->str();
    if (report.ratio) out["ratio"] = rational_json(*report.ratio);
    return out;
}

BoundReport bound_report_from_json(const Json& j) {
    BoundReport rep;
    rep.p = j.at("p").get<std::int64_t>();
    rep.n = j.at("n").get<Index>();
    rep.e = j.at("e").get<int>();
    rep.chain_dims = j.at("chain_dims").get<std::vector<Index>>();
    rep.layer_dims = j.at("layer_dims").get<std::vector<Index>>();
    rep.s_count = BigInt(j.at("s").get<std::string>());
    rep.lambda = BigInt(j.at("lambda_lower").get<std::string>());
    rep.rough = BigInt(j.at("rough_lower").get<std::string>());
    rep.hypothesis_ok = j.at("hypothesis_e_below_p").get<bool>();
    rep.delta_gap_ok = j.at("delta_gap_ok").get<bool>();
    rep.sign_note = j.at("sign_note").get<std::string>();
    if (rep.hypothesis_ok) {
        const std::string mode = j.at("q_mode").get<std::string>();
        rep.q_mode = mode == "exact" ? QMode::Exact
                   : mode == "generic-t" ? QMode::GenericT
                                         : QMode::BinomialPow2;
        rep.q_values = j.at("q_values").get<std::vector<Index>>();
        rep.main_ratio = rational_from_json(j.at("upper_main_ratio"));
        rep.main = rational_from_json(j.at("upper_main"));
        rep.stratified = rational_from_json(j.at("upper_stratified"));
        rep.stratified_dropped = rational_from_json(j.at("upper_stratified_dropped"));
        rep.stratified_refined = rational_from_json(j.at("upper_stratified_refined"));
        rep.threshold_bound = rational_from_json(j.at("threshold_bound"));
        rep.threshold_predicted = j.at("threshold_below_1_percent").get<bool>();
    }
    if (j.contains("upper_small_e")) rep.small_e = rational_from_json(j.at("upper_small_e"));
    if (j.contains("i")) rep.i_count = BigInt(j.at("i").get<std::string>());
    if (j.contains("ratio")) rep.ratio = rational_from_json(j.at("ratio"));
    return rep;
}

Json interpolation_report_json(const std::string& family, const std::vector<std::int64_t>& primes,
                               std::int64_t validation_prime, const QPolynomial& fit) {
    std::vector<std::string> coeffs;
    for (const BigInt& c : fit.coefficients()) coeffs.push_back(c.str());
    return Json{{"schema_version", kReportSchemaVersion},
                {"command", "interpolate"},
                {"family", family},
                {"primes", primes},
                {"validation_prime", validation_prime},
                {"degree", fit.degree()},
                {"coefficients", coeffs},
                {"polynomial", fit.str()},
                {"validated", true}};
}

std::string describe_csv(const NilpotentAlgebra& algebra) {
    const auto& chain = algebra.annihilator_chain();
    std::ostringstream os;
    os << "key,value\n";
    os << "descriptor," << algebra.descriptor() << "\n";
    os << "p," << algebra.modulus().value() << "\n";
    os << "dim," << algebra.dim() << "\n";
    os << "e," << algebra.nil_index() << "\n";
    os << "chain_dims,";
    for (std::size_t i = 0; i < chain.dims.size(); ++i) os << (i ? " " : "") << chain.dims[i];
    os << "\nlayer_dims,";
    for (std::size_t i = 0; i < chain.layer_dims.size(); ++i)
        os << (i ? " " : "") << chain.layer_dims[i];
    os << "\nbasis,";
    const auto& labels = algebra.basis_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i];
    os << "\n";
    return os.str();
}

std::string census_csv(const NilpotentAlgebra& algebra, const CensusReport& report) {
    std::ostringstream os;
    os << "key,value\n";
    os << "algebra," << algebra.descriptor() << "\n";
    os << "strategy," << strategy_name(report.strategy) << "\n";
    os << "i," << report.i_count.str() << "\n";
    os << "s," << report.s_count.str() << "\n";
    os << "ratio," << rat_num(report.ratio) << "/" << rat_den(report.ratio) << "\n";
    for (const auto& row : report.strata) {
        os << "stratum " << row.t << " (d=" << row.d_t << ") i_within," << row.i_within.str()
           << "\n";
        os << "stratum " << row.t << " (d=" << row.d_t << ") s_within," << row.s_within.str()
           << "\n";
    }
    return os.str();
}

std::string fiber_csv(const NilpotentAlgebra& algebra, const CensusReport& report) {
    if (!report.fibers) throw std::invalid_argument("fiber_csv: report has no fiber table");
    std::map<std::tuple<int, Index, BigInt>, BigInt> groups;
    BigInt ideal_total = 0, subspace_total = 0;
    for (const auto& [ideal, count] : *report.fibers) {
        groups[{stratum_of(algebra, ideal), ideal.dim(), count}] += 1;
        ideal_total += 1;
        subspace_total += count;
    }
    std::ostringstream os;
    os << "stratum,dim,fiber_size,ideals,subspaces\n";
    for (const auto& [key, ideals] : groups) {
        const auto& [t, dim, fiber] = key;
        os << t << "," << dim << "," << fiber.str() << "," << ideals.str() << ","
           << BigInt(ideals * fiber).str() << "\n";
    }
    os << "total,,," << ideal_total.str() << "," << subspace_total.str() << "\n";
    return os.str();
}

std::string bound_csv(const NilpotentAlgebra& algebra, const BoundReport& report) {
    std::ostringstream os;
    os << "key,value\n";
    os << "algebra," << algebra.descriptor() << "\n";
    os << "lambda_lower," << report.lambda.str() << "\n";
    os << "rough_lower," << report.rough.str() << "\n";
    os << "hypothesis_e_below_p," << (report.hypothesis_ok ? "yes" : "no") << "\n";
    auto rat = [&](const char* key, const std::optional<BigRat>& r) {
        if (r) os << key << "," << rat_num(*r) << "/" << rat_den(*r) << "\n";
    };
    rat("upper_main_ratio", report.main_ratio);
    rat("upper_main", report.main);
    rat("upper_stratified", report.stratified);
    rat("upper_stratified_dropped", report.stratified_dropped);
    rat("upper_stratified_refined", report.stratified_refined);
    rat("upper_small_e", report.small_e);
    rat("threshold_bound", report.threshold_bound);
    if (report.i_count) os << "i," << report.i_count->str() << "\n";
    rat("ratio", report.ratio);
    return os.str();
}

}  // namespace nilcensus
