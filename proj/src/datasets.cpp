#include "fpp/datasets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fpp/errors.hpp"

namespace fpp {

namespace {

std::vector<std::string> splitTabs(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Int> parsePoly(const std::string& s, int line) {
    std::vector<Int> coeffs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            coeffs.emplace_back(tok);
        } catch (...) {
            fail(Err::Parse, "line " + std::to_string(line) + ": bad coefficient '" + tok + "'");
        }
    }
    if (coeffs.empty()) fail(Err::Parse, "line " + std::to_string(line) + ": empty poly");
    return coeffs;
}

// "p:e/f,e/f|p:..."
std::vector<RamifiedPrimeDecomposition> parseRamified(const std::string& s, int line) {
    std::vector<RamifiedPrimeDecomposition> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string entry;
    while (std::getline(ss, entry, '|')) {
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            fail(Err::Parse, "line " + std::to_string(line) + ": bad ramified entry '" + entry + "'");
        RamifiedPrimeDecomposition d;
        d.p = Int(entry.substr(0, colon));
        std::stringstream ps(entry.substr(colon + 1));
        std::string pair;
        while (std::getline(ps, pair, ',')) {
            auto slash = pair.find('/');
            if (slash == std::string::npos)
                fail(Err::Parse, "line " + std::to_string(line) + ": bad e/f pair '" + pair + "'");
            d.factors.emplace_back(std::stoi(pair.substr(0, slash)),
                                   std::stoi(pair.substr(slash + 1)));
        }
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace

Int polyDiscriminant(const std::vector<Int>& coeffs) {
    int n = (int)coeffs.size() - 1;
    if (n <= 1) return Int(1);
    // Sylvester matrix of f and f', Bareiss fraction-free determinant
    std::vector<Int> f(coeffs.rbegin(), coeffs.rend());   // descending
    std::vector<Int> d;                                   // f', descending
    for (int i = 0; i < n; ++i) d.push_back(f[i] * (n - i));
    int m = 2 * n - 1;
    std::vector<std::vector<Int>> a(m, std::vector<Int>(m, Int(0)));
    for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c <= n; ++c) a[r][r + c] = f[c];
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= n - 1; ++c) a[n - 1 + r][r + c] = d[c];
    // Bareiss
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int r = k + 1; r < m; ++r)
                if (a[r][k] != 0) { swap = r; break; }
            if (swap < 0) return Int(0);
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    Int res = a[m - 1][m - 1] * sign;
    // disc = (-1)^(n(n-1)/2) Res(f, f') / lc;  monic here
    if ((n * (n - 1) / 2) % 2 == 1) res = -res;
    return res;
}

const RamifiedPrimeDecomposition* NumberFieldRecord::bundledDecomposition(const Int& p) const {
    for (auto& d : ramified)
        if (d.p == p) return &d;
    return nullptr;
}

Int NumberFieldRecord::h3OrFail() const {
    if (!h3) fail(Err::MissingDatum, "field " + label + " has no bundled h3");
    return *h3;
}

const NumberFieldRecord* FieldTable::byLabel(const std::string& label) const {
    for (auto& f : fields)
        if (f.label == label) return &f;
    return nullptr;
}

const FieldPairRecord* PairTable::byLabel(const std::string& label) const {
    for (auto& p : pairs)
        if (p.label == label) return &p;
    return nullptr;
}

namespace {

void checkFieldInvariants(NumberFieldRecord& r, int line) {
    auto die = [&](const std::string& what) {
        fail(Err::Invariant, "field " + r.label + " (line " + std::to_string(line) + "): " + what);
    };
    if ((int)r.poly.size() != r.degree + 1) die("poly degree != declared degree");
    if (r.poly.back() != 1) die("poly not monic");
    if (r.absDisc <= 0) die("absDisc must be positive");
    if (r.realEmbeddings + 2 * r.complexPlaces != r.degree) die("signature mismatch");
    if (r.n3 && !isPowerOfThree(*r.n3)) die("n3 not a power of 3");
    if (r.h3 && !isPowerOfThree(*r.h3)) die("h3 not a power of 3");
    if (r.h3 && r.n3 && *r.n3 % *r.h3 != 0) die("h3 does not divide n3");
    if (r.n3 && r.classNumber && *r.classNumber % *r.n3 != 0) die("n3 does not divide h");
    r.polyDisc = polyDiscriminant(r.poly);
    if (r.degree > 1 && r.polyDisc % r.absDisc != 0) die("absDisc does not divide poly disc");
    for (auto& d : r.ramified) {
        int sum = 0;
        bool anyRam = false;
        for (auto& [e, f] : d.factors) {
            if (e < 1 || f < 1) die("bad e/f in ramified data");
            sum += e * f;
            anyRam |= e > 1;
        }
        if (sum != r.degree) die("sum e*f != degree at p=" + d.p.get_str());
        if (r.absDisc % d.p == 0 && !anyRam) die("p | D but no e>1 at p=" + d.p.get_str());
        if (r.absDisc % d.p != 0 && anyRam) die("e>1 but p does not divide D at p=" + d.p.get_str());
        if (r.polyDisc % d.p != 0) die("bundled prime does not divide poly disc");
    }
    // every prime dividing the polynomial discriminant (so in particular D
    // and any index divisor) must carry bundled data
    Int m = abs(r.polyDisc);
    for (Int q(2); m > 1; q += 1) {
        if (q * q > m) q = m;
        if (m % q == 0) {
            if (!r.bundledDecomposition(q))
                die("missing bundled decomposition at p=" + q.get_str());
            while (m % q == 0) m /= q;
        }
    }
}

} // namespace

FieldTable loadFieldTable(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::Parse, "cannot open " + path);
    FieldTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto cols = splitTabs(line);
        if (cols.size() != 11)
            fail(Err::Parse, path + " line " + std::to_string(lineno) + ": expected 11 columns, got " +
                                 std::to_string(cols.size()));
        NumberFieldRecord r;
        r.label = cols[0];
        r.degree = std::stoi(cols[1]);
        auto comma = cols[2].find(',');
        r.realEmbeddings = std::stoi(cols[2].substr(0, comma));
        r.complexPlaces = std::stoi(cols[2].substr(comma + 1));
        r.poly = parsePoly(cols[3], lineno);
        r.absDisc = Int(cols[4]);
        if (!cols[5].empty()) r.classNumber = Int(cols[5]);
        if (!cols[6].empty()) r.n3 = Int(cols[6]);
        if (!cols[7].empty()) r.h3 = Int(cols[7]);
        if (!cols[8].empty()) r.regOverW = ratFromString(cols[8]);
        r.ramified = parseRamified(cols[9], lineno);
        r.torsionNote = cols[10];
        checkFieldInvariants(r, lineno);
        t.fields.push_back(std::move(r));
    }
    return t;
}

PairTable loadPairTable(const std::string& path, const FieldTable& fields) {
    std::ifstream in(path);
    if (!in) fail(Err::Parse, "cannot open " + path);
    PairTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto cols = splitTabs(line);
        if (cols.size() != 7)
            fail(Err::Parse, path + " line " + std::to_string(lineno) + ": expected 7 columns");
        FieldPairRecord p;
        p.label = cols[0];
        p.k = fields.byLabel(cols[1]);
        p.ell = fields.byLabel(cols[2]);
        if (!p.k) fail(Err::Parse, "pair " + p.label + ": unknown field label " + cols[1]);
        if (!p.ell) fail(Err::Parse, "pair " + p.label + ": unknown field label " + cols[2]);
        p.relDiscNorm = Int(cols[3]);
        p.zetaKminus1 = ratFromString(cols[4]);
        p.Lminus2 = ratFromString(cols[5]);
        p.mu = ratFromString(cols[6]);
        if (p.ell->degree != 2 * p.k->degree)
            fail(Err::Invariant, "pair " + p.label + ": degree(ell) != 2 degree(k)");
        if (p.ell->complexPlaces != p.ell->degree / 2 || p.k->realEmbeddings != p.k->degree)
            fail(Err::Invariant, "pair " + p.label + ": signatures not CM-over-totally-real");
        Int dk2 = p.k->absDisc * p.k->absDisc;
        if (p.ell->absDisc % dk2 != 0)
            fail(Err::Invariant, "pair " + p.label + ": D_k^2 does not divide D_l");
        if (p.relDiscNorm * dk2 != p.ell->absDisc)
            fail(Err::Invariant, "pair " + p.label + ": relDiscNorm mismatch");
        t.pairs.push_back(std::move(p));
    }
    return t;
}

AnalyticConstantTables loadConstants(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::Parse, "cannot open " + path);
    AnalyticConstantTables t;
    t.friedmanDefaultRW = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto cols = splitTabs(line);
        const std::string& key = cols[0];
        auto need = [&](size_t n) {
            if (cols.size() < n + 1)
                fail(Err::Parse, path + " line " + std::to_string(lineno) + ": bad row");
        };
        if (key == "Mr") {
            need(2);
            t.Mr[std::stoi(cols[1])] = Int(cols[2]);
        } else if (key == "Nc") {
            need(2);
            t.Nc[std::stoi(cols[1])] = ratFromString(cols[2]);
        } else if (key == "NcReal") {
            need(2);
            t.NcReal[std::stoi(cols[1])] = ratFromString(cols[2]);
        } else if (key == "Mc4000") {
            need(1);
            t.Mc4000 = ratFromString(cols[1]);
        } else if (key == "FriedmanRW") {
            need(3);
            t.friedmanRW[std::stoi(cols[1])] = {ratFromString(cols[2]), ratFromString(cols[3])};
        } else if (key == "FriedmanDefaultRW") {
            need(1);
            t.friedmanDefaultRW = ratFromString(cols[1]);
        } else if (key == "FriedmanExc") {
            need(1);
            t.friedmanExceptions.push_back(Int(cols[1]));
        } else if (key == "Appendix") {
            need(3);
            t.appendixTriples.push_back({Int(cols[1]), Int(cols[2]), Int(cols[3])});
        } else if (key == "ImagQuadHMax461") {
            need(1);
            t.imagQuadHMax461 = Int(cols[1]);
        } else if (key == "CMQuarticHMax") {
            need(3);
            t.cmQuarticHBoundDisc = Int(cols[1]);
            t.cmQuarticHMax = Int(cols[2]);
            t.cmQuarticHMaxAtDisc = Int(cols[3]);
        } else if (key == "RealSexticSmallest") {
            need(2);
            t.realSexticSmallest = Int(cols[1]);
            t.realSexticSecond = Int(cols[2]);
        } else {
            fail(Err::Parse, path + " line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return t;
}

bool ValidationReport::allPass() const {
    return std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.pass; });
}

ValidationReport validateConstants(const AnalyticConstantTables& t) {
    ValidationReport rep;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, ok, detail});
    };
    const std::map<int, Int> mrExpected = {{2, 5},      {3, 49},       {4, 725},     {5, 14641},
                                           {6, 300125}, {7, 20134393}, {8, 282300416}};
    bool mrOk = t.Mr.size() == mrExpected.size();
    for (auto& [d, v] : mrExpected) {
        auto it = t.Mr.find(d);
        mrOk = mrOk && it != t.Mr.end() && it->second == v;
    }
    check("Mr table", mrOk, mrOk ? "" : "Mr mismatch");
    check("appendix triple count", t.appendixTriples.size() == 25,
          "count " + std::to_string(t.appendixTriples.size()));
    bool triplesOk = true;
    std::string bad;
    for (auto& tr : t.appendixTriples) {
        bool rowOk = tr.h % tr.n3 == 0 && isPowerOfThree(tr.n3) && tr.D >= 3 && tr.D <= 79;
        if (!rowOk) {
            triplesOk = false;
            bad = tr.D.get_str();
        }
    }
    check("appendix divisibility (n3 | h, n3 power of 3)", triplesOk,
          triplesOk ? "" : "bad triple at D=" + bad);
    bool has23 = false;
    for (auto& tr : t.appendixTriples)
        if (tr.D == 23 && tr.h == 3 && tr.n3 == 3) has23 = true;
    check("appendix contains (23,3,3)", has23);
    check("Mc4000 value", t.Mc4000 == Rat(8713, 400), ratToString(t.Mc4000));
    bool fOk = t.friedmanRW.size() == 6;
    for (int d = 2; d <= 7; ++d) fOk = fOk && t.friedmanRW.count(d);
    check("Friedman rows d=2..7", fOk);
    check("Friedman exception count", t.friedmanExceptions.size() == 9,
          std::to_string(t.friedmanExceptions.size()));
    bool ncMono = true;
    Rat prev(0);
    for (auto& [n, v] : t.Nc) {
        if (v < prev) ncMono = false;
        prev = v;
    }
    check("Nc bounds nondecreasing", ncMono);
    check("imag quadratic class-number cap present", t.imagQuadHMax461 == 21);
    return rep;
}

std::string fieldTableToTsv(const FieldTable& t) {
    std::ostringstream out;
    out << "# label\tdegree\tsignature\tpoly\tabsDisc\th\tn3\th3\tregOverW\tramified\ttorsionNote\n";
    for (auto& r : t.fields) {
        out << r.label << '\t' << r.degree << '\t' << r.realEmbeddings << ',' << r.complexPlaces
            << '\t';
        for (size_t i = 0; i < r.poly.size(); ++i)
            out << (i ? "," : "") << r.poly[i].get_str();
        out << '\t' << r.absDisc.get_str() << '\t';
        if (r.classNumber) out << r.classNumber->get_str();
        out << '\t';
        if (r.n3) out << r.n3->get_str();
        out << '\t';
        if (r.h3) out << r.h3->get_str();
        out << '\t';
        if (r.regOverW) out << ratToString(*r.regOverW);
        out << '\t';
        for (size_t i = 0; i < r.ramified.size(); ++i) {
            if (i) out << '|';
            out << r.ramified[i].p.get_str() << ':';
            for (size_t j = 0; j < r.ramified[i].factors.size(); ++j) {
                if (j) out << ',';
                out << r.ramified[i].factors[j].first << '/' << r.ramified[i].factors[j].second;
            }
        }
        out << '\t' << r.torsionNote << '\n';
    }
    return out.str();
}

DataDir loadDataDir(const std::string& dir) {
    DataDir d;
    d.fields = loadFieldTable(dir + "/fields.tsv");
    d.pairs = loadPairTable(dir + "/pairs.tsv", d.fields);
    d.constants = loadConstants(dir + "/constants.tsv");
    return d;
}

} // namespace fpp
