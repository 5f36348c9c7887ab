#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpp/rational.hpp"

namespace fpp {

struct RamifiedPrimeDecomposition {
    Int p;
    std::vector<std::pair<int, int>> factors;   // (e, f), sorted descending
};

struct NumberFieldRecord {
    std::string label;
    int degree = 0;
    int realEmbeddings = 0;
    int complexPlaces = 0;
    std::vector<Int> poly;                       // ascending, monic
    Int absDisc;
    std::optional<Int> classNumber;
    std::optional<Int> n3;
    std::optional<Int> h3;
    std::optional<Rat> regOverW;
    std::vector<RamifiedPrimeDecomposition> ramified;
    std::string torsionNote;

    Int polyDisc;                                // computed at load

    bool isTotallyReal() const { return complexPlaces == 0; }
    const RamifiedPrimeDecomposition* bundledDecomposition(const Int& p) const;
    Int h3OrFail() const;
};

struct FieldPairRecord {
    std::string label;
    const NumberFieldRecord* k = nullptr;
    const NumberFieldRecord* ell = nullptr;
    Int relDiscNorm;
    // paper table values, re-derived and checked by the pipeline
    Rat zetaKminus1;
    Rat Lminus2;
    Rat mu;

    int degreeK() const { return k->degree; }
    bool isRationalBase() const { return k->degree == 1; }
};

struct FieldTable {
    std::vector<NumberFieldRecord> fields;
    const NumberFieldRecord* byLabel(const std::string& label) const;
};

struct PairTable {
    std::vector<FieldPairRecord> pairs;
    const FieldPairRecord* byLabel(const std::string& label) const;
};

struct FriedmanRow {
    Rat rootDiscThreshold;   // bound applies when D_l^(1/2d) < threshold
    Rat regOverW;
};

struct AnalyticConstantTables {
    std::map<int, Rat> Nc;                  // totally complex root-disc lower bounds
    std::map<int, Rat> NcReal;              // totally real analogues, keyed by min degree
    Rat Mc4000;
    std::map<int, Int> Mr;                  // minimal totally real discriminants
    std::map<int, FriedmanRow> friedmanRW;
    Rat friedmanDefaultRW;
    std::vector<Int> friedmanExceptions;
    struct AppendixTriple { Int D, h, n3; };
    std::vector<AppendixTriple> appendixTriples;
    Int imagQuadHMax461;                    // max class number, D_l <= 461
    Int cmQuarticHBoundDisc, cmQuarticHMax, cmQuarticHMaxAtDisc;
    Int realSexticSmallest, realSexticSecond;
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool allPass() const;
};

FieldTable loadFieldTable(const std::string& path);
PairTable loadPairTable(const std::string& path, const FieldTable& fields);
AnalyticConstantTables loadConstants(const std::string& path);
ValidationReport validateConstants(const AnalyticConstantTables& t);

// serialization used by the round-trip property test
std::string fieldTableToTsv(const FieldTable& t);

Int polyDiscriminant(const std::vector<Int>& coeffs);

struct DataDir {
    FieldTable fields;
    PairTable pairs;
    AnalyticConstantTables constants;
};

DataDir loadDataDir(const std::string& dir);

} // namespace fpp
