#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpp/bounds.hpp"
#include "fpp/datasets.hpp"
#include "fpp/lvalues.hpp"
#include "fpp/volume.hpp"

namespace fpp {

struct CutRecord {
    std::string candidate;
    std::string boundName;
    std::string values;
    bool kept = false;
    std::string reason;
};

struct StageTrace {
    std::string stage;
    std::string inputs;
    std::vector<CutRecord> cuts;
    std::vector<std::string> outputs;
    std::vector<std::string> notes;
};

enum class EntryForm { Hermitian, CubicDivisionAlgebra };
enum class EntryStatus { Confirmed, Excluded, Open };

const char* entryFormName(EntryForm f);
const char* entryStatusName(EntryStatus s);

struct CensusEntry {
    std::string pairLabel;
    EntryForm form = EntryForm::CubicDivisionAlgebra;
    std::string t0Place;
    int ramifiedPlaces = 0;
    int classCount = 0;     // confirmed classes
    int maxClasses = 0;     // upper bound (1 for open entries)
    EntryStatus status = EntryStatus::Confirmed;
    Rat chiLambda;
    std::string citation;   // provenance for excluded/open statuses
};

struct CensusReport {
    std::vector<StageTrace> stages;
    std::vector<CensusEntry> entries;
    int totalConfirmed = 0;
    int totalUpper = 0;
    std::vector<ValidationCheck> checkpoints;
    bool checkpointsCertified() const;
};

struct CensusConfig {
    LvalueConfig lv;
};

// A parahoric configuration candidate during the searches.
struct SearchConfig {
    std::vector<LocalDatum> locals;
    std::string describe() const;
};

class Census {
public:
    Census(const DataDir& data, CensusConfig cfg);

    StageTrace stageKQDiscriminantCut();
    StageTrace stageKQPairs();
    std::vector<CensusEntry> classCountKQ();
    StageTrace stageDegreeElimination();
    StageTrace stagePairFilter();
    StageTrace stageDivisionAlgebraSearch();
    CensusReport run();   // all stages + final assembly

    // exact values with verification against the bundled tables
    Rat verifiedZetaKminus1(const NumberFieldRecord& k);
    Rat verifiedLminus2(const FieldPairRecord& pair);

    const std::vector<ValidationCheck>& checkpoints() const { return checkpoints_; }

    // winning k=Q configurations: (a, p, mu * e')
    struct KQPair {
        std::uint64_t a, p;
        Rat muLambda;
    };
    const std::vector<KQPair>& kqPairs() const { return kqPairs_; }
    const std::vector<std::string>& survivingPairs() const { return survivors84_; }

private:
    void certify(const std::string& name, bool ok, const std::string& detail);
    const DataDir& data_;
    CensusConfig cfg_;
    std::vector<ValidationCheck> checkpoints_;
    std::map<std::string, Rat> zetaCache_;
    std::vector<KQPair> kqPairs_;
    std::vector<std::string> survivors84_;      // fifteen pair labels
    struct DivisionWinner {
        std::string label;
        PlaceOfK t0;
        Rat muLambda;
    };
    std::vector<DivisionWinner> divisionWinners_;
    friend struct CensusRunner;
};

} // namespace fpp
