#pragma once

namespace fpp {
struct NumberFieldRecord;
struct FieldPairRecord;
struct RamifiedPrimeDecomposition;
} // namespace fpp
