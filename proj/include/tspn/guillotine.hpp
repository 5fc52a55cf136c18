#pragma once

#include "tspn/edgeset.hpp"
#include "tspn/span.hpp"

#include <variant>

namespace tspn {

enum class RegionGoodVariant { SpanInE, BothSidesObligation };
enum class CandidateMode { HalfGrid, GridOnly };
enum class BaseCase { Modified, Legacy };

struct CheckOptions {
    int m = 1;
    int M = 24;
    RegionGoodVariant variant = RegionGoodVariant::SpanInE;
    CandidateMode candidates = CandidateMode::HalfGrid;
    BaseCase base = BaseCase::Modified;
};

struct CertNode {
    Window window;
    std::optional<Cut> cut;  // absent on leaves
    Rat sigma{0}, Sigma{0};
    int left = -1, right = -1;
    bool leaf = false;
};

struct GuillotineCertificate {
    std::vector<CertNode> nodes;
    int root = -1;
};

struct RefusalWitness {
    Window window;
    std::string reason;
};

using CheckResult = std::variant<GuillotineCertificate, RefusalWitness>;

/// Recursive decomposition by cuts that are simultaneously m-good and
/// M-region-good; accepts the first good cut in tie-break order. Returns a
/// witness window when no candidate works. Throws on depth-guard overflow.
CheckResult check_guillotine(const EdgeSet& edges, const std::vector<Polygon>& regions,
                             const Window& window, const GridSpec& grid,
                             const CheckOptions& opt);

/// True when the segment's interior lies strictly inside the open window.
bool edge_interior_inside(const Segment& s, const Window& w);

/// True when no edge of the set has its interior inside the open window.
bool base_case_holds(const EdgeSet& edges, const Window& w, BaseCase base);

/// m-span empty, or contained in a single component of cut-line ∩ edges.
bool cut_is_m_good(const Cut& cut, const std::vector<Segment>& edges, int m);

bool cut_is_region_good(const Cut& cut, const std::vector<Segment>& edges,
                        const std::vector<Polygon>& regions, int M, RegionGoodVariant variant);

struct ChargeRecord {
    enum class Target { EdgePortion, RegionBoundary };
    enum class Kind { Direct, Indirect };
    enum class Direction { Left, Right, Up, Down };
    Target target = Target::EdgePortion;
    int target_index = -1;  // edge id or region index
    Segment portion;
    Rat amount{0};  // charge per unit length of the portion
    Kind kind = Kind::Direct;
    Direction dir = Direction::Left;
    int cut_id = -1;
};

struct ChargeLedger {
    std::vector<ChargeRecord> records;
    double analytic_tail = 0;  // charge below the materialization threshold

    double total() const;
};

struct TransformResult {
    EdgeSet edges;
    ChargeLedger ledger;
    GuillotineCertificate certificate;
    double added_length = 0;  // includes parity duplicates
    int cuts_made = 0;
};

/// Recursively finds perfect cuts, inserts the doubled m-span and doubled
/// (M+24)-region-span, connects non-empty region spans to the existing set
/// with a connector of length at most 2, and books every insertion in the
/// ledger against nearby crossing edges and region boundaries.
TransformResult transform_to_guillotine(const EdgeSet& tour, const std::vector<Polygon>& regions,
                                        int m, int M, const Window& window, const GridSpec& grid);

struct LedgerReport {
    bool ok = true;
    std::vector<std::string> violations;  // each names the offending cut_id
};

/// Asserts: added length covered by the ledger, per-point edge charge within
/// 16/m direct and 32/m overall, per-point region boundary charge within 16/M,
/// and no charge ever lands on an inserted span.
LedgerReport verify_ledger(const ChargeLedger& ledger, const EdgeSet& before,
                           const EdgeSet& after, int m, int M);

}  // namespace tspn
