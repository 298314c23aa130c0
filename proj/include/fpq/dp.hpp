#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpq/choosable.hpp"
#include "fpq/sat_scd.hpp"
#include "fpq/spqr.hpp"

namespace fpq {

// <T_u, T_v, o_u, o_v> packed; tree indices refer to D of the instance the dp ran on
using PsiSet = std::vector<uint64_t>;  // sorted, unique
struct Tuple {
    int tu, tv, ou, ov;
};
inline uint64_t pack_tuple(int tu, int tv, int ou, int ov) {
    return (uint64_t)tu << 34 | (uint64_t)tv << 2 | (uint64_t)ou << 1 | (uint64_t)ov;
}
inline Tuple unpack_tuple(uint64_t x) {
    return {(int)(x >> 34), (int)((x >> 2) & ((1ull << 32) - 1)), (int)((x >> 1) & 1), (int)(x & 1)};
}
void psi_normalize(PsiSet& s);
std::string psi_to_string(const PsiSet& s);

// preprocessed instance plus, per vertex, the original index of every kept tree
struct Preprocessed {
    ChoosableGraph cg;
    std::vector<std::vector<int>> orig;
};
std::optional<Preprocessed> preprocess(const ChoosableGraph& cg, const SPQRTree& t);

struct DpOptions {
    ScdMode scd = ScdMode::Auto;
    bool p_enumerate = false;  // P-nodes by enumerating skeleton orders instead of 2SAT
    bool early_exit = true;
};

class DpEngine {
public:
    DpEngine(const ChoosableGraph& cg, const SPQRTree& t, DpOptions opt = {});

    // bottom-up over all nodes; false when the root child's set is empty
    bool run();
    PsiSet compute(int mu);  // children must be done

    PsiSet psi_leaf(int mu) const;
    PsiSet psi_s(int mu) const;
    PsiSet psi_p(int mu) const;
    PsiSet psi_r(int mu) const;

    std::vector<PsiSet> psi;
    std::vector<char> done;
    mutable int width = 0;  // widest branch decomposition used

    const ChoosableGraph& cg;
    const SPQRTree& t;
    DpOptions opt;

private:
    // child tuple restricted to (T at x, T at y, o at x, o at y)
    struct Oriented {
        int tx, ty, ox, oy;
    };
    std::vector<Oriented> child_tuples(int child, int x, int y) const;
    PsiSet psi_p_pair_sat(int mu, int tu, int tv) const;
};

struct Witness {
    std::vector<int> assignment;  // tree index per vertex, in the caller's D
    RotationSystem rotation;
};
bool witness_valid(const ChoosableGraph& cg, const Witness& w);

enum class Verdict { Yes, No, Unsupported };

struct Analysis {
    Verdict verdict = Verdict::No;
    std::string reason;  // why no / unsupported
    bool planar = true;
    int width = 0;
    std::map<std::string, double> timings_ms;
    std::vector<std::pair<std::string, size_t>> psi_sizes;  // per SPQR node
    std::optional<Witness> witness;
};

// full pipeline: checks, decomposition, preprocessing, dp
Analysis analyze(const ChoosableGraph& cg, DpOptions opt = {}, bool want_witness = false);
bool test(const ChoosableGraph& cg);
std::optional<Witness> extract_witness(const ChoosableGraph& cg);

}  // namespace fpq
