#include <chromix/targets.hpp>

#include <string>

using std::to_string;

namespace chromix {

auto walecki_cycle(int p, int j) -> WaleckiCycle
{
    if (p < 1)
        throw Error{ ErrorKind::Domain, "walecki_cycle needs p >= 1" };
    if (j < 0 || j >= p)
        throw Error{ ErrorKind::Domain, "walecki_cycle needs 0 <= j < p" };
    int q = 2 * p, inf = 2 * p;
    WaleckiCycle cycle{ p, j, { inf } };
    cycle.sequence.push_back(j % q);
    for (int i = 1; i < p; ++i) {
        cycle.sequence.push_back((j + i) % q);
        cycle.sequence.push_back(((j - i) % q + q) % q);
    }
    cycle.sequence.push_back((j + p) % q);
    return cycle;
}

auto walecki_target(const Signature & sig) -> NmGraph
{
    sig.validate();
    int p = sig.p();
    if (p < 2)
        throw Error{ ErrorKind::Domain, "walecki_target needs 2n+m >= 2" };

    NmGraphBuilder builder{ sig, 2 * p + 1 };
    for (int v = 0; v < 2 * p; ++v)
        builder.set_label(v, to_string(v));
    builder.set_label(2 * p, "inf");

    auto orient = [&](int j, int type) {
        auto seq = walecki_cycle(p, j).sequence;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            builder.add_arc(seq[i], seq[i + 1], type);
        builder.add_arc(seq.back(), seq.front(), type);
    };
    auto lay = [&](int j, int type) {
        auto seq = walecki_cycle(p, j).sequence;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            builder.add_edge(seq[i], seq[i + 1], type);
        builder.add_edge(seq.back(), seq.front(), type);
    };

    for (int a = 2; a <= 2 * sig.n; a += 2) {
        orient(a - 2, a);
        orient(a - 1, a);
    }
    for (int a = 2 * sig.n + 1; a <= p; ++a)
        lay(a - 1, a);
    return builder.build();
}

namespace {

auto rep3(int x) -> int
{
    x = ((x % 3) + 3) % 3;
    return x == 0 ? 3 : x;
}

} // namespace

auto t03() -> NmGraph
{
    const bool square5[5] = { false, true, false, false, true };
    NmGraphBuilder builder{ Signature{ 0, 3 }, 15 };
    auto idx = [](int i, int j) { return 3 * i + j; };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 3; ++j)
            builder.set_label(idx(i, j), to_string(i) + "," + to_string(j));
    for (int a = 0; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b) {
            int i = a / 3, j = a % 3, i2 = b / 3, j2 = b % 3;
            if (i == i2)
                continue;
            int type = square5[((i2 - i) % 5 + 5) % 5] ? rep3(1 + j + j2) : rep3(2 + j + j2);
            builder.add_edge(a, b, type);
        }
    return builder.build();
}

auto t11() -> NmGraph
{
    const bool square7[7] = { false, true, true, false, true, false, false };
    NmGraphBuilder builder{ Signature{ 1, 1 }, 21 };
    auto idx = [](int i, int j) { return 3 * i + j; };
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 3; ++j)
            builder.set_label(idx(i, j), to_string(i) + "," + to_string(j));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 3; ++j)
            for (int i2 = 0; i2 < 7; ++i2) {
                if (i2 == i)
                    continue;
                bool sq = square7[((i2 - i) % 7 + 7) % 7];
                // same layer: squares get an arc towards the higher residue
                // difference; realised once per unordered pair
                if (sq)
                    builder.add_arc(idx(i, j), idx(i2, j % 3), 2);
                int j2 = (j + 1) % 3;
                if (sq)
                    builder.add_edge(idx(i, j), idx(i2, j2), 3);
                else
                    builder.add_arc(idx(i2, j2), idx(i, j), 2);
            }
    return builder.build();
}

auto complete_augment(const NmGraph & h, int fill) -> NmGraph
{
    if (! h.signature().valid_view(fill))
        throw Error{ ErrorKind::TypeRange, "fill type " + to_string(fill) + " out of range 1.." + to_string(h.signature().p()) };
    NmGraphBuilder builder{ h.signature(), h.order() };
    for (int v = 0; v < h.order(); ++v)
        if (! h.label(v).empty())
            builder.set_label(v, h.label(v));
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v) {
            int t = h.view(u, v);
            builder.set_adjacency(u, v, t != 0 ? t : fill);
        }
    return builder.build();
}

} // namespace chromix
