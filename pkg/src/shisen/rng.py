"""Deterministic random streams for dealing and rollouts.

splitmix64 with the standard constants; every consumer documents its seed
derivation so samples are reproducible across runs and hosts.
"""

M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 stream; next() yields uniform 64-bit values."""

    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & M64

    def next(self):
        self.state = s = self.state + _GOLDEN & M64
        s = (s ^ s >> 30) * 0xBF58476D1CE4E5B9 & M64
        s = (s ^ s >> 27) * 0x94D049BB133111EB & M64
        return s ^ s >> 31

    def below(self, n):
        """Uniform value in [0, n) by modulo reduction."""
        return self.next() % n


def shuffled(items, seed):
    """Fisher-Yates shuffle driven by a fresh splitmix64 stream.

    Walks i from len-1 down to 1 and swaps with j = next() % (i+1).
    """
    rng = SplitMix64(seed)
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = rng.next() % (i + 1)
        out[i], out[j] = out[j], out[i]
    return out
