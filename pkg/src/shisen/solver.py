"""Winnability search: random rollouts, then exhaustive DFS with pruning.

The exhaustive search is exact: "winnable" comes with a replayable witness,
"impossible" means no removal order clears the board, "aborted" is returned
only when the node budget runs out.  Three sound accelerators keep the tree
small:

  forced moves   - when a face has two tiles left and they are playable,
                   play them; when all four are left and some disjoint
                   pairing is playable right now, play both pairs.  Both
                   rules are safe because removing tiles never disables a
                   later pair.
  dead-position scan - greedy fixpoint over a relaxation that may also
                   delete a lone tile once its group is down to two, if the
                   tile could pair with any member position of its group
                   (removed positions count as empty boxes; under mahjong
                   rules a free tile).  If even this relaxation cannot empty
                   the board, no real line of play can.  When the scan
                   empties the board using genuine pairs only, its move list
                   is a valid witness and the node is solved on the spot.
  transposition set - exact occupancy masks of positions proven dead.
"""

import math
from dataclasses import dataclass, field

from .rng import SplitMix64
from .rules import (
    _connect,
    _pillars_ok,
    mahjong_free,
    pair_playable,
    pillar_above_clear,
    playable_pairs,
)

TT_CAP = 2_000_000
ROLLOUT_BASE = {"shisen": 1.15, "mahjong": 1.2, "mahjong_transposed": 1.2}
ROLLOUT_SALT = 0x6C6C6F72  # decorrelates rollout streams from deal seeds


class NodeLimit(Exception):
    pass


@dataclass
class SolveStats:
    nodes: int = 0
    rollout_attempts: int = 0
    tt_hits: int = 0
    scan_cuts: int = 0
    forced_moves: int = 0


@dataclass
class SolveResult:
    verdict: str          # winnable | impossible | aborted
    witness: list | None  # pair moves in play order when winnable
    stats: SolveStats


def rollout_attempt_count(k, rule):
    """round(base ** (6 * sqrt(k))) with k complete four-groups."""
    return round(ROLLOUT_BASE[rule.kind] ** (6.0 * math.sqrt(k)))


def rollout(bd, rule, seed, attempts, stats=None):
    """Uniform random playouts; the winning move list, or None.

    The board comes back unchanged either way.
    """
    rng = SplitMix64(seed)
    depth0 = len(bd.undo_log)
    for _ in range(attempts):
        if stats is not None:
            stats.rollout_attempts += 1
        moves = []
        while True:
            pairs = playable_pairs(bd, rule)
            if not pairs:
                break
            mv = pairs[rng.below(len(pairs))]
            bd.play_pair(*mv)
            moves.append(mv)
        cleared = bd.total == 0
        bd.unplay_to(depth0)
        if cleared:
            return moves
    return None


def _lone_playable(bd, rule, s, p):
    """Could s pair with group position p if p's box is treated as a tile?
    p may be a removed slot; occupied p is the ordinary pair test."""
    if rule.kind != "shisen":
        if bd.occ[p]:
            return pair_playable(bd, rule, s, p)
        return mahjong_free(bd, s, rule.transposed, rule.adjacent)
    if bd.occ[p]:
        return _pillars_ok(bd, s, p) and _connect(bd, s, p)
    return (pillar_above_clear(bd, s) and pillar_above_clear(bd, p)
            and _connect(bd, s, p))


def prune_scan(bd, rule):
    """(emptiable, witness): greedily clear under the relaxed rules.

    emptiable False proves the position dead.  witness is the move list
    when the clearing used genuine pairs only, else None.  The board is
    restored before returning.
    """
    depth0 = len(bd.undo_log)
    moves = []
    lone_used = False
    progress = True
    while progress and bd.total:
        progress = False
        for g, members in enumerate(bd.group_slots):
            rem = bd.remaining[g]
            if rem == 0:
                continue
            while rem >= 2:
                alive = [s for s in members if bd.occ[s]]
                hit = None
                for i, a in enumerate(alive):
                    for b in alive[i + 1:]:
                        if pair_playable(bd, rule, a, b):
                            hit = (a, b)
                            break
                    if hit:
                        break
                if hit is None:
                    break
                bd.play_pair(*hit)
                moves.append(hit)
                progress = True
                rem -= 2
            if 1 <= rem <= 2:
                again = True
                while again and rem:
                    again = False
                    for s in members:
                        if not bd.occ[s]:
                            continue
                        if any(p != s and _lone_playable(bd, rule, s, p)
                               for p in members):
                            bd.play_lone(s)
                            lone_used = True
                            progress = True
                            again = True
                            rem -= 1
                            break
    emptiable = bd.total == 0
    bd.unplay_to(depth0)
    if emptiable and not lone_used:
        return True, moves
    return emptiable, None


def _forced_moves(bd, rule, trail, stats):
    """Play safe moves; returns how many were played (appended to trail)."""
    played = 0
    progress = True
    while progress:
        progress = False
        for g, members in enumerate(bd.group_slots):
            rem = bd.remaining[g]
            if rem == 2:
                alive = [s for s in members if bd.occ[s]]
                if pair_playable(bd, rule, alive[0], alive[1]):
                    mv = (alive[0], alive[1])
                    bd.play_pair(*mv)
                    trail.append(mv)
                    played += 1
                    progress = True
            elif rem == 4:
                a = members if len(members) == 4 else \
                    [s for s in members if bd.occ[s]]
                ok = {}
                for i in range(4):
                    for j in range(i + 1, 4):
                        ok[i, j] = pair_playable(bd, rule, a[i], a[j])
                for (i, j), (k, l) in (((0, 1), (2, 3)), ((0, 2), (1, 3)),
                                       ((0, 3), (1, 2))):
                    if ok[i, j] and ok[k, l]:
                        for mv in ((a[i], a[j]), (a[k], a[l])):
                            bd.play_pair(*mv)
                            trail.append(mv)
                            played += 1
                        progress = True
                        break
    stats.forced_moves += played
    return played


def _dfs(bd, rule, tt, tt_cap, stats, limit, trail):
    stats.nodes += 1
    if stats.nodes > limit:
        raise NodeLimit
    if bd.total == 0:
        return True
    emptiable, witness = prune_scan(bd, rule)
    if not emptiable:
        stats.scan_cuts += 1
        return False
    if witness is not None:
        for mv in witness:
            bd.play_pair(*mv)
        trail.extend(witness)
        return True
    nforced = _forced_moves(bd, rule, trail, stats)
    if bd.total == 0:
        return True
    sig = bd.occ_mask
    if sig in tt:
        stats.tt_hits += 1
        for _ in range(nforced):
            bd.unplay()
            trail.pop()
        return False
    if len(tt) < tt_cap:
        tt.add(sig)
    for mv in playable_pairs(bd, rule):
        bd.play_pair(*mv)
        trail.append(mv)
        if _dfs(bd, rule, tt, tt_cap, stats, limit, trail):
            return True
        trail.pop()
        bd.unplay()
    for _ in range(nforced):
        bd.unplay()
        trail.pop()
    return False


def solve(bd, rule, node_limit=10**8, use_rollout=True, rollout_seed=0,
          tt_cap=TT_CAP):
    """Decide the current position.  The board is restored before return."""
    stats = SolveStats()
    depth0 = len(bd.undo_log)
    if bd.total == 0:
        return SolveResult("winnable", [], stats)
    if any(r % 2 for r in bd.remaining):
        return SolveResult("impossible", None, stats)
    if use_rollout:
        k = sum(1 for r in bd.remaining if r == 4)
        attempts = rollout_attempt_count(k, rule)
        witness = rollout(bd, rule, rollout_seed ^ ROLLOUT_SALT, attempts,
                          stats)
        if witness is not None:
            return SolveResult("winnable", witness, stats)
    trail = []
    try:
        won = _dfs(bd, rule, set(), tt_cap, stats, node_limit, trail)
    except NodeLimit:
        bd.unplay_to(depth0)
        return SolveResult("aborted", None, stats)
    bd.unplay_to(depth0)
    if won:
        return SolveResult("winnable", trail, stats)
    return SolveResult("impossible", None, stats)
