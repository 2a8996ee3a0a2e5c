"""CNF generation for abstract order types with no k-crossing family.

The encoding asks whether an abstract order type on n points (labeled by
x-order) can avoid any k segments that pairwise cross. Variables:

* triple variables X(a,b,c) for a < b < c, ids 1..C(n,3) in lexicographic
  order; true means counterclockwise. A triple queried in permuted argument
  order is the sorted variable negated iff the permutation is odd.
* pair variables Y({a,b},{c,d}) for disjoint segments, ids following the
  triple block; for each 4-subset w < x < y < z the pairings
  ({w,x},{y,z}), ({w,y},{x,z}), ({w,z},{x,y}) get consecutive ids.

Clause groups, in instance order:

1. orientation-sequence axioms: for every a < b < c < d the sequence
   (X_abc, X_abd, X_acd, X_bcd) changes sign at most once, enforced by the
   eight forbidden patterns (+,-,+)/(-,+,-) over position triples;
2. crossing definition: Y <-> both endpoint pairs of each segment straddle
   the other segment's line, expanded as a full biconditional (8 clauses per
   pair variable) so models decode and verify directly -- this costs a
   constant factor over the one-directional encoding the family clauses need;
3. family exclusion: for every 2k-subset and every perfect matching of it
   into k segments, at least one of the C(k,2) segment pairs does not cross.

No solver is bundled: instances go out as DIMACS CNF and models come back
as whitespace-separated signed integers ('v'-prefixed lines tolerated).
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import BinaryIO, Iterable, Optional, Sequence, Union

from .errors import NotGeneralPositionError, ParseError, SignotopeViolationError
from .geometry import PointSet, Segment, integer_coordinates, is_general_position

Assignment = list[bool]

_PAIRING_POSITIONS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


class VarMap:
    """Deterministic variable numbering for a given point count."""

    def __init__(self, n: int):
        if n < 3:
            raise ValueError("need at least 3 points for orientation variables")
        self.n = n
        self._triple_id: dict[tuple[int, int, int], int] = {}
        for i, t in enumerate(combinations(range(n), 3), start=1):
            self._triple_id[t] = i
        self.num_triple_vars = len(self._triple_id)
        self._pair_id: dict[tuple[tuple[int, int], tuple[int, int]], int] = {}
        next_id = self.num_triple_vars
        for w, x, y, z in combinations(range(n), 4):
            quad = (w, x, y, z)
            for first, second in _PAIRING_POSITIONS:
                next_id += 1
                key = ((quad[first[0]], quad[first[1]]), (quad[second[0]], quad[second[1]]))
                self._pair_id[key] = next_id
        self.num_pair_vars = len(self._pair_id)
        self.num_vars = next_id

    def triple_var(self, a: int, b: int, c: int) -> int:
        """Variable id of the sorted triple a < b < c."""
        return self._triple_id[(a, b, c)]

    def triple_literal(self, p: int, q: int, r: int) -> int:
        """Signed literal for orientation(p, q, r): negated on odd permutations."""
        sign = 1
        if p > q:
            p, q = q, p
            sign = -sign
        if q > r:
            q, r = r, q
            sign = -sign
        if p > q:
            p, q = q, p
            sign = -sign
        return sign * self._triple_id[(p, q, r)]

    def pair_var(self, s1, s2) -> int:
        """Variable id of the unordered pair of disjoint segments."""
        a, b = sorted((s1.a, s1.b) if isinstance(s1, Segment) else s1)
        c, d = sorted((s2.a, s2.b) if isinstance(s2, Segment) else s2)
        if (a, b) > (c, d):
            (a, b), (c, d) = (c, d), (a, b)
        try:
            return self._pair_id[((a, b), (c, d))]
        except KeyError:
            raise ValueError(f"segments ({a},{b}) and ({c},{d}) are not disjoint") from None


class Cnf:
    """A clause database: clauses are tuples of nonzero signed variable ids."""

    __slots__ = ("num_vars", "clauses", "sections")

    def __init__(self, num_vars: int, clauses: list[tuple[int, ...]],
                 sections: Optional[tuple[int, int, int]] = None):
        self.num_vars = num_vars
        self.clauses = clauses
        #: clause counts of the axiom / crossing-definition / family groups
        self.sections = sections

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def _matching_patterns(points: int) -> list[tuple[tuple[int, int], ...]]:
    """All perfect matchings of range(points) as position pairs, deterministic order."""

    def rec(positions: tuple[int, ...]):
        if not positions:
            yield ()
            return
        first = positions[0]
        for i in range(1, len(positions)):
            rest = positions[1:i] + positions[i + 1:]
            for sub in rec(rest):
                yield ((first, positions[i]),) + sub

    return list(rec(tuple(range(points))))


def encode_no_k_family(n: int, k: int) -> tuple[Cnf, VarMap]:
    """CNF asserting an n-point abstract order type with no k-crossing family exists."""
    if k < 2 or n < 2 * k:
        raise ValueError(f"need n >= 2k >= 4, got n={n}, k={k}")
    vm = VarMap(n)
    clauses: list[tuple[int, ...]] = []

    # group 1: at most one sign change along each 4-tuple sequence
    triple_id = vm._triple_id
    for a, b, c, d in combinations(range(n), 4):
        s = (triple_id[(a, b, c)], triple_id[(a, b, d)],
             triple_id[(a, c, d)], triple_id[(b, c, d)])
        for i, j, l in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
            clauses.append((-s[i], s[j], -s[l]))
            clauses.append((s[i], -s[j], s[l]))
    g1 = len(clauses)

    # group 2: Y <-> proper crossing of the two segments
    pair_id = vm._pair_id
    lit = vm.triple_literal
    for w, x, y, z in combinations(range(n), 4):
        quad = (w, x, y, z)
        for first, second in _PAIRING_POSITIONS:
            a, b = quad[first[0]], quad[first[1]]
            c, d = quad[second[0]], quad[second[1]]
            yv = pair_id[((a, b), (c, d))]
            la = lit(a, b, c)
            lb = lit(a, b, d)
            lc = lit(c, d, a)
            ld = lit(c, d, b)
            clauses.append((-yv, la, lb))
            clauses.append((-yv, -la, -lb))
            clauses.append((-yv, lc, ld))
            clauses.append((-yv, -lc, -ld))
            clauses.append((yv, -la, lb, -lc, ld))
            clauses.append((yv, -la, lb, lc, -ld))
            clauses.append((yv, la, -lb, -lc, ld))
            clauses.append((yv, la, -lb, lc, -ld))
    g2 = len(clauses) - g1

    # group 3: every matching of every 2k-subset has a non-crossing pair
    patterns = _matching_patterns(2 * k)
    pattern_pairs = [tuple(combinations(p, 2)) for p in patterns]
    for subset in combinations(range(n), 2 * k):
        for pairs in pattern_pairs:
            clauses.append(tuple(
                -pair_id[((subset[p1], subset[p2]), (subset[q1], subset[q2]))]
                for (p1, p2), (q1, q2) in pairs
            ))
    g3 = len(clauses) - g1 - g2

    return Cnf(vm.num_vars, clauses, sections=(g1, g2, g3)), vm


def default_dimacs_comments(vm: VarMap, k: Optional[int] = None) -> list[str]:
    lines = [
        f"order-type instance on n={vm.n} points" + (f", excluding {k}-crossing families" if k else ""),
        f"vars 1..{vm.num_triple_vars}: X(a,b,c) for a<b<c lexicographic; true = counterclockwise",
        f"vars {vm.num_triple_vars + 1}..{vm.num_vars}: Y(ab,cd) per 4-subset w<x<y<z,",
        "  pairings (wx|yz), (wy|xz), (wz|xy) in that order; true = segments cross",
        "clause groups: orientation-sequence axioms, crossing biconditional, family exclusion",
    ]
    return lines


def emit_dimacs(cnf: Cnf, out: Union[str, Path, BinaryIO], comments: Iterable[str] = ()) -> None:
    """Write standard DIMACS CNF with LF line endings; byte-identical across runs."""
    own = isinstance(out, (str, Path))
    sink: BinaryIO = open(out, "wb") if own else out
    try:
        lines = [f"c {c}" for c in comments]
        lines.append(f"p cnf {cnf.num_vars} {cnf.num_clauses}")
        chunk = 65536
        buf: list[str] = lines
        for clause in cnf.clauses:
            buf.append(" ".join(map(str, clause)) + " 0")
            if len(buf) >= chunk:
                sink.write(("\n".join(buf) + "\n").encode("ascii"))
                buf = []
        if buf:
            sink.write(("\n".join(buf) + "\n").encode("ascii"))
    finally:
        if own:
            sink.close()


def parse_dimacs(text: str) -> Cnf:
    """Round-trip reader for DIMACS CNF (comments ignored)."""
    num_vars = None
    declared = None
    clauses: list[tuple[int, ...]] = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise ParseError(f"bad problem line {line!r}", lineno)
            num_vars, declared = int(fields[2]), int(fields[3])
            continue
        if num_vars is None:
            raise ParseError("clause before problem line", lineno)
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(pending))
                pending = []
            else:
                if abs(lit) > num_vars:
                    raise ParseError(f"literal {lit} exceeds {num_vars} variables", lineno)
                pending.append(lit)
    if pending:
        clauses.append(tuple(pending))
    if num_vars is None:
        raise ParseError("missing problem line")
    if declared is not None and declared != len(clauses):
        raise ParseError(f"expected {declared} clauses, found {len(clauses)}")
    return Cnf(num_vars, clauses)


def assignment_from_pointset(S: PointSet, vm: VarMap) -> Assignment:
    """Evaluate every variable on a realizable point set.

    Points are taken in left-to-right (x-sorted) order, the labeling for
    which realizable sets satisfy the orientation-sequence axioms; the
    x-coordinates must therefore be pairwise distinct (normalize first if
    needed). For point sets already sorted by x this is the identity
    labeling. Y variables get the exact crossing predicate.
    """
    if len(S) != vm.n:
        raise ValueError(f"point set has {len(S)} points, variable map expects {vm.n}")
    if not is_general_position(S):
        raise NotGeneralPositionError("assignment requires general position")
    if len({p.x for p in S}) != len(S):
        raise ValueError("x-coordinates must be pairwise distinct; apply normalize_coordinates")
    order = sorted(range(len(S)), key=lambda i: S[i].x)
    raw = integer_coordinates(S)
    coords = [raw[i] for i in order]

    asg: Assignment = [False] * (vm.num_vars + 1)

    def orient(a: int, b: int, c: int) -> int:
        ax, ay = coords[a]
        bx, by = coords[b]
        cx, cy = coords[c]
        d = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
        return 1 if d > 0 else -1

    for (a, b, c), var in vm._triple_id.items():
        asg[var] = orient(a, b, c) > 0
    for ((a, b), (c, d)), var in vm._pair_id.items():
        asg[var] = (
            orient(a, b, c) != orient(a, b, d)
            and orient(c, d, a) != orient(c, d, b)
        )
    return asg


def verify_assignment(cnf: Cnf, asg: Assignment) -> Optional[int]:
    """Index of the first violated clause, or ``None`` when satisfied."""
    if len(asg) != cnf.num_vars + 1:
        raise ValueError(f"assignment must cover variables 1..{cnf.num_vars}")
    for idx, clause in enumerate(cnf.clauses):
        for lit in clause:
            if asg[lit] if lit > 0 else not asg[-lit]:
                break
        else:
            return idx
    return None


def decode_order_type(asg: Assignment, vm: VarMap) -> list[tuple[int, int, int, int]]:
    """Chirotope listing (a, b, c, sign) of the triple block of an assignment.

    Rejects assignments whose triple block violates the orientation-sequence
    axioms, i.e. is not an abstract order type.
    """
    if len(asg) < vm.num_triple_vars + 1:
        raise ValueError("assignment does not cover the triple variables")
    tid = vm._triple_id
    for a, b, c, d in combinations(range(vm.n), 4):
        seq = (asg[tid[(a, b, c)]], asg[tid[(a, b, d)]],
               asg[tid[(a, c, d)]], asg[tid[(b, c, d)]])
        changes = sum(seq[i] != seq[i + 1] for i in range(3))
        if changes > 1:
            raise SignotopeViolationError(
                f"sign sequence of 4-tuple ({a},{b},{c},{d}) changes more than once"
            )
    return [(a, b, c, 1 if asg[var] else -1) for (a, b, c), var in tid.items()]


def parse_model(text: str, num_vars: int) -> Assignment:
    """Parse a solver model: whitespace-separated signed ints, optional 0 terminator.

    Lines starting with 'c' or 's' are skipped and a leading 'v' token prefix
    is tolerated. The model must assign every variable 1..num_vars.
    """
    values: dict[int, bool] = {}
    done = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "cs":
            continue
        if line.startswith("v"):
            line = line[1:]
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad model token {tok!r}", lineno) from None
            if lit == 0:
                done = True
                break
            var = abs(lit)
            if var > num_vars:
                raise ParseError(f"literal {lit} exceeds {num_vars} variables", lineno)
            if values.get(var, lit > 0) != (lit > 0):
                raise ParseError(f"conflicting values for variable {var}", lineno)
            values[var] = lit > 0
        if done:
            break
    asg: Assignment = [False] * (num_vars + 1)
    for var in range(1, num_vars + 1):
        if var not in values:
            raise ParseError(f"model does not assign variable {var}")
        asg[var] = values[var]
    return asg
