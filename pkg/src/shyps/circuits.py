"""Physical circuits: IR, syndrome-extraction schedules, tableau verification.

Compiled generator sequences lower to a :class:`PhysicalCircuit` -- a list of
depth-1 layers of gates from ``{PZ, PX, CX, CZ, S, H, MZ, MX, RELABEL}``.
Relabel layers are zero-cost bookkeeping; an X-type phase layer lowers to a
fold / phase / fold triple, and adjacent fold pairs from consecutive X-type
rounds cancel, so a pure run of X-type layers realises the merged
syndrome-extraction count of its sequence.

Verification is exact and noiseless.  :class:`StabilizerTableau` tracks the
state in the Aaronson--Gottesman style; :func:`tableau_run` drives a circuit
while additionally conjugating *tracked* Pauli rows in the Heisenberg
picture.  A tracked row that anticommutes with a measured observable is
repaired by multiplying in a *resource* Pauli -- an operator that stabilises
the state for every code-space input, namely a propagated preparation
stabiliser or a prior measurement record -- so teleportation corrections are
folded into the Pauli frame instead of being applied.
:func:`verify_logical_action` compares the tracked logical operators against
the claimed symplectic image modulo the gauge group and the surviving
resources, reporting phases as a frame rather than asserting them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gf2
from .code import ShypsCode
from .compiler import (FoldHadamard, GeneratorSequence, PhaseLayer,
                       QubitRelabel, TeleportInBlockCnot, TransversalCnot,
                       TransversalCz)
from .symplectic import SymplecticMatrix

_ONE_QUBIT = ("S", "H", "PZ", "PX", "MZ", "MX")
_TWO_QUBIT = ("CX", "CZ")


# ---------------------------------------------------------------------------
# Circuit IR
# ---------------------------------------------------------------------------


@dataclass
class PhysicalCircuit:
    """Layered circuit over ``n`` physical qubits.

    Gates are tuples ``(mnemonic, *args)``; a ``("RELABEL", images)`` gate
    carries a full qubit permutation and must be alone in its layer.
    """

    n: int
    layers: list = field(default_factory=list)

    def validate(self) -> None:
        for t, layer in enumerate(self.layers):
            used: set[int] = set()
            for gate in layer:
                kind = gate[0]
                if kind == "RELABEL":
                    if len(layer) != 1:
                        raise ValueError(f"relabel must be alone in layer {t}")
                    images = gate[1]
                    if sorted(images) != list(range(self.n)):
                        raise ValueError(f"layer {t}: relabel is not a permutation")
                elif kind in _TWO_QUBIT:
                    _, a, b = gate
                    if a == b:
                        raise ValueError(f"layer {t}: two-qubit gate on one qubit")
                    self._claim(used, a, t)
                    self._claim(used, b, t)
                elif kind in _ONE_QUBIT:
                    self._claim(used, gate[1], t)
                else:
                    raise ValueError(f"layer {t}: unknown gate {kind!r}")

    def _claim(self, used: set, q: int, t: int) -> None:
        if not 0 <= q < self.n:
            raise ValueError(f"layer {t}: qubit {q} out of range")
        if q in used:
            raise ValueError(f"layer {t}: qubit {q} used twice")
        used.add(q)

    @property
    def depth(self) -> int:
        return sum(1 for layer in self.layers
                   if any(g[0] != "RELABEL" for g in layer))


def emit(circuit: PhysicalCircuit) -> str:
    """Deterministic text form; one LAYER block per layer, LF endings."""
    lines = []
    for layer in circuit.layers:
        lines.append("LAYER")
        for gate in sorted(layer):
            if gate[0] == "RELABEL":
                moved = " ".join(f"{q}->{p}" for q, p in enumerate(gate[1])
                                 if q != p)
                lines.append(("RELABEL " + moved).rstrip())
            else:
                lines.append(" ".join(str(x) for x in gate))
    return "\n".join(lines)


def parse(text: str, n: int | None = None) -> PhysicalCircuit:
    """Inverse of :func:`emit`; infers the qubit count unless given."""
    layers: list[list] = []
    top = -1
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line == "LAYER":
            layers.append([])
            continue
        if not layers:
            raise ValueError("gate line before the first LAYER")
        parts = line.split()
        kind = parts[0]
        if kind == "RELABEL":
            moves = {}
            for item in parts[1:]:
                src, _, dst = item.partition("->")
                moves[int(src)] = int(dst)
            layers[-1].append(("RELABEL", moves))  # resolved below
            top = max([top, *moves.keys(), *moves.values()])
        elif kind in _TWO_QUBIT:
            a, b = int(parts[1]), int(parts[2])
            layers[-1].append((kind, a, b))
            top = max(top, a, b)
        elif kind in _ONE_QUBIT:
            q = int(parts[1])
            layers[-1].append((kind, q))
            top = max(top, q)
        else:
            raise ValueError(f"unknown gate line: {line!r}")
    if n is None:
        n = top + 1
    for layer in layers:
        for i, gate in enumerate(layer):
            if gate[0] == "RELABEL":
                images = list(range(n))
                for src, dst in gate[1].items():
                    images[src] = dst
                layer[i] = ("RELABEL", tuple(images))
    circuit = PhysicalCircuit(n, layers)
    circuit.validate()
    return circuit


# ---------------------------------------------------------------------------
# Lowering generator sequences
# ---------------------------------------------------------------------------


def _grid_tau(n_r: int, off: int, N: int) -> np.ndarray:
    images = np.arange(N, dtype=np.int64)
    images[off:off + n_r * n_r] = off + gf2.tau_perm(n_r)
    return images


def _phase_gates(pairing: np.ndarray, off: int) -> list:
    gates = []
    for q, p in enumerate(pairing):
        p = int(p)
        if p == q:
            gates.append(("S", off + q))
        elif q < p:
            gates.append(("CZ", off + q, off + p))
    return gates


def _lower_layer(layer, code: ShypsCode, N: int) -> list:
    """Moments ``(gates, images-or-None)`` realising one generator layer."""
    n = code.n
    if isinstance(layer, TransversalCnot):
        gates = [("CX", layer.ctrl * n + q, layer.tgt * n + int(p))
                 for q, p in enumerate(layer.pairing)]
        return [(gates, None)]
    if isinstance(layer, TransversalCz):
        gates = [("CZ", layer.bi * n + q, layer.bj * n + int(p))
                 for q, p in enumerate(layer.pairing)]
        return [(gates, None)]
    if isinstance(layer, PhaseLayer):
        off = layer.block * n
        phase = (_phase_gates(layer.pairing, off), None)
        if not layer.x_side:
            return [phase]
        fold = ([("H", off + q) for q in range(n)], _grid_tau(code.n_r, off, N))
        return [fold, phase, (list(fold[0]), fold[1].copy())]
    if isinstance(layer, FoldHadamard):
        off = layer.block * n
        return [([("H", off + q) for q in range(n)],
                 _grid_tau(code.n_r, off, N))]
    if isinstance(layer, QubitRelabel):
        images = np.arange(N, dtype=np.int64)
        off = layer.block * n
        images[off:off + n] = off + np.asarray(layer.images)
        return [([], images)]
    if isinstance(layer, TeleportInBlockCnot):
        aux, blk = layer.aux * n, layer.block * n
        moments = [([("PX", aux + q) for q in range(n)], None)]
        for rnd in layer.inner.rounds:
            moments.extend(_lower_round(rnd, code, N))
        swap = np.arange(N, dtype=np.int64)
        swap[aux:aux + n] = blk + np.arange(n)
        swap[blk:blk + n] = aux + np.arange(n)
        moments.append(([("MZ", blk + q) for q in range(n)], swap))
        return moments
    raise TypeError(f"cannot lower layer {type(layer).__name__}")


def _merge_perms(p1, p2, N: int):
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    out = p1.copy()
    moved = p2 != np.arange(N)
    out[moved] = p2[moved]
    return out


def _lower_round(rnd, code: ShypsCode, N: int) -> list:
    streams = [_lower_layer(layer, code, N) for layer in rnd]
    moments = []
    for t in range(max(len(s) for s in streams)):
        gates: list = []
        perm = None
        for s in streams:
            if t < len(s):
                gates.extend(s[t][0])
                perm = _merge_perms(perm, s[t][1], N)
        moments.append((gates, perm))
    return moments


def _cancels(m1, m2) -> bool:
    # adjacent identical fold moments (all-H plus an involutive relabel)
    g1, p1 = m1
    g2, p2 = m2
    if not g1 or len(g1) != len(g2) or set(g1) != set(g2):
        return False
    if any(g[0] != "H" for g in g1):
        return False
    if p1 is None or p2 is None or not np.array_equal(p1, p2):
        return False
    return bool(np.array_equal(p1[p1], np.arange(len(p1))))


def lower_sequence(code: ShypsCode, seq: GeneratorSequence) -> PhysicalCircuit:
    """Physical circuit realising a compiled generator sequence."""
    touched = [b for rnd in seq.rounds for layer in rnd for b in layer.blocks]
    blocks = max([seq.blocks, *(b + 1 for b in touched)] or [seq.blocks])
    N = blocks * code.n
    stack: list = []
    for rnd in seq.rounds:
        for moment in _lower_round(rnd, code, N):
            if stack and _cancels(stack[-1], moment):
                stack.pop()
            else:
                stack.append(moment)
    layers = []
    for gates, perm in stack:
        if gates:
            layers.append([(g[0], *(int(x) for x in g[1:])) for g in gates])
        if perm is not None and (perm != np.arange(N)).any():
            layers.append([("RELABEL", tuple(int(x) for x in perm))])
    circuit = PhysicalCircuit(N, layers)
    circuit.validate()
    return circuit


# ---------------------------------------------------------------------------
# Syndrome-extraction schedules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SESchedule:
    """Combined depth-8 gauge measurement schedule.

    The circuit acts on ``3n`` qubits: data ``0..n-1``, X-type auxiliaries
    ``n..2n-1`` and Z-type auxiliaries ``2n..3n-1``.  ``x_aux[g]`` is the
    auxiliary qubit whose MX outcome reads X-type gauge generator ``g`` (row
    ``g`` of the X gauge matrix), and symmetrically for ``z_aux``.
    """

    circuit: PhysicalCircuit
    x_aux: np.ndarray
    z_aux: np.ndarray
    method: str

    @property
    def depth(self) -> int:
        return self.circuit.depth


def _se_assemble(code: ShypsCode, x_classes, z_classes, method: str) -> SESchedule:
    n = code.n
    x_aux = n + np.arange(n)
    z_aux = 2 * n + np.arange(n)
    layers = [[("PX", int(q)) for q in x_aux]]
    layers += [[("CX", a, d) for a, d in cls] for cls in x_classes]
    layers[3].extend(("PZ", int(q)) for q in z_aux)
    layers.append([("MX", int(q)) for q in x_aux]
                  + [("CX", d, a) for d, a in z_classes[0]])
    layers += [[("CX", d, a) for d, a in cls] for cls in z_classes[1:]]
    layers.append([("MZ", int(q)) for q in z_aux])
    circuit = PhysicalCircuit(3 * n, layers)
    circuit.validate()
    sched = SESchedule(circuit, x_aux, z_aux, method)
    assert sched.depth == 8
    assert sum(1 for l in circuit.layers for g in l if g[0] == "CX") == 6 * n
    return sched


def schedule_se_structure(code: ShypsCode) -> SESchedule:
    """Gauge measurement addressed by the cyclic offsets of the check rows.

    Every check row has support at offsets ``{0, a, b}``, so the t-th CNOT
    layer pairs each auxiliary with its t-th support position -- a bijection
    on data qubits, giving three layers per side and combined depth 8.
    """
    n_r, n = code.n_r, code.n
    offsets = (0, code.simplex.a, code.simplex.b)
    x_classes, z_classes = [], []
    for o in offsets:
        xc, zc = [], []
        for u in range(n_r):
            for v in range(n_r):
                g = u * n_r + v
                xc.append((n + g, ((u + o) % n_r) * n_r + v))
                zc.append((u * n_r + (v + o) % n_r, 2 * n + g))
        x_classes.append(xc)
        z_classes.append(zc)
    return _se_assemble(code, x_classes, z_classes, "structure")


def _tanner_edge_color(rows: np.ndarray, deg: int) -> list[list[tuple]]:
    """Colour classes of the (generator, qubit) Tanner edges.

    The graph is ``deg``-regular bipartite, so ``deg`` colours suffice; one
    perfect matching is extracted per colour with augmenting paths.
    """
    m, _ = rows.shape
    adj = [list(map(int, np.flatnonzero(rows[g]))) for g in range(m)]
    classes = []
    for _ in range(deg):
        match: dict[int, int] = {}

        def augment(g: int, seen: set) -> bool:
            for q in adj[g]:
                if q in seen:
                    continue
                seen.add(q)
                if q not in match or augment(match[q], seen):
                    match[q] = g
                    return True
            return False

        for g in range(m):
            if not augment(g, set()):
                raise RuntimeError("regular bipartite matching failed")
        classes.append([(g, q) for q, g in sorted(match.items())])
        for q, g in match.items():
            adj[g].remove(q)
    return classes


def schedule_se_coloring(code: ShypsCode) -> SESchedule:
    """Gauge measurement layered by Tanner-graph edge colouring."""
    n = code.n
    deg = int(code.G_X[0].sum())
    x_classes = [[(n + g, q) for g, q in cls]
                 for cls in _tanner_edge_color(code.G_X, deg)]
    z_classes = [[(q, 2 * n + g) for g, q in cls]
                 for cls in _tanner_edge_color(code.G_Z, deg)]
    return _se_assemble(code, x_classes, z_classes, "coloring")


def aggregate_stabilizers(code: ShypsCode, outcomes, side: str = "X") -> np.ndarray:
    """Stabilizer outcome bits from one round of gauge outcomes.

    X-type stabilizers are the G-combinations of X-type gauge generators
    (and symmetrically for Z), so each stabilizer bit is the parity of the
    gauge bits its G-row selects.
    """
    outcomes = np.asarray(outcomes, dtype=np.uint8) & 1
    if outcomes.shape != (code.n,):
        raise ValueError("need one outcome bit per gauge generator")
    G, n_r = code.simplex.G, code.n_r
    if side == "X":
        M = gf2.kron(gf2.identity(n_r), G)
    elif side == "Z":
        M = gf2.kron(G, gf2.identity(n_r))
    else:
        raise ValueError(f"unknown side {side!r}")
    return gf2.mul(M, outcomes.reshape(-1, 1))[:, 0]


def check_diag_circuit_distance(code: ShypsCode, layer: PhaseLayer):
    """Distance criterion for a depth-1 phase layer.

    Fails iff some CZ of the layer couples two qubits sharing a grid row or
    a grid column; returns ``(ok, witness)`` with the offending qubit pair.
    """
    n_r = code.n_r
    for q, p in enumerate(layer.pairing):
        p = int(p)
        if p <= q:
            continue
        if q // n_r == p // n_r or q % n_r == p % n_r:
            return False, (q, p)
    return True, None


# ---------------------------------------------------------------------------
# Pauli rows and the stabilizer tableau
# ---------------------------------------------------------------------------


class PauliRows:
    """Rows of Pauli operators ``i^ph * X^x Z^z`` with batched gate action."""

    def __init__(self, n: int, x=None, z=None, ph=None):
        self.n = n
        m = 0 if x is None else len(x)
        self.x = np.zeros((m, n), dtype=np.uint8) if x is None else np.asarray(x, dtype=np.uint8)
        self.z = np.zeros((m, n), dtype=np.uint8) if z is None else np.asarray(z, dtype=np.uint8)
        self.ph = np.zeros(m, dtype=np.uint8) if ph is None else np.asarray(ph, dtype=np.uint8)

    def h(self, qs) -> None:
        qs = np.atleast_1d(qs)
        self.ph = (self.ph + 2 * (self.x[:, qs] & self.z[:, qs]).sum(axis=1)) % 4
        tmp = self.x[:, qs].copy()
        self.x[:, qs] = self.z[:, qs]
        self.z[:, qs] = tmp

    def s(self, qs) -> None:
        qs = np.atleast_1d(qs)
        self.ph = (self.ph + self.x[:, qs].sum(axis=1)) % 4
        self.z[:, qs] ^= self.x[:, qs]

    def cx(self, cs, ts) -> None:
        cs, ts = np.atleast_1d(cs), np.atleast_1d(ts)
        self.x[:, ts] ^= self.x[:, cs]
        self.z[:, cs] ^= self.z[:, ts]

    def cz(self, a_s, b_s) -> None:
        a_s, b_s = np.atleast_1d(a_s), np.atleast_1d(b_s)
        self.ph = (self.ph + 2 * (self.x[:, a_s] & self.x[:, b_s]).sum(axis=1)) % 4
        self.z[:, a_s] ^= self.x[:, b_s]
        self.z[:, b_s] ^= self.x[:, a_s]

    def xgate(self, qs) -> None:
        qs = np.atleast_1d(qs)
        self.ph = (self.ph + 2 * self.z[:, qs].sum(axis=1)) % 4

    def zgate(self, qs) -> None:
        qs = np.atleast_1d(qs)
        self.ph = (self.ph + 2 * self.x[:, qs].sum(axis=1)) % 4

    def relabel(self, images) -> None:
        images = np.asarray(images)
        x, z = self.x.copy(), self.z.copy()
        x[:, images] = self.x
        z[:, images] = self.z
        self.x, self.z = x, z

    def row(self, i: int) -> tuple:
        return self.x[i].copy(), self.z[i].copy(), int(self.ph[i])

    def set_row(self, i: int, x, z, ph: int) -> None:
        self.x[i], self.z[i], self.ph[i] = x, z, ph % 4

    def mult_into(self, idx, x, z, ph: int) -> None:
        """rows[idx] <- (x, z, ph) * rows[idx] for every listed row."""
        idx = np.atleast_1d(idx)
        extra = 2 * (np.asarray(z)[None, :] & self.x[idx]).sum(axis=1)
        self.ph[idx] = (self.ph[idx] + ph + extra) % 4
        self.x[idx] ^= x
        self.z[idx] ^= z

    def append(self, x, z, ph: int) -> int:
        self.x = np.vstack([self.x, np.asarray(x, dtype=np.uint8)[None, :]])
        self.z = np.vstack([self.z, np.asarray(z, dtype=np.uint8)[None, :]])
        self.ph = np.append(self.ph, np.uint8(ph % 4))
        return len(self.ph) - 1

    def anti_z(self, q: int) -> np.ndarray:
        """Row indices anticommuting with Z_q."""
        return np.flatnonzero(self.x[:, q])

    def sign_bit(self, i: int) -> int:
        w = int((self.x[i] & self.z[i]).sum())
        val = (int(self.ph[i]) - w) % 4
        assert val % 2 == 0, "row is not a signed Hermitian Pauli"
        return val // 2

    def symplectic(self) -> np.ndarray:
        return np.hstack([self.x, self.z])


def _unit_row(n: int, q: int, z: bool) -> tuple:
    x = np.zeros(n, dtype=np.uint8)
    zz = np.zeros(n, dtype=np.uint8)
    (zz if z else x)[q] = 1
    return x, zz


class StabilizerTableau:
    """State tracker for ``n`` qubits in the destabilizer/stabilizer form.

    Rows ``0..n-1`` are destabilizers, ``n..2n-1`` stabilizers; the initial
    state is ``|0..0>``.  Indeterminate measurements take outcome 0, so runs
    are reproducible.
    """

    def __init__(self, n: int):
        self.n = n
        x = np.zeros((2 * n, n), dtype=np.uint8)
        z = np.zeros((2 * n, n), dtype=np.uint8)
        x[:n] = np.eye(n, dtype=np.uint8)
        z[n:] = np.eye(n, dtype=np.uint8)
        self.rows = PauliRows(n, x, z, np.zeros(2 * n, dtype=np.uint8))

    def measure_z(self, q: int) -> tuple[int, bool]:
        rows, n = self.rows, self.n
        anti = rows.anti_z(q)
        stab_anti = anti[anti >= n]
        if stab_anti.size:
            p = int(stab_anti[0])
            others = anti[anti != p]
            if others.size:
                rows.mult_into(others, *rows.row(p))
            rows.set_row(p - n, *rows.row(p))
            x, z = _unit_row(n, q, z=True)
            rows.set_row(p, x, z, 0)  # outcome 0 by convention
            return 0, False
        acc_x = np.zeros(n, dtype=np.uint8)
        acc_z = np.zeros(n, dtype=np.uint8)
        acc_ph = 0
        for i in anti:  # all are destabilizer indices here
            sx, sz, sph = rows.row(int(i) + n)
            acc_ph = (sph + acc_ph + 2 * int((sz & acc_x).sum())) % 4
            acc_x ^= sx
            acc_z ^= sz
        expect_x, expect_z = _unit_row(n, q, z=True)
        assert not acc_x.any() and np.array_equal(acc_z, expect_z)
        return (acc_ph % 4) // 2, True

    def measure_x(self, q: int) -> tuple[int, bool]:
        self.rows.h(q)
        out = self.measure_z(q)
        self.rows.h(q)
        return out

    def prep_z(self, q: int) -> None:
        m, _ = self.measure_z(q)
        if m:
            self.rows.xgate(q)

    def prep_x(self, q: int) -> None:
        self.rows.h(q)
        self.prep_z(q)
        self.rows.h(q)

    def expectation(self, x, z) -> int | None:
        """Outcome of the Hermitian Pauli with the given support, else None."""
        x = np.asarray(x, dtype=np.uint8)
        z = np.asarray(z, dtype=np.uint8)
        rows, n = self.rows, self.n
        # dual-basis coefficients: anticommutation with the destabilizers
        coeff = (rows.z[:n] @ x + rows.x[:n] @ z) % 2
        acc_x = np.zeros(n, dtype=np.uint8)
        acc_z = np.zeros(n, dtype=np.uint8)
        acc_ph = 0
        for i in np.flatnonzero(coeff):
            sx, sz, sph = rows.row(int(i) + n)
            acc_ph = (sph + acc_ph + 2 * int((sz & acc_x).sum())) % 4
            acc_x ^= sx
            acc_z ^= sz
        if not (np.array_equal(acc_x, x) and np.array_equal(acc_z, z)):
            return None
        w = int((x & z).sum())
        assert (acc_ph - w) % 2 == 0, "operator is not a signed Hermitian Pauli"
        return ((acc_ph - w) % 4) // 2


# ---------------------------------------------------------------------------
# Running circuits with tracked Paulis
# ---------------------------------------------------------------------------


@dataclass
class RunResult:
    tableau: StabilizerTableau
    measurements: list
    trackers: PauliRows | None
    resources: PauliRows
    resource_safe: np.ndarray  # rows that stabilise the output for any input
    violations: list

    def outcome(self, qubit: int, which: int = 0) -> int:
        hits = [m[3] for m in self.measurements if m[2] == qubit]
        return hits[which]


def _apply_unitary_layer(layer, sets) -> None:
    by_kind: dict[str, list] = {}
    for gate in layer:
        by_kind.setdefault(gate[0], []).append(gate[1:])
    for kind, args in by_kind.items():
        if kind == "RELABEL":
            for rows in sets:
                rows.relabel(np.asarray(args[0][0]))
        elif kind == "CX":
            cs = np.array([a for a, _ in args])
            ts = np.array([b for _, b in args])
            for rows in sets:
                rows.cx(cs, ts)
        elif kind == "CZ":
            a_s = np.array([a for a, _ in args])
            b_s = np.array([b for _, b in args])
            for rows in sets:
                rows.cz(a_s, b_s)
        elif kind == "S":
            qs = np.array([q for (q,) in args])
            for rows in sets:
                rows.s(qs)
        elif kind == "H":
            qs = np.array([q for (q,) in args])
            for rows in sets:
                rows.h(qs)
        else:
            raise AssertionError(kind)


def _fix_trackers(trackers, resources, q: int, t: int, violations) -> None:
    if trackers is None:
        return
    for i in trackers.anti_z(q):
        cand = resources.anti_z(q)
        if cand.size == 0:
            violations.append((t, q, int(i)))
            continue
        trackers.mult_into(int(i), *resources.row(int(cand[0])))


def _collapse_resources(resources, safe, q: int, record_ph: int | None):
    """Repair the resource rows after a Z_q collapse at qubit q.

    Anticommuting rows are corrected pairwise against a pivot (preferring a
    provenance-safe one so safety is not diluted), which is then replaced
    by the measurement record, or dropped on a reset.  Returns the safety
    array, which may have grown.
    """
    anti = resources.anti_z(q)
    if anti.size:
        safe_anti = anti[safe[anti]]
        j0 = int(safe_anti[0]) if safe_anti.size else int(anti[0])
        rest = anti[anti != j0]
        if rest.size:
            resources.mult_into(rest, *resources.row(j0))
            if not safe[j0]:
                safe[rest] = False
        if record_ph is not None:
            x, z = _unit_row(resources.n, q, z=True)
            resources.set_row(j0, x, z, record_ph)
        else:
            resources.x[j0] = 0
            resources.z[j0] = 0
            resources.ph[j0] = 0
        safe[j0] = True
    elif record_ph is not None:
        x, z = _unit_row(resources.n, q, z=True)
        resources.append(x, z, record_ph)
        safe = np.append(safe, True)
    return safe


def _strip_qubit(rows, q: int) -> None:
    rows.x[:, q] = 0
    rows.z[:, q] = 0


def tableau_run(circuit: PhysicalCircuit, *,
                trackers: PauliRows | None = None,
                resources: PauliRows | None = None) -> RunResult:
    """Noiseless stabilizer run of a circuit from ``|0..0>``.

    Tracked rows evolve in the Heisenberg picture; measurement collisions
    are repaired with resource Paulis -- initial rows supplied by the
    caller (e.g. gauge generators, which preserve the tracked class),
    propagated preparation stabilisers and measurement records -- recording
    a violation when no repair exists.
    """
    circuit.validate()
    n = circuit.n
    tableau = StabilizerTableau(n)
    if resources is None:
        resources = PauliRows(n)
    elif resources.n != n:
        raise ValueError("resource rows sized for a different circuit")
    safe = np.zeros(len(resources.ph), dtype=bool)  # seeded rows are not
    sets = [tableau.rows, resources] + ([trackers] if trackers is not None else [])
    measurements: list = []
    violations: list = []
    for t, layer in enumerate(circuit.layers):
        unitary = [g for g in layer if g[0] in ("CX", "CZ", "S", "H", "RELABEL")]
        if unitary:
            _apply_unitary_layer(unitary, sets)
        for gate in layer:
            kind = gate[0]
            if kind in ("CX", "CZ", "S", "H", "RELABEL"):
                continue
            q = gate[1]
            if kind in ("MX", "PX"):
                for rows in sets:
                    rows.h(q)
            if kind in ("MZ", "MX"):
                _fix_trackers(trackers, resources, q, t, violations)
                m, det = tableau.measure_z(q)
                safe = _collapse_resources(resources, safe, q, record_ph=2 * m)
                measurements.append((t, kind, q, m, det))
            else:  # PZ / PX: reset to the +1 eigenstate
                _fix_trackers(trackers, resources, q, t, violations)
                m, _ = tableau.measure_z(q)
                if m:
                    tableau.rows.xgate(q)
                safe = _collapse_resources(resources, safe, q, record_ph=None)
                if trackers is not None:
                    _strip_qubit(trackers, q)
                _strip_qubit(resources, q)
                x, z = _unit_row(n, q, z=True)
                resources.append(x, z, 0)
                safe = np.append(safe, True)
            if kind in ("MX", "PX"):
                for rows in sets:
                    rows.h(q)
    return RunResult(tableau, measurements, trackers, resources, safe,
                     violations)


# ---------------------------------------------------------------------------
# Logical-action verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    mismatches: list
    violations: list
    gauge_ok: bool
    frame: np.ndarray  # phase exponent of i per logical tracker


def _echelon(rows: np.ndarray) -> tuple[np.ndarray, list]:
    R = rows.copy() % 2
    pivots = []
    r = 0
    for c in range(R.shape[1]):
        hit = np.flatnonzero(R[r:, c]) + r
        if hit.size == 0:
            continue
        R[[r, hit[0]]] = R[[hit[0], r]]
        elim = np.flatnonzero(R[:, c])
        elim = elim[elim != r]
        R[elim] ^= R[r]
        pivots.append(c)
        r += 1
        if r == R.shape[0]:
            break
    return R[:r], pivots


def _in_span(R: np.ndarray, pivots: list, v: np.ndarray) -> bool:
    v = v.copy() % 2
    for i, c in enumerate(pivots):
        if v[c]:
            v ^= R[i]
    return not v.any()


def _embed_rows(rows: np.ndarray, block: int, n: int, N: int, z: bool) -> PauliRows:
    out = PauliRows(N)
    for r in rows:
        x = np.zeros(N, dtype=np.uint8)
        zz = np.zeros(N, dtype=np.uint8)
        (zz if z else x)[block * n:(block + 1) * n] = r
        out.append(x, zz, 0)
    return out


def verify_logical_action(code: ShypsCode, b: int, circuit: PhysicalCircuit,
                          claimed: SymplecticMatrix) -> VerificationReport:
    """Check that a circuit acts as ``claimed`` on the logical operators.

    Every logical Pauli basis row is tracked through the circuit and
    compared with its claimed image modulo the gauge groups and the
    surviving resource rows.  Unitary circuits must additionally map each
    gauge generator back into the gauge span; measurement-bearing circuits
    (teleportation rounds) rerandomise the gauge sector, so there the
    stabilizer generators are tracked instead and must return to the span.
    Phases are reported in the frame, not asserted.
    """
    n, k = code.n, code.k
    if claimed.m != b * k:
        raise ValueError("claimed action has the wrong dimension")
    N = circuit.n
    if N % n or N // n < b:
        raise ValueError("circuit does not cover the data blocks")
    trackers = PauliRows(N)
    for beta in range(b):
        for row in code.L_X:
            x = np.zeros(N, dtype=np.uint8)
            x[beta * n:(beta + 1) * n] = row
            trackers.append(x, np.zeros(N, dtype=np.uint8), 0)
    for beta in range(b):
        for row in code.L_Z:
            z = np.zeros(N, dtype=np.uint8)
            z[beta * n:(beta + 1) * n] = row
            trackers.append(np.zeros(N, dtype=np.uint8), z, 0)
    n_logical = 2 * b * k
    gauge_rows = []
    for beta in range(b):
        gauge_rows.append(_embed_rows(code.G_X, beta, n, N, z=False))
        gauge_rows.append(_embed_rows(code.G_Z, beta, n, N, z=True))
    for g in gauge_rows:
        for i in range(len(g.ph)):
            trackers.append(*g.row(i))
    fixups = PauliRows(N)
    for g in gauge_rows:
        for i in range(len(g.ph)):
            fixups.append(*g.row(i))

    run = tableau_run(circuit, trackers=trackers, resources=fixups)

    # claimed logical images as physical rows
    bl_x = np.zeros((b * k, N), dtype=np.uint8)
    bl_z = np.zeros((b * k, N), dtype=np.uint8)
    for beta in range(b):
        bl_x[beta * k:(beta + 1) * k, beta * n:(beta + 1) * n] = code.L_X
        bl_z[beta * k:(beta + 1) * k, beta * n:(beta + 1) * n] = code.L_Z
    U = claimed.mat[:, :b * k]
    V = claimed.mat[:, b * k:]
    exp_x = gf2.mul(U, bl_x)
    exp_z = gf2.mul(V, bl_z)

    quotient = [g.symplectic() for g in gauge_rows]
    quotient.append(run.resources.symplectic()[run.resource_safe])
    R, pivots = _echelon(np.vstack(quotient))

    final = trackers.symplectic()
    mismatches = []
    for i in range(n_logical):
        diff = final[i] ^ np.hstack([exp_x[i], exp_z[i]])
        if not _in_span(R, pivots, diff):
            kind = "X" if i < b * k else "Z"
            mismatches.append((kind, (i % (b * k)) // k, i % k))
    gauge_ok = all(_in_span(R, pivots, final[i])
                   for i in range(n_logical, len(final)))
    frame = trackers.ph[:n_logical].copy()
    ok = not mismatches and not run.violations and gauge_ok
    return VerificationReport(ok, mismatches, run.violations, gauge_ok, frame)
