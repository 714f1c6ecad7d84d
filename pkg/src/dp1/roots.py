"""Root-system identification for negative-definite sublattices of K-perp.

A simple system is extracted as the indecomposable lex-positive roots; the
component graphs are then matched against the simply-laced Dynkin shapes.
Ordering of the returned simple roots is canonical so downstream golden
outputs are stable.
"""

from __future__ import annotations

from .lattice import LatticeError, PicClass, Sublattice, enumerate_vectors

# Root cardinalities of the simply-laced systems this project meets.
ROOT_COUNTS = {
    "0": 0, "A1": 2, "2A1": 4, "3A1": 6, "4A1": 8,
    "D4": 24, "D4+A1": 26, "D6": 60, "E7": 126, "E8": 240,
}


def _lex_positive(v: PicClass) -> bool:
    for c in v.coeffs:
        if c:
            return c > 0
    return False


def simple_system(lat: Sublattice) -> list[PicClass]:
    """Indecomposable positive roots of lat, canonically ordered per component."""
    roots = enumerate_vectors(lat, -2)
    pos = [v for v in roots if _lex_positive(v)]
    pos_set = {v.coeffs for v in pos}
    simple = []
    for v in pos:
        if not any((v - p).coeffs in pos_set for p in pos if p != v):
            simple.append(v)
    return _canonical_order(simple)


def _components(nodes: list[PicClass]) -> list[list[int]]:
    n = len(nodes)
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = nodes[i].dot(nodes[j])
            if d not in (0, 1):
                raise LatticeError(f"not a simple system: pairing {d} between {nodes[i]} and {nodes[j]}")
            if d == 1:
                adj[i].append(j)
                adj[j].append(i)
    seen: set[int] = set()
    comps = []
    for i in range(n):
        if i in seen:
            continue
        stack, comp = [i], []
        seen.add(i)
        while stack:
            k = stack.pop()
            comp.append(k)
            for j in adj[k]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _walk_arm(adj: dict[int, list[int]], start: int, first: int) -> list[int]:
    arm = [first]
    prev, cur = start, first
    while True:
        nxt = [j for j in adj[cur] if j != prev]
        if not nxt:
            return arm
        if len(nxt) > 1:
            raise LatticeError("unsupported Dynkin shape: nested branch")
        prev, cur = cur, nxt[0]
        arm.append(cur)


def _classify_component(nodes: list[PicClass], comp: list[int]) -> tuple[str, list[int]]:
    adj: dict[int, list[int]] = {i: [] for i in comp}
    for a in comp:
        for b in comp:
            if a < b and nodes[a].dot(nodes[b]) == 1:
                adj[a].append(b)
                adj[b].append(a)
    n = len(comp)
    if n == 1:
        return "A1", comp
    degrees = {i: len(adj[i]) for i in comp}
    deg3 = [i for i in comp if degrees[i] == 3]
    if any(degrees[i] > 3 for i in comp) or len(deg3) > 1:
        return "unknown", comp
    if not deg3:
        ends = [i for i in comp if degrees[i] == 1]
        if len(ends) != 2:
            return "unknown", comp
        paths = [[e] + _walk_arm(adj, e, adj[e][0]) for e in ends]
        ordered = min(paths, key=lambda p: [nodes[i].coeffs for i in p])
        return f"A{n}", ordered
    center = deg3[0]
    arms = [_walk_arm(adj, center, j) for j in adj[center]]
    arms.sort(key=lambda a: (len(a), [nodes[i].coeffs for i in a]))
    lens = [len(a) for a in arms]
    if sum(lens) + 1 != n:
        return "unknown", comp
    if lens[0] == 1 and lens[1] == 1:
        # D_n: long arm far-to-near, center, then the two short nodes.
        chain = arms[2][::-1] + [center, arms[0][0]]
        return f"D{n}", chain + [arms[1][0]]
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        chain = arms[1][::-1] + [center] + arms[2]
        return f"E{n}", chain + [arms[0][0]]
    return "unknown", comp


def _canonical_order(simple: list[PicClass]) -> list[PicClass]:
    if not simple:
        return []
    blocks = []
    for comp in _components(simple):
        label, order = _classify_component(simple, comp)
        rank = len(comp)
        blocks.append((-rank, label, [simple[i] for i in order]))
    blocks.sort(key=lambda b: (b[0], b[1], [v.coeffs for v in b[2]]))
    out: list[PicClass] = []
    for _, _, vs in blocks:
        out.extend(vs)
    return out


def identify(lat: Sublattice) -> tuple[str, list[PicClass]]:
    """ADE label of the root system of lat together with its canonical simple system."""
    simple = simple_system(lat)
    if not simple:
        return "0", []
    labels = []
    for comp in _components(simple):
        label, _ = _classify_component(simple, comp)
        if label == "unknown":
            return "unknown", simple
        labels.append(label)
    labels.sort(key=lambda s: (-int(s[1:]), s[0]))
    merged = []
    i = 0
    while i < len(labels):
        j = i
        while j < len(labels) and labels[j] == labels[i]:
            j += 1
        merged.append((f"{j - i}" if j - i > 1 else "") + labels[i])
        i = j
    return "+".join(merged), simple


def root_system_type(lat: Sublattice) -> str:
    """ADE label of the root set of lat ("0" if rootless, "unknown" if not ADE)."""
    return identify(lat)[0]


def cartan_gram(label: str) -> tuple[tuple[int, ...], ...]:
    """Negated Cartan matrix (diag -2, bonds +1) in this module's canonical node order."""
    sizes = []
    for part in label.split("+") if label not in ("0", "") else []:
        mult = 1
        while part[0].isdigit():
            mult = int(part[0])
            part = part[1:]
        sizes.extend([part] * mult)
    edges: list[tuple[int, int]] = []
    offset = 0
    total = 0
    for part in sizes:
        n = int(part[1:])
        total += n
        if part[0] == "A":
            edges += [(offset + i, offset + i + 1) for i in range(n - 1)]
        elif part[0] == "D":
            edges += [(offset + i, offset + i + 1) for i in range(n - 2)]
            edges.append((offset + n - 3, offset + n - 1))
        elif part[0] == "E":
            edges += [(offset + i, offset + i + 1) for i in range(n - 2)]
            edges.append((offset + 2, offset + n - 1))
        else:
            raise LatticeError(f"unsupported label {label}")
        offset += n
    g = [[0] * total for _ in range(total)]
    for i in range(total):
        g[i][i] = -2
    for a, b in edges:
        g[a][b] = g[b][a] = 1
    return tuple(tuple(row) for row in g)
