from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from .graph import Graph, VertexSet, is_connected_set, is_induced_tree
from ..models.certificate import CubicSplit, DisconnectedCertificate, SquareSplit, Violation


def _first_internal_edge(g: Graph, x: Set[int]) -> Optional[Tuple[int, int]]:
    for u in sorted(x):
        for w in g.neighbors(u):
            if w in x and u < w:
                return u, w
    return None


def _first_edge_between(g: Graph, x: Set[int], y: Set[int]) -> Optional[Tuple[int, int]]:
    for u in sorted(x):
        for w in g.neighbors(u):
            if w in y:
                return u, w
    return None


def _first_non_edge_between(g: Graph, x: Set[int], y: Set[int]) -> Optional[Tuple[int, int]]:
    for u in sorted(x):
        missing = y - g.neighbor_set(u) - {u}
        if missing:
            return u, min(missing)
    return None


def _check_partition(
    g: Graph,
    parts: Sequence[Sequence[int]],
    domain: Set[int],
    violations: List[Violation],
) -> bool:
    """Items 1 and 2 of both definitions. Returns False when ids are unusable."""
    seen: dict = {}
    in_range = True
    # 1. Check that the parts cover exactly the domain
    for index, part in enumerate(parts):
        for u in part:
            if not 0 <= u < g.n:
                violations.append(Violation(item=1, message=f"vertex {u} is not a vertex of the graph", witness=[u]))
                in_range = False
            elif u not in domain:
                violations.append(Violation(item=1, message=f"vertex {u} is outside the domain", witness=[u]))
            if u in seen and seen[u] != index:
                # 2. Check that parts are pairwise disjoint
                violations.append(Violation(item=2, message=f"vertex {u} belongs to two parts", witness=[u]))
            seen.setdefault(u, index)
    uncovered = sorted(domain - set(seen))
    if uncovered:
        violations.append(Violation(item=1, message="domain vertices missing from every part", witness=uncovered[:10]))
    return in_range


def _check_neighborhood_equals(
    g: Graph,
    item: int,
    label: str,
    a_part: Set[int],
    s_part: Set[int],
    domain: Set[int],
    violations: List[Violation],
) -> None:
    outside = {w for u in a_part for w in g.neighbors(u) if w in domain and w not in a_part}
    extra = sorted(outside - s_part)
    if extra:
        violations.append(Violation(item=item, message=f"N({label}) contains vertices outside its S part", witness=extra[:10]))
    lonely = sorted(s_part - outside)
    if lonely:
        violations.append(Violation(item=item, message=f"S part vertices with no neighbor in {label}", witness=lonely[:10]))


def _check_neighborhood_within(
    g: Graph,
    item: int,
    label: str,
    part: Set[int],
    allowed: Set[int],
    domain: Set[int],
    violations: List[Violation],
) -> None:
    for u in sorted(part):
        for w in g.neighbors(u):
            if w in domain and w not in part and w not in allowed:
                violations.append(Violation(item=item, message=f"{label} vertex {u} has a forbidden neighbor {w}", witness=[u, w]))
                return


def validate_square(g: Graph, split: SquareSplit, domain: Optional[VertexSet] = None) -> List[Violation]:
    """
    Check the ten items of the square structure definition over G[domain].

    Terminals only have to lie in their A part; their degree is not checked,
    and a split whose terminals have several neighbors still rules out a
    covering tree.

    Args:
        g: The graph
        split: Candidate split
        domain: Claimed domain; defaults to the union of the parts

    Returns:
        List[Violation]: Empty if and only if the split is valid
    """
    domain = set(split.domain() if domain is None else domain)
    violations: List[Violation] = []
    if not _check_partition(g, split.parts(), domain, violations):
        return violations

    a = [set(p) for p in split.a_parts]
    s = [set(p) for p in split.s_parts]
    r = set(split.r_part)

    for i in range(4):
        label = i + 1
        # 3. Check terminals
        if split.terminals[i] not in a[i]:
            violations.append(Violation(item=3, message=f"x{label} is not in A{label}", witness=[split.terminals[i]]))
        # 4. Check S parts are stable
        edge = _first_internal_edge(g, s[i])
        if edge:
            violations.append(Violation(item=4, message=f"S{label} is not stable", witness=list(edge)))
        # 5. Check S parts are nonempty
        if not s[i]:
            violations.append(Violation(item=5, message=f"S{label} is empty"))
        # 6. Check cyclic completeness
        nxt = (i + 1) % 4
        pair = _first_non_edge_between(g, s[i], s[nxt])
        if pair:
            violations.append(Violation(item=6, message=f"S{label} is not complete to S{nxt + 1}", witness=list(pair)))

    # 7. Check opposite S parts are anticomplete
    for i in (0, 1):
        edge = _first_edge_between(g, s[i], s[i + 2])
        if edge:
            violations.append(Violation(item=7, message=f"S{i + 1} is not anticomplete to S{i + 3}", witness=list(edge)))

    # 8. Check N(A_i) = S_i
    for i in range(4):
        _check_neighborhood_equals(g, 8, f"A{i + 1}", a[i], s[i], domain, violations)

    # 9. Check N(R) is inside S
    _check_neighborhood_within(g, 9, "R", r, set().union(*s), domain, violations)

    # 10. Check A parts are connected
    for i in range(4):
        if a[i] and not is_connected_set(g, a[i]):
            violations.append(Violation(item=10, message=f"G[A{i + 1}] is not connected", witness=sorted(a[i])[:10]))

    return violations


def validate_cubic(g: Graph, split: CubicSplit, domain: Optional[VertexSet] = None) -> List[Violation]:
    """
    Check the fourteen items of the cubic structure definition over G[domain].
    As for squares, terminal degree is not part of the definition.

    Returns:
        List[Violation]: Empty if and only if the split is valid
    """
    domain = set(split.domain() if domain is None else domain)
    violations: List[Violation] = []
    if not _check_partition(g, split.parts(), domain, violations):
        return violations

    a = [set(p) for p in split.a_parts]
    b = [set(p) for p in split.b_parts]
    s = [set(p) for p in split.s_parts]
    r = set(split.r_part)
    lower = set().union(*s[4:])

    # 3. Check terminals
    for i in range(4):
        if split.terminals[i] not in a[i]:
            violations.append(Violation(item=3, message=f"x{i + 1} is not in A{i + 1}", witness=[split.terminals[i]]))

    # 4. Check S parts are stable
    for k in range(8):
        edge = _first_internal_edge(g, s[k])
        if edge:
            violations.append(Violation(item=4, message=f"S{k + 1} is not stable", witness=list(edge)))

    # 5. Check S1..S4 are nonempty
    for i in range(4):
        if not s[i]:
            violations.append(Violation(item=5, message=f"S{i + 1} is empty"))

    # 6. Check at most one of S5..S8 is empty
    empty = [k + 1 for k in range(4, 8) if not s[k]]
    if len(empty) > 1:
        violations.append(Violation(item=6, message=f"more than one of S5..S8 is empty: S{empty}"))

    for i in range(4):
        others = lower - s[i + 4]
        # 7. Check S_i is complete to the other lower parts
        pair = _first_non_edge_between(g, s[i], others)
        if pair:
            violations.append(Violation(item=7, message=f"S{i + 1} is not complete to (S5..S8) minus S{i + 5}", witness=list(pair)))
        # 8. Check S_i is anticomplete to S_{i+4}
        edge = _first_edge_between(g, s[i], s[i + 4])
        if edge:
            violations.append(Violation(item=8, message=f"S{i + 1} is not anticomplete to S{i + 5}", witness=list(edge)))

    for offset, item in ((0, 9), (4, 10)):
        for i in range(4):
            for j in range(i + 1, 4):
                edge = _first_edge_between(g, s[offset + i], s[offset + j])
                if edge:
                    violations.append(Violation(
                        item=item,
                        message=f"S{offset + i + 1} is not anticomplete to S{offset + j + 1}",
                        witness=list(edge),
                    ))

    # 11. Check N(A_i) = S_i
    for i in range(4):
        _check_neighborhood_equals(g, 11, f"A{i + 1}", a[i], s[i], domain, violations)

    # 12. Check N(B_i) is inside S_i and the lower parts other than S_{i+4}
    for i in range(4):
        allowed = s[i] | (lower - s[i + 4])
        _check_neighborhood_within(g, 12, f"B{i + 1}", b[i], allowed, domain, violations)

    # 13. Check N(R) is inside S5..S8
    _check_neighborhood_within(g, 13, "R", r, lower, domain, violations)

    # 14. Check A parts are connected
    for i in range(4):
        if a[i] and not is_connected_set(g, a[i]):
            violations.append(Violation(item=14, message=f"G[A{i + 1}] is not connected", witness=sorted(a[i])[:10]))

    return violations


def validate_tree(g: Graph, vertices: Iterable[int], required: Iterable[int]) -> List[Violation]:
    """Item 1: the set induces a tree. Item 2: it contains every required vertex."""
    members = set(vertices)
    violations: List[Violation] = []
    bad = sorted(u for u in members if not 0 <= u < g.n)
    if bad:
        return [Violation(item=1, message="tree lists unknown vertices", witness=bad[:10])]
    if not members or not is_induced_tree(g, members):
        violations.append(Violation(item=1, message="vertex set does not induce a tree", witness=sorted(members)[:10]))
    missing = sorted(set(required) - members)
    if missing:
        violations.append(Violation(item=2, message="tree misses required vertices", witness=missing))
    return violations


def validate_disconnected(g: Graph, certificate: DisconnectedCertificate) -> List[Violation]:
    """
    A disconnected certificate names a whole component that separates the terminals.
    """
    component = set(certificate.component)
    violations: List[Violation] = []
    bad = sorted(u for u in component | set(certificate.terminals) if not 0 <= u < g.n)
    if bad:
        return [Violation(item=1, message="certificate lists unknown vertices", witness=bad[:10])]
    # 1. Check the component is connected
    if not component or not is_connected_set(g, component):
        violations.append(Violation(item=1, message="component is not connected", witness=sorted(component)[:10]))
    # 2. Check the component is closed
    leaving = sorted({w for u in component for w in g.neighbors(u) if w not in component})
    if leaving:
        violations.append(Violation(item=2, message="component has neighbors outside it", witness=leaving[:10]))
    # 3. Check terminals fall on both sides
    outside = sorted(set(certificate.terminals) - component)
    if len(outside) == len(set(certificate.terminals)):
        violations.append(Violation(item=3, message="no terminal lies in the component"))
    if not outside or outside != certificate.separated:
        violations.append(Violation(item=4, message="separated terminals do not match the component", witness=outside))
    return violations


def validate_certificate(
    g: Graph,
    certificate: Union[SquareSplit, CubicSplit, DisconnectedCertificate],
    domain: Optional[VertexSet] = None,
) -> List[Violation]:
    """Dispatch on the certificate kind; domain defaults to all of V(g)."""
    if domain is None:
        domain = set(g.vertices())
    if isinstance(certificate, SquareSplit):
        return validate_square(g, certificate, domain)
    if isinstance(certificate, CubicSplit):
        return validate_cubic(g, certificate, domain)
    return validate_disconnected(g, certificate)
