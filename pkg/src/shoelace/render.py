"""Graphviz DOT renderings.

hasse_dot draws a proset the way the diagrams in this package are usually
drawn: mutually related elements are grouped, covers between groups become
upward edges, and two-way relations inside a group are drawn explicitly.
support_dot draws each summand of a decomposed shoelace representation as a
cluster over the doubled window carrier.
"""

from __future__ import annotations

from .proset import Proset
from .zed import DecomposedShoelaceRep, lambda_eps, summand_support


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(p: Proset) -> str:
    # group by mutual relation, then order groups by least member
    seen = [False] * p.n
    classes = []
    for i in range(p.n):
        if seen[i]:
            continue
        cls = [j for j in range(p.n) if p.rel[i][j] and p.rel[j][i]]
        for j in cls:
            seen[j] = True
        classes.append(cls)

    def cls_lt(a: int, b: int) -> bool:
        x, y = classes[a][0], classes[b][0]
        return a != b and p.rel[x][y]

    lines = ["digraph hasse {", "  rankdir=BT;", '  node [shape=plaintext];']
    for i in range(p.n):
        lines.append(f"  n{i} [label={_quote(p.label(i))}];")
    for a in range(len(classes)):
        for b in range(len(classes)):
            if not cls_lt(a, b):
                continue
            if any(cls_lt(a, c) and cls_lt(c, b) for c in range(len(classes))):
                continue
            for x in classes[a]:
                for y in classes[b]:
                    lines.append(f"  n{x} -> n{y};")
    for cls in classes:
        if len(cls) < 2:
            continue
        for k in range(len(cls)):
            x, y = cls[k], cls[(k + 1) % len(cls)]
            lines.append(f"  n{x} -> n{y} [constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def support_dot(l: DecomposedShoelaceRep) -> str:
    w = l.window
    lam = lambda_eps(w, l.epsilon)
    lines = ["digraph support {", "  rankdir=LR;", "  node [shape=box];"]
    for k, summand in enumerate(l.summands):
        support = sorted(summand_support(summand, w, l.epsilon))
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={_quote(f'summand {k}')};")
        for e in support:
            if e < w.size:
                name = str(w.value(e))
            else:
                name = str(w.value(e - w.size)) + "'"
            lines.append(f"    s{k}_{e} [label={_quote(name)}];")
        sset = set(support)
        for e in support:
            if e < w.size and e + 1 in sset:
                lines.append(f"    s{k}_{e} -> s{k}_{e + 1};")
            if e >= w.size and e + 1 < 2 * w.size and e + 1 in sset:
                lines.append(f"    s{k}_{e} -> s{k}_{e + 1};")
        for e in support:
            if e < w.size:
                t = w.size + lam.mapping[e]
                if lam.mapping[e] == e + l.epsilon and t in sset:
                    lines.append(f"    s{k}_{e} -> s{k}_{t};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
