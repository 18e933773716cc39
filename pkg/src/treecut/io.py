"""Line-oriented text formats (0-indexed, DIMACS-like).

graph          p graph <n> <m> / e <u> <v>
capacities     v <vertex> <capacity>
decomposition  t <nodes> <root> / n <node> <parent> / b <node> <v1> <v2> ...
mcc            p mcc <k> <n> / e <u> <v>
list colouring p listcol <n> <m> / e <u> <v> / l <v> <c1> <c2> ...
precolouring   p precol <n> <m> / k <palette colours...> / e <u> <v> / f <v> <colour>
csp            p csp <vars> <constraints> / d <domain values...> / s <c> <vars...> / r <c> <values...>
tree decomp.   s td <bags> <max bag size> <n> / b <bag> <v1> ... / <bag> <bag>   (tree edges)

Lines starting with ``c`` are comments everywhere.
"""

from __future__ import annotations

from treecut.decomposition import TreeCutDecomposition
from treecut.graph import CapacitatedGraph, Graph
from treecut.reductions import CspInstance, ListColoringInstance, MccInstance, PrecoloringInstance


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        yield i, line.split()


def _ints(lineno, toks):
    try:
        return [int(x) for x in toks]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(toks)!r}") from None


def _header(text, kind, nfields):
    for lineno, tok in _lines(text):
        if tok[0] != "p":
            raise ParseError(lineno, f"expected 'p {kind}' header first")
        if len(tok) != 2 + nfields or tok[1] != kind:
            raise ParseError(lineno, f"malformed header, expected 'p {kind}' with {nfields} fields")
        return lineno, _ints(lineno, tok[2:])
    raise ParseError(0, f"missing 'p {kind}' header")


def _edges_checked(lineno, u, v, n, seen):
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(lineno, f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
    if u == v:
        raise ParseError(lineno, f"loop at {u}")
    key = (min(u, v), max(u, v))
    if key in seen:
        raise ParseError(lineno, f"duplicate edge ({u},{v})")
    seen.add(key)


# --- graphs ---------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    hl, (n, m) = _header(text, "graph", 2)
    seen: set = set()
    for lineno, tok in _lines(text):
        if lineno == hl:
            continue
        if tok[0] != "e" or len(tok) != 3:
            raise ParseError(lineno, "expected 'e <u> <v>'")
        u, v = _ints(lineno, tok[1:])
        _edges_checked(lineno, u, v, n, seen)
    if len(seen) != m:
        raise ParseError(hl, f"header announces {m} edges, found {len(seen)}")
    return Graph(n, frozenset(seen))


def format_graph(g: Graph) -> str:
    out = [f"p graph {g.n} {g.m}"]
    out += [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(out) + "\n"


def parse_capacities(text: str, n: int) -> tuple:
    cap = [None] * n
    for lineno, tok in _lines(text):
        if tok[0] != "v" or len(tok) != 3:
            raise ParseError(lineno, "expected 'v <vertex> <capacity>'")
        v, c = _ints(lineno, tok[1:])
        if not 0 <= v < n:
            raise ParseError(lineno, f"unknown vertex {v}")
        if c < 0:
            raise ParseError(lineno, "capacity must be nonnegative")
        if cap[v] is not None:
            raise ParseError(lineno, f"capacity of {v} given twice")
        cap[v] = c
    missing = [v for v in range(n) if cap[v] is None]
    if missing:
        raise ParseError(0, f"no capacity for vertex {missing[0]}")
    return tuple(cap)


def format_capacities(cg: CapacitatedGraph) -> str:
    return "".join(f"v {v} {c}\n" for v, c in enumerate(cg.capacity))


# --- decompositions -------------------------------------------------------


def parse_decomposition(text: str) -> TreeCutDecomposition:
    header = None
    parent: dict = {}
    bags: dict = {}
    for lineno, tok in _lines(text):
        if header is None:
            if tok[0] != "t" or len(tok) != 3:
                raise ParseError(lineno, "expected 't <nodes> <root>' header first")
            m, root = _ints(lineno, tok[1:])
            if m < 1 or not 0 <= root < m:
                raise ParseError(lineno, "bad node count or root")
            header = (m, root)
            continue
        m, root = header
        if tok[0] == "n":
            if len(tok) != 3:
                raise ParseError(lineno, "expected 'n <node> <parent>'")
            t, p = _ints(lineno, tok[1:])
            if not (0 <= t < m and 0 <= p < m):
                raise ParseError(lineno, f"node id out of range 0..{m - 1}")
            if t in parent:
                raise ParseError(lineno, f"parent of node {t} given twice")
            parent[t] = p
        elif tok[0] == "b":
            if len(tok) < 2:
                raise ParseError(lineno, "expected 'b <node> <vertices...>'")
            vals = _ints(lineno, tok[1:])
            t = vals[0]
            if not 0 <= t < m:
                raise ParseError(lineno, f"node id out of range 0..{m - 1}")
            if t in bags:
                raise ParseError(lineno, f"bag of node {t} given twice")
            bags[t] = frozenset(vals[1:])
        else:
            raise ParseError(lineno, f"unknown line type {tok[0]!r}")
    if header is None:
        raise ParseError(0, "missing 't' header")
    m, root = header
    parent.setdefault(root, root)
    if parent[root] != root:
        raise ParseError(0, "root must not have a parent")
    missing = [t for t in range(m) if t not in parent]
    if missing:
        raise ParseError(0, f"no parent line for node {missing[0]}")
    return TreeCutDecomposition(
        tuple(parent[t] for t in range(m)), tuple(bags.get(t, frozenset()) for t in range(m)), root
    )


def format_decomposition(dec: TreeCutDecomposition) -> str:
    out = [f"t {dec.size} {dec.root}"]
    out += [f"n {t} {p}" for t, p in enumerate(dec.parent) if t != dec.root]
    for t, b in enumerate(dec.bags):
        if b:
            out.append("b " + " ".join(str(x) for x in [t] + sorted(b)))
    return "\n".join(out) + "\n"


def format_tree_decomposition(td, n: int) -> str:
    maxbag = max((len(b) for b in td.bags), default=0)
    out = [f"s td {len(td.bags)} {maxbag} {n}"]
    for t, b in enumerate(td.bags):
        out.append("b " + " ".join(str(x) for x in [t] + sorted(b)))
    for t, p in enumerate(td.parent):
        if t != td.root:
            out.append(f"{p} {t}")
    return "\n".join(out) + "\n"


# --- reduction instances --------------------------------------------------


def parse_mcc(text: str) -> MccInstance:
    hl, (k, n) = _header(text, "mcc", 2)
    edges = set()
    for lineno, tok in _lines(text):
        if lineno == hl:
            continue
        if tok[0] != "e" or len(tok) != 3:
            raise ParseError(lineno, "expected 'e <u> <v>'")
        u, v = _ints(lineno, tok[1:])
        _edges_checked(lineno, u, v, k * n, edges)
        if u // n == v // n:
            raise ParseError(lineno, f"edge ({u},{v}) inside one part")
    return MccInstance(k, n, frozenset(edges))


def format_mcc(m: MccInstance) -> str:
    return f"p mcc {m.k} {m.n}\n" + "".join(f"e {u} {v}\n" for u, v in sorted(m.edges))


def parse_list_coloring(text: str) -> ListColoringInstance:
    hl, (n, m) = _header(text, "listcol", 2)
    edges: set = set()
    lists: dict = {}
    for lineno, tok in _lines(text):
        if lineno == hl:
            continue
        if tok[0] == "e" and len(tok) == 3:
            u, v = _ints(lineno, tok[1:])
            _edges_checked(lineno, u, v, n, edges)
        elif tok[0] == "l" and len(tok) >= 3:
            vals = _ints(lineno, tok[1:])
            if not 0 <= vals[0] < n or vals[0] in lists:
                raise ParseError(lineno, f"bad or repeated list for vertex {vals[0]}")
            lists[vals[0]] = frozenset(vals[1:])
        else:
            raise ParseError(lineno, "expected 'e <u> <v>' or 'l <v> <colours...>'")
    if len(edges) != m:
        raise ParseError(hl, f"header announces {m} edges, found {len(edges)}")
    if len(lists) != n:
        raise ParseError(0, "every vertex needs a list")
    return ListColoringInstance(Graph(n, frozenset(edges)), tuple(lists[v] for v in range(n)))


def format_list_coloring(lc: ListColoringInstance) -> str:
    g = lc.graph
    out = [f"p listcol {g.n} {g.m}"] + [f"e {u} {v}" for u, v in sorted(g.edges)]
    out += ["l " + " ".join(str(x) for x in [v] + sorted(L)) for v, L in enumerate(lc.lists)]
    return "\n".join(out) + "\n"


def parse_precoloring(text: str) -> PrecoloringInstance:
    hl, (n, m) = _header(text, "precol", 2)
    edges: set = set()
    palette = None
    pre = [None] * n
    for lineno, tok in _lines(text):
        if lineno == hl:
            continue
        if tok[0] == "e" and len(tok) == 3:
            u, v = _ints(lineno, tok[1:])
            _edges_checked(lineno, u, v, n, edges)
        elif tok[0] == "k":
            palette = _ints(lineno, tok[1:])
        elif tok[0] == "f" and len(tok) == 3:
            v, c = _ints(lineno, tok[1:])
            if not 0 <= v < n:
                raise ParseError(lineno, f"unknown vertex {v}")
            pre[v] = c
        else:
            raise ParseError(lineno, "expected 'k', 'e' or 'f' line")
    if palette is None:
        raise ParseError(0, "missing palette line 'k ...'")
    if len(edges) != m:
        raise ParseError(hl, f"header announces {m} edges, found {len(edges)}")
    try:
        return PrecoloringInstance(Graph(n, frozenset(edges)), tuple(palette), tuple(pre))
    except ValueError as e:
        raise ParseError(0, str(e)) from None


def format_precoloring(pc: PrecoloringInstance) -> str:
    g = pc.graph
    out = [f"p precol {g.n} {g.m}", "k " + " ".join(map(str, pc.palette))]
    out += [f"e {u} {v}" for u, v in sorted(g.edges)]
    out += [f"f {v} {c}" for v, c in enumerate(pc.precolor) if c is not None]
    return "\n".join(out) + "\n"


def parse_csp(text: str) -> CspInstance:
    hl, (nv, nc) = _header(text, "csp", 2)
    domain = None
    scopes: dict = {}
    rels: dict = {}
    for lineno, tok in _lines(text):
        if lineno == hl:
            continue
        vals = _ints(lineno, tok[1:])
        if tok[0] == "d":
            domain = tuple(vals)
        elif tok[0] in "sr" and vals:
            ci = vals[0]
            if not 0 <= ci < nc:
                raise ParseError(lineno, f"constraint id {ci} out of range")
            if tok[0] == "s":
                scopes[ci] = tuple(vals[1:])
            else:
                rels.setdefault(ci, set()).add(tuple(vals[1:]))
        else:
            raise ParseError(lineno, "expected 'd', 's' or 'r' line")
    if domain is None:
        raise ParseError(0, "missing domain line 'd ...'")
    if len(scopes) != nc:
        raise ParseError(0, "every constraint needs a scope line")
    try:
        return CspInstance(
            nv, domain, tuple((scopes[c], frozenset(rels.get(c, ()))) for c in range(nc))
        )
    except ValueError as e:
        raise ParseError(0, str(e)) from None


def format_csp(csp: CspInstance) -> str:
    out = [f"p csp {csp.num_vars} {len(csp.constraints)}", "d " + " ".join(map(str, csp.domain))]
    for ci, (scope, rel) in enumerate(csp.constraints):
        out.append("s " + " ".join(map(str, (ci,) + scope)))
        out += ["r " + " ".join(map(str, (ci,) + r)) for r in sorted(rel)]
    return "\n".join(out) + "\n"


def load_example():
    """The bundled 7-vertex example graph and its 6-node decomposition."""
    from importlib.resources import files

    data = files("treecut") / "data"
    g = parse_graph((data / "example7.gr").read_text())
    dec = parse_decomposition((data / "example7.tcd").read_text())
    return g, dec
