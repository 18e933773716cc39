"""Print per-node (torso-size, adhesion) for the bundled example, before and after nicify."""

from treecut.decomposition import metrics
from treecut.io import load_example
from treecut.nice import bad_nodes, nicify, partition_children

NAMES = "abcdefg"


def show(g, dec, title):
    met = metrics(g, dec)
    print(title)
    for t in dec.nodes:
        bag = "".join(NAMES[v] for v in sorted(dec.bags[t])) or "-"
        par = "root" if t == dec.root else f"parent {dec.parent[t]}"
        print(f"  node {t} {{{bag}}} ({par}): tor={met.torso_size[t]} adh={met.adhesion[t]}")
    print(f"  width {met.width}")


def main():
    g, dec = load_example()
    show(g, dec, "bundled decomposition")
    print(f"  bad nodes: {bad_nodes(g, dec)}")
    nice = nicify(g, dec)
    show(g, nice, "after nicify")
    part = partition_children(g, nice, nice.root)
    print(f"  A at root: {sorted(part.a_set)}  B at root: {sorted(part.b_set)}")


if __name__ == "__main__":
    main()
