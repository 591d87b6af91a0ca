"""Weights and Lyndon coordinates of a few commutators in F(a, b)."""

from ogroup.magnus import lie_coordinates, lyndon_basis, magnus_expand, weight
from ogroup.words import Alphabet, commutator, parse_word


def bracket(tree):
    return f"[{bracket(tree[0])},{bracket(tree[1])}]" if isinstance(tree, tuple) else tree


ab = Alphabet("ab", ("a", "b"))
a, b = parse_word("a", ab), parse_word("b", ab)

samples = {
    "[a,b]": commutator(a, b),
    "[[a,b],a]": commutator(commutator(a, b), a),
    "[[a,b],b]^2": commutator(commutator(a, b), b) ** 2,
    "[a,b][b,a^2]": commutator(a, b) * commutator(b, a * a),
}
for name, w in samples.items():
    k = weight(w, 6, ("a", "b"))
    basis = lyndon_basis(("a", "b"), k)
    coords = lie_coordinates(magnus_expand(w, k, ("a", "b")), k, basis)
    print(f"{name:14s} weight {k}  " + "  ".join(f"{c:+d}*{bracket(bc.tree)}" for c, bc in zip(coords, basis) if c))
