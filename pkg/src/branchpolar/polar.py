"""Predicted factorization of the generic k-th polar of a plane branch.

Given an equisingularity class (b0,...,bh) and a derivative order k < b0, the
generic k-th polar splits into groups G^(1)...G^(i_k), one for every l with
e_{l-1} > k.  Group l collects the irreducible factors whose contact with the
branch is b_l/b0; it consists of

* one Z-factor for every part (M_j, N_j) of the long canonical representation
  of the t-th symbolic derivative of the elementary diagram (m_l, n_l), where
  t is the representative of k modulo n_l in 1..n_l.  The factor has
  multiplicity n_1...n_{l-1} * N_j and contact M_j/(n_1...n_{l-1} N_j) with
  the l-th semiroot, which is also its last characteristic exponent when
  N_j > 1;
* m = min(e_l, k) - ceil(k/n_l) W-factors of multiplicity b0/e_l whose
  characteristic exponents are b_1/b0,...,b_l/b0.

Pairwise contacts inside a group are the minimum of the semiroot contacts;
across groups they are the minimum of the contacts with the branch.  The
whole structure can be exported as an Eggers-Wall tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import diagram as diagram_mod
from .charclass import CharSequence
from .errors import OrderOutOfRange
from .rational import fmt_q

__all__ = [
    "PolarFactor",
    "PolarPrediction",
    "EggersWallExport",
    "predict",
    "export_eggers_wall",
]


@dataclass(frozen=True)
class PolarFactor:
    group_index: int
    kind: str                       # "Z" or "W"
    part: tuple | None              # (M_j, N_j) for Z-factors
    multiplicity: int
    contact_with_f: Fraction
    contact_with_semiroot: Fraction
    char_exponents: tuple           # sorted Fractions

    @property
    def is_smooth(self) -> bool:
        return not self.char_exponents

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "group": self.group_index,
            "part": list(self.part) if self.part else None,
            "multiplicity": self.multiplicity,
            "cont_f": fmt_q(self.contact_with_f),
            "cont_semiroot": fmt_q(self.contact_with_semiroot),
            "char": [fmt_q(e) for e in self.char_exponents],
        }


@dataclass(frozen=True)
class PolarPrediction:
    char: CharSequence
    k: int
    groups: tuple  # tuple over l = 1..i_k of tuples of PolarFactor

    @property
    def i_k(self) -> int:
        return len(self.groups)

    def factors(self):
        return [f for group in self.groups for f in group]

    def labels(self) -> list:
        """Canonical factor names z^(l)_j / w^(l)_i in emission order."""
        out = []
        for group in self.groups:
            zc = wc = 0
            for f in group:
                if f.kind == "Z":
                    zc += 1
                    out.append(f"z^({f.group_index})_{zc}")
                else:
                    wc += 1
                    out.append(f"w^({f.group_index})_{wc}")
        return out

    def multiplicity_total(self) -> int:
        return sum(f.multiplicity for f in self.factors())

    @staticmethod
    def pairwise_contact(a: PolarFactor, b: PolarFactor) -> Fraction:
        """Contact between two distinct predicted factors."""
        if a.group_index == b.group_index:
            return min(a.contact_with_semiroot, b.contact_with_semiroot)
        return min(a.contact_with_f, b.contact_with_f)

    def contact_table(self):
        """Materialized pairwise contacts, in canonical label order."""
        facts = self.factors()
        names = self.labels()
        table = []
        for i in range(len(facts)):
            for j in range(i + 1, len(facts)):
                table.append((names[i], names[j], self.pairwise_contact(facts[i], facts[j])))
        return table

    def to_json(self) -> dict:
        group_blobs = []
        names = iter(self.labels())
        for l, group in enumerate(self.groups, start=1):
            group_blobs.append(
                {
                    "l": l,
                    "cont_f": fmt_q(Fraction(self.char.b[l], self.char.b0)),
                    "factors": [
                        dict(f.to_json(), label=next(names)) for f in group
                    ],
                }
            )
        return {
            "char": list(self.char.b),
            "k": self.k,
            "i_k": self.i_k,
            "multiplicity_total": self.multiplicity_total(),
            "groups": group_blobs,
            "pairwise_contacts": [
                [a, b, fmt_q(c)] for a, b, c in self.contact_table()
            ],
        }

    def to_text(self) -> str:
        lines = [
            f"class K{self.char}, k = {self.k}: "
            f"d^{self.k}f/dy^{self.k} = "
            + " * ".join(f"G^({l})" for l in range(1, self.i_k + 1))
        ]
        names = iter(self.labels())
        for l, group in enumerate(self.groups, start=1):
            cont = fmt_q(Fraction(self.char.b[l], self.char.b0))
            lines.append(f"group {l}: cont(f, v) = {cont} for every irreducible factor v")
            for f in group:
                name = next(names)
                char_set = "{" + ", ".join(fmt_q(e) for e in f.char_exponents) + "}"
                desc = "smooth" if f.is_smooth else f"Char = {char_set}"
                lines.append(
                    f"  - {name}: mult {f.multiplicity}, "
                    f"cont(f_{l}, .) = {fmt_q(f.contact_with_semiroot)}, {desc}"
                )
        lines.append(f"total multiplicity {self.multiplicity_total()} = b0 - k")
        return "\n".join(lines)


def predict(cs: CharSequence, k: int) -> PolarPrediction:
    """Equisingularity data of the generic k-th polar of the class ``cs``."""
    if not 1 <= k < cs.b0:
        raise OrderOutOfRange(f"polar order must satisfy 1 <= k < {cs.b0}, got {k}")
    groups = []
    for l in range(1, cs.h + 1):
        if cs.e[l - 1] <= k:
            break
        n_l = cs.n_seq[l - 1]
        m_l = cs.m_seq[l - 1]
        e_l = cs.e[l]
        nsub = cs.b0 // cs.e[l - 1]  # n_1 * ... * n_{l-1}
        cont_f = Fraction(cs.b[l], cs.b0)
        prefix = tuple(Fraction(cs.b[i], cs.b0) for i in range(1, l))

        t = ((k - 1) % n_l) + 1
        derived = diagram_mod.elementary(m_l, n_l).symbolic_derivative(t)
        factors = []
        for m_j, n_j in derived.canonical_rep(long=True).parts:
            cont_semi = Fraction(m_j, nsub * n_j)
            assert cont_semi > cont_f, "Z-factors sit strictly beyond the semiroot contact"
            chars = prefix
            if n_j > 1:
                floor = prefix[-1] if prefix else Fraction(1)
                assert cont_semi > floor, (
                    f"appended exponent {cont_semi} must exceed {floor}"
                )
                chars = prefix + (cont_semi,)
            factors.append(
                PolarFactor(l, "Z", (m_j, n_j), nsub * n_j, cont_f, cont_semi, chars)
            )
        w_count = min(e_l, k) - (-(-k // n_l))
        for _ in range(w_count):
            factors.append(
                PolarFactor(l, "W", None, cs.b0 // e_l, cont_f, cont_f, prefix + (cont_f,))
            )
        groups.append(tuple(factors))

    prediction = PolarPrediction(cs, k, tuple(groups))
    assert prediction.multiplicity_total() == cs.b0 - k, (
        f"multiplicities {prediction.multiplicity_total()} != {cs.b0 - k}"
    )
    return prediction


# ---------------------------------------------------------------------------
# Eggers-Wall tree export
# ---------------------------------------------------------------------------


@dataclass
class EWLeaf:
    name: str
    sort_key: tuple
    char_exponents: tuple   # used for the edge index annotations
    multiplicity: int | None = None

    def display(self) -> str:
        if self.multiplicity is None:
            return self.name
        return f"{self.name} (mult {self.multiplicity})"


@dataclass
class EWNode:
    contact: Fraction | None          # None at the root
    children: list = field(default_factory=list)   # (edge_index, EWNode | EWLeaf)

    def leaves(self):
        out = []
        for _, child in self.children:
            if isinstance(child, EWLeaf):
                out.append(child)
            else:
                out.extend(child.leaves())
        return out


@dataclass
class EggersWallExport:
    root: EWNode

    def to_dot(self) -> str:
        lines = [
            "digraph eggers_wall {",
            "  rankdir=BT;",
            '  node [fontsize=11];',
        ]
        counter = [0]

        def emit(node) -> str:
            name = f"n{counter[0]}"
            counter[0] += 1
            if isinstance(node, EWLeaf):
                lines.append(f'  {name} [label="{node.display()}", shape=none];')
                return name
            label = "0" if node.contact is None else fmt_q(node.contact)
            shape = "point" if node.contact is None else "circle"
            extra = ', width=0.1' if shape == "point" else ""
            lines.append(f'  {name} [label="{label}", shape={shape}{extra}];')
            for edge_index, child in node.children:
                child_name = emit(child)
                lines.append(f'  {name} -> {child_name} [label="{edge_index}", dir=none];')
            return name

        emit(self.root)
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        def blob(node):
            if isinstance(node, EWLeaf):
                out = {"leaf": node.name, "char": [fmt_q(e) for e in node.char_exponents]}
                if node.multiplicity is not None:
                    out["multiplicity"] = node.multiplicity
                return out
            return {
                "contact": None if node.contact is None else fmt_q(node.contact),
                "children": [
                    {"index": idx, "child": blob(child)} for idx, child in node.children
                ],
            }

        return blob(self.root)


def _leaf_contact(a: EWLeaf, b: EWLeaf, contacts) -> Fraction:
    return contacts[frozenset((a.name, b.name))]


def _edge_index(leaf: EWLeaf, parent_contact) -> int:
    if parent_contact is None:
        return 1
    dens = [e.denominator for e in leaf.char_exponents if e <= parent_contact]
    return lcm(*dens) if dens else 1


def _build_tree(leaves, contacts, parent_contact) -> EWNode | EWLeaf:
    if len(leaves) == 1:
        return leaves[0]
    meet = min(
        _leaf_contact(a, b, contacts)
        for i, a in enumerate(leaves)
        for b in leaves[i + 1:]
    )
    clusters: list[list] = []
    for leaf in leaves:
        for cluster in clusters:
            if _leaf_contact(cluster[0], leaf, contacts) > meet:
                cluster.append(leaf)
                break
        else:
            clusters.append([leaf])
    node = EWNode(meet)
    clusters.sort(key=lambda cl: min(l.sort_key for l in cl))
    for cluster in clusters:
        child = _build_tree(cluster, contacts, meet)
        indices = {_edge_index(l, meet) for l in cluster}
        assert len(indices) == 1, f"edge index ambiguous for {[l.name for l in cluster]}"
        node.children.append((indices.pop(), child))
    return node


def export_eggers_wall(p: PolarPrediction, include_branch: bool = True) -> EggersWallExport:
    """Tree of pairwise contacts between the predicted factors and, when
    ``include_branch`` is set, the branch f and its semiroots f_l."""
    cs = p.char
    leaves: list[EWLeaf] = []
    if include_branch:
        leaves.append(EWLeaf("f", (0,), cs.char_exponents()))
        for l in range(1, cs.h + 1):
            prefix = tuple(Fraction(cs.b[i], cs.b0) for i in range(1, l))
            leaves.append(EWLeaf(f"f_{l}", (1, l), prefix))
    facts = p.factors()
    names = p.labels()
    for pos, (f, name) in enumerate(zip(facts, names)):
        # position in canonical emission order doubles as the sort key
        leaves.append(EWLeaf(name, (2, pos), f.char_exponents, f.multiplicity))

    # pairwise contact table over all leaves
    contacts: dict = {}

    def put(a, b, value):
        contacts[frozenset((a, b))] = value

    for i, la in enumerate(leaves):
        for lb in leaves[i + 1:]:
            ka, kb = la.sort_key, lb.sort_key
            if ka[0] == 0:  # f against anything
                if kb[0] == 1:
                    value = Fraction(cs.b[kb[1]], cs.b0)
                else:
                    value = facts[kb[1]].contact_with_f
            elif ka[0] == 1 and kb[0] == 1:
                value = Fraction(cs.b[min(ka[1], kb[1])], cs.b0)
            elif ka[0] == 1:
                factor = facts[kb[1]]
                if factor.group_index == ka[1]:
                    value = factor.contact_with_semiroot
                else:
                    value = min(
                        Fraction(cs.b[ka[1]], cs.b0), factor.contact_with_f
                    )
            else:
                value = PolarPrediction.pairwise_contact(facts[ka[1]], facts[kb[1]])
            put(la.name, lb.name, value)

    root = EWNode(None)
    if len(leaves) == 1:
        root.children.append((_edge_index(leaves[0], None), leaves[0]))
    else:
        tree = _build_tree(leaves, contacts, None)
        if isinstance(tree, EWNode):
            root.children.append((1, tree))
        else:
            root.children.append((_edge_index(tree, None), tree))
    return EggersWallExport(root)
