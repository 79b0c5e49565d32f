import json
import random
from fractions import Fraction

import pytest

from branchpolar.charclass import new_char_sequence
from branchpolar.diagram import elementary
from branchpolar.errors import OrderOutOfRange
from branchpolar.polar import EWLeaf, export_eggers_wall, predict
from oracles import random_char_sequence

EX1 = new_char_sequence([12, 16, 31])
EX2 = new_char_sequence([10, 14, 15])


def q(a, b=1):
    return Fraction(a, b)


def summary(p):
    """(kind, part, mult, cont_f, cont_semiroot, char) per factor, by group."""
    return [
        [
            (f.kind, f.part, f.multiplicity, f.contact_with_f,
             f.contact_with_semiroot, f.char_exponents)
            for f in group
        ]
        for group in p.groups
    ]


def test_ex1_first_polar():
    p = predict(EX1, 1)
    assert summary(p) == [
        [("Z", (3, 2), 2, q(4, 3), q(3, 2), (q(3, 2),))],
        [("Z", (8, 1), 3, q(31, 12), q(8, 3), (q(4, 3),))] * 3,
    ]


def test_ex1_second_polar():
    p = predict(EX1, 2)
    assert summary(p) == [
        [
            ("Z", (2, 1), 1, q(4, 3), q(2), ()),
            ("W", None, 3, q(4, 3), q(4, 3), (q(4, 3),)),
        ],
        [("Z", (8, 1), 3, q(31, 12), q(8, 3), (q(4, 3),))] * 2,
    ]


def test_ex1_tenth_polar():
    p = predict(EX1, 10)
    assert p.i_k == 1
    assert summary(p) == [[("Z", (3, 2), 2, q(4, 3), q(3, 2), (q(3, 2),))]]


def test_ex2_first_polar():
    p = predict(EX2, 1)
    assert summary(p) == [
        [("Z", (3, 2), 2, q(7, 5), q(3, 2), (q(3, 2),))] * 2,
        [("Z", (8, 1), 5, q(3, 2), q(8, 5), (q(7, 5),))],
    ]


def test_ex2_second_polar():
    p = predict(EX2, 2)
    assert summary(p) == [
        [
            ("Z", (2, 1), 1, q(7, 5), q(2), ()),
            ("Z", (3, 2), 2, q(7, 5), q(3, 2), (q(3, 2),)),
            ("W", None, 5, q(7, 5), q(7, 5), (q(7, 5),)),
        ]
    ]


def test_order_out_of_range():
    with pytest.raises(OrderOutOfRange):
        predict(EX1, 0)
    with pytest.raises(OrderOutOfRange):
        predict(EX1, 12)


def test_multiplicity_conservation_random():
    rng = random.Random(41)
    for _ in range(40):
        cs = random_char_sequence(rng, b0_max=36)
        for k in range(1, cs.b0):
            p = predict(cs, k)
            assert p.multiplicity_total() == cs.b0 - k


def test_group_contacts_increase():
    rng = random.Random(43)
    for _ in range(40):
        cs = random_char_sequence(rng, b0_max=36)
        p = predict(cs, rng.randint(1, cs.b0 - 1))
        conts = [group[0].contact_with_f for group in p.groups]
        assert all(a < b for a, b in zip(conts, conts[1:]))


def test_parts_match_lattice_oracle():
    rng = random.Random(47)
    for _ in range(40):
        cs = random_char_sequence(rng, b0_max=36)
        k = rng.randint(1, cs.b0 - 1)
        p = predict(cs, k)
        for l, group in enumerate(p.groups, start=1):
            n_l, m_l = cs.n_seq[l - 1], cs.m_seq[l - 1]
            t = ((k - 1) % n_l) + 1
            expected = elementary(m_l, n_l).symbolic_derivative(t)
            parts = tuple(f.part for f in group if f.kind == "Z")
            assert parts == expected.canonical_rep(long=True).parts


def test_prediction_json_deterministic():
    a = json.dumps(predict(EX1, 2).to_json())
    b = json.dumps(predict(new_char_sequence([12, 16, 31]), 2).to_json())
    assert a == b


def test_pairwise_contacts_examples():
    p = predict(EX1, 2)
    table = {(a, b): c for a, b, c in p.contact_table()}
    assert table[("z^(1)_1", "w^(1)_1")] == q(4, 3)      # within group 1
    assert table[("z^(2)_1", "z^(2)_2")] == q(8, 3)      # within group 2
    assert table[("z^(1)_1", "z^(2)_1")] == q(4, 3)      # across groups
    assert table[("w^(1)_1", "z^(2)_2")] == q(4, 3)


def test_labels_canonical_order():
    p = predict(EX2, 2)
    assert p.labels() == ["z^(1)_1", "z^(1)_2", "w^(1)_1"]
    # Z-factors come sorted by descending semiroot contact
    zs = [f for f in p.groups[0] if f.kind == "Z"]
    assert zs[0].contact_with_semiroot > zs[1].contact_with_semiroot


# -- Eggers-Wall export ------------------------------------------------------------


def leaf_names(node):
    if isinstance(node, EWLeaf):
        return [node.name]
    out = []
    for _, child in node.children:
        out.extend(leaf_names(child))
    return out


def find_node(node, contact):
    if isinstance(node, EWLeaf):
        return None
    if node.contact == contact:
        return node
    for _, child in node.children:
        hit = find_node(child, contact)
        if hit is not None:
            return hit
    return None


def all_node_contacts(node):
    if isinstance(node, EWLeaf) or node.contact is None:
        contacts = []
    else:
        contacts = [node.contact]
    if not isinstance(node, EWLeaf):
        for _, child in node.children:
            contacts.extend(all_node_contacts(child))
    return contacts


def walk_contacts(node, parent):
    """Yield (parent_contact, node_contact) for consecutive internal nodes."""
    if isinstance(node, EWLeaf):
        return
    if parent is not None and node.contact is not None:
        yield parent, node.contact
    for _, child in node.children:
        yield from walk_contacts(child, node.contact)


def test_eggers_wall_ex1_k1_structure():
    tree = export_eggers_wall(predict(EX1, 1))
    # trunk nodes at 4/3 and 31/12, side nodes at 3/2 and 8/3
    n43 = find_node(tree.root, q(4, 3))
    n3112 = find_node(tree.root, q(31, 12))
    n32 = find_node(tree.root, q(3, 2))
    n83 = find_node(tree.root, q(8, 3))
    assert n43 and n3112 and n32 and n83
    assert sorted(leaf_names(n32)) == ["f_1", "z^(1)_1"]
    assert sorted(leaf_names(n83)) == ["f_2", "z^(2)_1", "z^(2)_2", "z^(2)_3"]
    assert sorted(leaf_names(n3112)) == ["f", "f_2", "z^(2)_1", "z^(2)_2", "z^(2)_3"]
    # edge index annotations: 1, 3, 12 along the trunk, 2 on the z-leaf
    dot = tree.to_dot()
    assert 'label="12"' in dot and 'label="2"' in dot


def test_eggers_wall_ex2_k2_nodes():
    tree = export_eggers_wall(predict(EX2, 2))
    values = set(all_node_contacts(tree.root))
    assert q(7, 5) in values and q(3, 2) in values and q(2) in values


def test_eggers_wall_two_node_tree():
    cs = new_char_sequence([2, 3])
    tree = export_eggers_wall(predict(cs, 1), include_branch=False)
    root = tree.root
    assert len(root.children) == 1
    assert isinstance(root.children[0][1], EWLeaf)


def test_eggers_wall_contacts_increase_toward_leaves():
    rng = random.Random(53)
    for _ in range(25):
        cs = random_char_sequence(rng, b0_max=30)
        p = predict(cs, rng.randint(1, cs.b0 - 1))
        tree = export_eggers_wall(p)
        for parent, child in walk_contacts(tree.root, None):
            assert child > parent


def test_eggers_wall_distinct_nodes_same_value():
    # Ex2, k=2: the trunk node 15/10 = 3/2 where f_2 attaches and the z-node
    # 3/2 on the f_1 path carry the same contact but are different vertices
    tree = export_eggers_wall(predict(EX2, 2))
    assert all_node_contacts(tree.root).count(q(3, 2)) == 2
