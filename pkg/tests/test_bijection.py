"""Test the fixed-set bijection, its inverse and the correspondence table."""

import pytest
from hypothesis import given

from src.core.bijection import (
    companion_tree, correspondence_table, pair, phi, phi_inverse, phi_trace,
    verify_fixed_set_bijection,
)
from src.core.errors import Incoherent, SizeTooLarge
from src.core.labeling import label_slots
from src.core.perms import Permutation, all_permutations
from src.core.trees import LabeledTree, LeafPosition, encode, tree_weight
from tests.strategies import permutations


def test_closing_example(closing_example):
    source, image = closing_example
    assert phi(source) == image
    assert str(image.to_cycles()) == '(1)(2 6 3 4)(5)'
    assert phi_inverse(image) == source


def test_worked_trace(closing_example):
    source, _ = closing_example
    steps = phi_trace(source)
    assert [step.labeling for step in steps] == [
        '0 z 1 a',
        '0 z 1 z 2 a',
        '0 z 1 x 3 a 2 y',
        '0 z 1 x 3 y 2 x 4 a',
        '0 z 1 x 3 y 2 x 4 z 5 a',
        '0 z 1 x 6 a 3 y 2 x 4 z 5 y',
    ]
    assert [(step.slot, step.label) for step in steps[1:]] == [
        (2, 'a'), (2, 'z'), (4, 'y'), (5, 'a'), (2, 'x'),
    ]
    assert steps[0].tree == '(1 z a)'
    assert steps[-1].tree == '(1 z (2 (3 (6 x y) (4 x y)) (5 z a)))'


def test_pairing_matches_labels():
    p = Permutation.parse('1 2')
    t = companion_tree(p)
    assert t.to_text() == '(1 z (2 z a))'
    pairing = pair(p, t)
    assert pairing.slots == {
        1: LeafPosition(1, 'L'),
        2: LeafPosition(2, 'L'),
        3: LeafPosition(2, 'R'),
    }
    assert pairing.slot_for(LeafPosition(2, 'R')) == 3


def test_incoherent_pair():
    with pytest.raises(Incoherent):
        pair(Permutation.parse('2 1'), LabeledTree.parse('(1 z (2 z a))'))
    with pytest.raises(Incoherent):
        pair(Permutation.parse('1 2'), LabeledTree.parse('(1 z (2 z a))')).leaf_for(4)


@given(permutations(max_size=7))
def test_phi_transports_statistics(p):
    image = phi(p)
    assert image.set_stat('F') == p.set_stat('Lbar')
    assert image.set_stat('Excbar') == p.set_stat('Jumpbar')
    assert (image.stat('exc'), image.stat('drop')) == (p.stat('jump'), p.stat('des'))
    assert phi_inverse(image) == p


@given(permutations(max_size=7))
def test_companion_tree_is_synchronized(p):
    t = companion_tree(p)
    assert tree_weight(t) == label_slots(p).weight()
    assert t == encode(phi(p).to_cycles())
    pair(p, t)


@pytest.mark.parametrize('n', range(1, 6))
def test_phi_is_a_bijection(n):
    report = verify_fixed_set_bijection(n)
    assert report.passed, report.violations
    assert report.checked == len(list(all_permutations(n)))


def test_phi_moves_some_permutations():
    assert all(phi(p) == p for p in all_permutations(2))
    for n in range(3, 6):
        assert any(phi(p) != p for p in all_permutations(n))


def test_correspondence_table_n3():
    rows = correspondence_table(3)
    assert [(sorted(row.subset), str(row.source), str(row.image)) for row in rows] == [
        ([], '2 1 3', '2 3 1'),
        ([], '3 2 1', '3 1 2'),
        ([1], '1 3 2', '1 3 2'),
        ([2], '3 1 2', '3 2 1'),
        ([3], '2 3 1', '2 1 3'),
        ([1, 2, 3], '1 2 3', '1 2 3'),
    ]
    assert rows[0].to_json() == {
        'I': [],
        'sigma': '2 1 3',
        'image': '2 3 1',
        'image_cycles': '(1 2 3)',
        'jump_des': [2, 1],
        'exc_drop': [2, 1],
    }


def test_bijection_size_guard():
    with pytest.raises(SizeTooLarge):
        verify_fixed_set_bijection(9)
    with pytest.raises(ValueError):
        phi_inverse(Permutation(()))
