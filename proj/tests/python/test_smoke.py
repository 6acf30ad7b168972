"""End-to-end smoke checks of the python module."""

import random

import pytest

import tnet_double as td


def test_debruijn_counts():
    assert td.count(td.debruijn(2)) == 1
    assert td.count(td.debruijn(3)) == 2
    assert td.count(td.debruijn(4)) == 16
    assert td.count(td.debruijn(6)) == 67108864


def test_double_matches_next_order():
    for n in (2, 3, 4):
        assert td.double(td.debruijn(n)) == td.debruijn(n + 1)


def test_enumerate_and_sequences():
    cycles = td.enumerate_cycles(td.debruijn(3))
    assert len(cycles) == 2
    seqs = {td.cycle_to_seq(3, c) for c in cycles}
    assert seqs == {"00010111", "00011101"}
    for s in seqs:
        assert td.seq_to_cycle(3, s) in cycles


def test_expand_reduce_roundtrip():
    net = td.debruijn(3)
    base = td.enumerate_cycles(net)
    images = set()
    for p in base:
        for mask in range(8):
            bits = [(mask >> j) & 1 for j in range(3)]
            img = td.expand(net, p, bits)
            images.add(tuple(img))
            q, back = td.reduce(net, img)
            assert q == p and back == bits
    assert len(images) == 16
    doubled = {tuple(c) for c in td.enumerate_cycles(td.double(net))}
    assert images == doubled


def test_unrank_rank():
    assert td.unrank(2, "") == "0011"
    for mask in range(16):
        bits = format(mask, "04b")
        seq = td.unrank(4, bits)
        assert td.is_base_form(seq, 4)
        assert td.rank(4, seq) == bits


def test_stanley_roundtrip():
    rng = random.Random(7)
    for n in (3, 4):
        for _ in range(50):
            bits = "".join(rng.choice("01") for _ in range(1 << n))
            s1, s2 = td.stanley_decode(n, bits)
            assert td.is_debruijn(s1, n) and td.is_debruijn(s2, n)
            assert td.stanley_encode(n, s1, s2) == bits


def test_verify_random_net():
    ok, table = td.verify(td.random_net(3, 11))
    assert ok
    assert "CHECK" not in table  # table rendering, not machine rendering
    assert "m=3" in table


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        td.count("2\n0 1\n1 0\n")  # too few edges
    with pytest.raises(ValueError):
        td.unrank(4, "01")  # wrong bit-string length
