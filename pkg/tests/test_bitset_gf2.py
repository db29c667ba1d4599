import random

from cutlab.bitset import bit_list, iter_bits, lowest_set, mask_of, popcount
from cutlab.gf2 import Gf2Basis, gf2_rank, gf2_span_equal, solve_in_span


def test_mask_round_trip():
    rng = random.Random(11)
    for _ in range(200):
        ids = sorted(rng.sample(range(60), rng.randint(0, 12)))
        m = mask_of(ids)
        assert bit_list(m) == ids
        assert list(iter_bits(m)) == ids
        assert popcount(m) == len(ids)


def test_lowest_set():
    assert lowest_set(0b1000) == 3
    assert lowest_set(1) == 0


def test_rank_matches_row_reduction():
    """Rank of random bit matrices vs an independent elimination."""
    rng = random.Random(12)
    for _ in range(100):
        rows = [rng.getrandbits(16) for _ in range(rng.randint(1, 10))]
        # plain elimination over a copy
        work = list(rows)
        rank = 0
        for col in reversed(range(16)):
            pivot = None
            for i in range(rank, len(work)):
                if work[i] >> col & 1:
                    pivot = i
                    break
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for i in range(len(work)):
                if i != rank and work[i] >> col & 1:
                    work[i] ^= work[rank]
            rank += 1
        assert gf2_rank(rows) == rank


def test_basis_contains_iff_in_span():
    rng = random.Random(13)
    for _ in range(100):
        rows = [rng.getrandbits(12) for _ in range(5)]
        basis = Gf2Basis(rows)
        # everything reachable by xor combinations is contained
        acc = 0
        for r in rows:
            if rng.random() < 0.5:
                acc ^= r
        assert basis.contains(acc)


def test_solve_in_span_certificate():
    rng = random.Random(14)
    hits = 0
    for _ in range(300):
        rows = [rng.getrandbits(10) for _ in range(rng.randint(1, 8))]
        if rng.random() < 0.5:
            target = 0
            for r in rows:
                if rng.random() < 0.5:
                    target ^= r
        else:
            target = rng.getrandbits(10)
        combo = solve_in_span(rows, target)
        if combo is None:
            # exhaustive confirmation of unsolvability
            n = len(rows)
            acc = 0
            found = target == 0
            for i in range(1, 1 << n):
                acc ^= rows[(i & -i).bit_length() - 1]
                if acc == target:
                    found = True
                    break
            assert not found
        else:
            acc = 0
            for i in combo:
                acc ^= rows[i]
            assert acc == target
            hits += 1
    assert hits > 100


def test_span_equal():
    a = [0b110, 0b011]
    b = [0b101, 0b011]
    assert gf2_span_equal(a, b)
    assert not gf2_span_equal(a, [0b100])
