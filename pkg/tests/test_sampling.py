from fractions import Fraction

from fourops.sampling import (
    SplitMix64,
    random_box_float,
    random_exact_complex,
    random_fraction,
    random_float_complex,
    random_nonzero_exact_complex,
)

# First outputs of the splitmix64 stream for seed 0, as published with the
# reference implementation.  Freezing them keeps every seeded test in this
# suite reproducible across machines and implementations.
SEED0_VECTOR = (
    0xE220A8397B1DCDAF,
    0x6E789E6AA1B965F4,
    0x06C45D188009454F,
    0xF88BB8A8724C81EC,
)


def test_known_answer_seed0():
    rng = SplitMix64(0)
    assert tuple(rng.next_u64() for _ in range(4)) == SEED0_VECTOR


def test_known_answer_seed_1234567():
    rng = SplitMix64(1234567)
    assert rng.next_u64() == 0x599ED017FB08FC85
    assert rng.next_u64() == 0x2C73F08458540FA5


def test_determinism_and_seed_separation():
    a = SplitMix64(42)
    b = SplitMix64(42)
    c = SplitMix64(43)
    stream_a = [a.next_u64() for _ in range(16)]
    stream_b = [b.next_u64() for _ in range(16)]
    stream_c = [c.next_u64() for _ in range(16)]
    assert stream_a == stream_b
    assert stream_a != stream_c


def test_unit_float_range():
    rng = SplitMix64(5)
    for _ in range(5000):
        u = rng.unit_float()
        assert 0.0 <= u < 1.0


def test_random_fraction_bounds():
    rng = SplitMix64(6)
    for _ in range(5000):
        q = random_fraction(rng)
        assert isinstance(q, Fraction)
        assert abs(q) < 2**30
        assert 1 <= q.denominator <= 2**30


def test_random_exact_complex_is_exact():
    rng = SplitMix64(7)
    for _ in range(200):
        z = random_exact_complex(rng)
        assert z.is_exact()


def test_random_nonzero_exact_complex():
    rng = SplitMix64(8)
    for _ in range(500):
        assert not random_nonzero_exact_complex(rng).is_zero


def test_random_box_float_range():
    rng = SplitMix64(9)
    for _ in range(5000):
        x = random_box_float(rng, 2.0)
        assert -2.0 <= x < 2.0


def test_random_float_complex_components():
    rng = SplitMix64(10)
    z = random_float_complex(rng, 1.5)
    assert isinstance(z.re, float) and isinstance(z.im, float)
    assert abs(z.re) <= 1.5 and abs(z.im) <= 1.5
