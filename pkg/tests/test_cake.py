import random
from fractions import Fraction

import pytest

from comsoc.cake import (
    DEFAULT_EPS,
    Division,
    Piece,
    PiecewisePolyDensity,
    check_fairness,
    cut_and_choose,
    cut_query,
    last_diminisher,
    measure,
    welfare,
)

F = Fraction


def random_constant_density(rng: random.Random, max_pieces=4, grid=8):
    """Piecewise-constant density on a 1/grid lattice, exactly normalized."""
    cuts = sorted(rng.sample(range(1, grid), rng.randint(0, max_pieces - 1)))
    bounds = [F(0)] + [F(c, grid) for c in cuts] + [F(1)]
    weights = [rng.randint(0, 5) for _ in range(len(bounds) - 1)]
    if all(w == 0 for w in weights):
        weights[rng.randrange(len(weights))] = 1
    pieces = [
        (lo, hi, (F(w),))
        for lo, hi, w in zip(bounds, bounds[1:], weights)
    ]
    return PiecewisePolyDensity.normalized(pieces)


def random_linear_density(rng: random.Random, max_pieces=3, grid=6):
    """Piecewise-linear nonnegative density, exactly normalized."""
    cuts = sorted(rng.sample(range(1, grid), rng.randint(0, max_pieces - 1)))
    bounds = [F(0)] + [F(c, grid) for c in cuts] + [F(1)]
    pieces = []
    mass = F(0)
    for lo, hi in zip(bounds, bounds[1:]):
        y0, y1 = rng.randint(0, 4), rng.randint(0, 4)
        # Chord from (lo, y0) to (hi, y1): nonnegative by construction.
        slope = F(y1 - y0) / (hi - lo)
        c0 = F(y0) - slope * lo
        pieces.append((lo, hi, (c0, slope)))
        mass += (F(y0) + F(y1)) / 2 * (hi - lo)
    if mass == 0:
        return PiecewisePolyDensity.uniform()
    return PiecewisePolyDensity.normalized(pieces)


class TestDensityValidation:
    def test_uniform_is_valid(self):
        f = PiecewisePolyDensity.uniform()
        assert f.measure_interval(0, 1) == 1

    def test_not_normalized_rejected(self):
        with pytest.raises(ValueError, match="integrates"):
            PiecewisePolyDensity([(0, 1, (F(2),))])

    def test_gap_rejected(self):
        with pytest.raises(ValueError, match="contiguous"):
            PiecewisePolyDensity([(0, F(1, 3), (F(3, 2),)), (F(1, 2), 1, (F(1),))])

    def test_not_covering_rejected(self):
        with pytest.raises(ValueError, match="cover"):
            PiecewisePolyDensity([(0, F(1, 2), (F(2),))])

    def test_negative_density_rejected(self):
        # f(t) = 3 - 4t integrates to 1 but is negative at the right end.
        with pytest.raises(ValueError, match="negative"):
            PiecewisePolyDensity([(0, 1, (F(3), F(-4)))])
        # Parabola dipping below zero mid-piece, endpoints positive.
        with pytest.raises(ValueError, match="negative"):
            PiecewisePolyDensity.normalized([(0, 1, (F(1), F(-5), F(5)))])

    def test_cubic_negative_dip_rejected(self):
        # f(t) = (t - 1/2)^3 + small: dips below zero left of 1/2.
        with pytest.raises(ValueError, match="negative"):
            PiecewisePolyDensity.normalized(
                [(0, 1, (F(-1, 8) + F(1, 1000), F(3, 4), F(-3, 2), F(1)))]
            )

    def test_cubic_touching_zero_accepted(self):
        # f(t) = (t - 1/2)^2 * t: nonnegative, irrational critical point.
        raw = (F(1, 4), F(-1), F(1))  # (t - 1/2)^2
        cubic = (F(0), F(1, 4), F(-1), F(1))
        f = PiecewisePolyDensity.normalized([(0, 1, cubic)])
        assert f.measure_interval(0, 1) == 1

    def test_degree_cap(self):
        with pytest.raises(ValueError, match="degree"):
            PiecewisePolyDensity([(0, 1, (F(1), F(0), F(0), F(0), F(1)))])

    def test_positivity_check_agrees_with_dense_sampling(self):
        from comsoc.cake import _poly_nonneg_on

        def numeric_min(coeffs, lo, hi, steps=2000):
            lo_f, hi_f = float(lo), float(hi)
            cs = [float(c) for c in coeffs]
            return min(
                sum(c * ((lo_f + (hi_f - lo_f) * i / steps) ** k) for k, c in enumerate(cs))
                for i in range(steps + 1)
            )

        rng = random.Random(31337)
        for trial in range(500):
            deg = rng.randint(0, 3)
            coeffs = tuple(F(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(deg + 1))
            lo = F(rng.randint(0, 3), 4)
            hi = lo + F(rng.randint(1, 4), 4)
            approx = numeric_min(coeffs, lo, hi)
            if abs(approx) < 1e-6:
                continue  # too close to zero for sampling to adjudicate
            assert _poly_nonneg_on(coeffs, lo, hi) == (approx > 0), f"trial {trial}"


class TestMeasure:
    def test_full_cake_is_one(self):
        rng = random.Random(50)
        for _ in range(20):
            f = random_linear_density(rng)
            assert measure(f, Piece.interval(0, 1)) == 1

    def test_empty_piece_is_zero(self):
        f = PiecewisePolyDensity.uniform()
        assert measure(f, Piece.empty()) == 0

    def test_uniform_union_piece(self):
        f = PiecewisePolyDensity.uniform()
        piece = Piece([(0, F(1, 4)), (F(1, 2), F(3, 4))])
        assert measure(f, piece) == F(1, 2)

    def test_additivity_on_random_pieces(self):
        rng = random.Random(51)
        for _ in range(30):
            f = random_linear_density(rng)
            cuts = sorted(F(rng.randint(0, 12), 12) for _ in range(4))
            a, b, c, d = cuts
            left = Piece([(a, b)])
            right = Piece([(c, d)])
            both = Piece([(a, b), (c, d)]) if b <= c else None
            if both is not None:
                assert measure(f, both) == measure(f, left) + measure(f, right)

    def test_overlapping_intervals_rejected(self):
        with pytest.raises(ValueError, match="overlap"):
            Piece([(0, F(1, 2)), (F(1, 4), 1)])


class TestCutQuery:
    def test_zero_value_returns_start(self):
        f = PiecewisePolyDensity.uniform()
        assert cut_query(f, F(1, 3), 0) == F(1, 3)

    def test_uniform_third(self):
        f = PiecewisePolyDensity.uniform()
        assert cut_query(f, 0, F(1, 3)) == F(1, 3)

    def test_linear_density_closed_form(self):
        # Density 2t on [0, 1]: cumulative t^2, so value 1/4 cuts at 1/2.
        f = PiecewisePolyDensity([(0, 1, (F(0), F(2)))])
        assert cut_query(f, 0, F(1, 4)) == F(1, 2)

    def test_out_of_range_rejected(self):
        f = PiecewisePolyDensity.uniform()
        with pytest.raises(ValueError):
            cut_query(f, F(1, 2), F(3, 4))
        with pytest.raises(ValueError):
            cut_query(f, 0, F(-1, 2))

    def test_zero_density_plateau_resolves_left(self):
        f = PiecewisePolyDensity(
            [(0, F(1, 4), (F(2),)), (F(1, 4), F(3, 4), (F(0),)), (F(3, 4), 1, (F(2),))]
        )
        assert cut_query(f, 0, F(1, 2)) == F(1, 4)

    def test_round_trip_within_tolerance(self):
        rng = random.Random(52)
        tol = F(1, 10**12)
        for _ in range(40):
            f = random_linear_density(rng)
            a = F(rng.randint(0, 3), 4)
            available = f.measure_interval(a, 1)
            v = available * F(rng.randint(0, 8), 8)
            x = cut_query(f, a, v)
            assert abs(f.measure_interval(a, x) - v) <= tol

    def test_monotone_in_value(self):
        rng = random.Random(53)
        for _ in range(20):
            f = random_linear_density(rng)
            values = sorted(F(rng.randint(0, 16), 16) for _ in range(2))
            xs = [cut_query(f, 0, v) for v in values]
            assert xs[0] <= xs[1]

    def test_quadratic_piece_bisection(self):
        # Density 3t^2: cumulative t^3; cutting 1/8 lands near 1/2.
        f = PiecewisePolyDensity([(0, 1, (F(0), F(0), F(3)))])
        x = cut_query(f, 0, F(1, 8))
        assert abs(f.measure_interval(0, x) - F(1, 8)) <= F(1, 10**12)
        assert abs(x - F(1, 2)) < F(1, 10**6)


class TestFairnessAndWelfare:
    def test_single_player_whole_cake(self):
        f = PiecewisePolyDensity.uniform()
        division = Division((Piece.interval(0, 1),))
        report = check_fairness(division, [f], eps=0)
        assert report.proportional and report.envy_free and report.equitable

    def test_uniform_equal_blocks(self):
        n = 4
        densities = [PiecewisePolyDensity.uniform() for _ in range(n)]
        division = Division(
            tuple(Piece.interval(F(i, n), F(i + 1, n)) for i in range(n))
        )
        report = check_fairness(division, densities, eps=0)
        assert report.proportional and report.envy_free
        assert report.equitable and report.equal_valued

    def test_whole_cake_to_one_of_two(self):
        densities = [PiecewisePolyDensity.uniform() for _ in range(2)]
        division = Division((Piece.interval(0, 1), Piece.empty()))
        report = check_fairness(division, densities, eps=0)
        assert not report.proportional
        assert not report.envy_free
        assert welfare(division, densities, "utilitarian") == 1
        assert welfare(division, densities, "egalitarian") == 0

    def test_equitable_exact_share_vs_equal_values(self):
        # Both players value their own piece 1/2 under their own density,
        # one of them unevenly: equitable in both readings here.
        f0 = PiecewisePolyDensity.uniform()
        f1 = PiecewisePolyDensity.normalized([(0, F(1, 2), (F(3),)), (F(1, 2), 1, (F(1),))])
        division = Division((Piece.interval(F(1, 4), F(3, 4)), Piece.empty()))
        report = check_fairness(division, [f0, f1], eps=0)
        assert not report.equitable  # player 1 gets 0, not 1/2
        assert not report.equal_valued

    def test_overlapping_division_rejected(self):
        f = PiecewisePolyDensity.uniform()
        division = Division((Piece.interval(0, F(2, 3)), Piece.interval(F(1, 3), 1)))
        with pytest.raises(ValueError, match="overlap"):
            check_fairness(division, [f, f])

    def test_proportional_implies_egalitarian_floor(self):
        rng = random.Random(54)
        for _ in range(10):
            densities = [random_constant_density(rng) for _ in range(3)]
            division = last_diminisher(densities)
            report = check_fairness(division, densities, eps=DEFAULT_EPS)
            if report.proportional:
                assert welfare(division, densities, "egalitarian") >= F(1, 3) - DEFAULT_EPS


class TestProtocols:
    def test_cut_and_choose_identical_uniform(self):
        densities = [PiecewisePolyDensity.uniform(), PiecewisePolyDensity.uniform()]
        division = cut_and_choose(densities)
        assert division.pieces[1] == Piece.interval(0, F(1, 2))  # tie goes left
        assert division.pieces[0] == Piece.interval(F(1, 2), 1)
        report = check_fairness(division, densities, eps=0)
        assert report.envy_free and report.proportional and report.equitable

    def test_cut_and_choose_envy_free_on_random_profiles(self):
        rng = random.Random(55)
        for trial in range(60):
            densities = [
                random_constant_density(rng) if trial % 2 else random_linear_density(rng)
                for _ in range(2)
            ]
            division = cut_and_choose(densities)
            division.validate()
            report = check_fairness(division, densities, eps=DEFAULT_EPS)
            assert report.envy_free, f"trial {trial}"
            assert report.proportional, f"trial {trial}"
            chooser_value = report.values[1][1]
            assert chooser_value >= F(1, 2) - DEFAULT_EPS, f"trial {trial}"

    def test_cut_and_choose_needs_two_players(self):
        with pytest.raises(ValueError):
            cut_and_choose([PiecewisePolyDensity.uniform()])

    def test_last_diminisher_identical_uniform_three(self):
        densities = [PiecewisePolyDensity.uniform() for _ in range(3)]
        division = last_diminisher(densities)
        assert division.pieces[0] == Piece.interval(0, F(1, 3))
        assert division.pieces[1] == Piece.interval(F(1, 3), F(2, 3))
        assert division.pieces[2] == Piece.interval(F(2, 3), 1)
        report = check_fairness(division, densities, eps=0)
        assert report.proportional and report.equitable

    def test_last_diminisher_proportional_on_random_profiles(self):
        rng = random.Random(56)
        for trial in range(40):
            n = rng.randint(2, 5)
            densities = [
                random_constant_density(rng) if rng.random() < 0.5 else random_linear_density(rng)
                for _ in range(n)
            ]
            division = last_diminisher(densities)
            division.validate()
            report = check_fairness(division, densities, eps=DEFAULT_EPS)
            assert report.proportional, f"trial {trial}"

    def test_last_diminisher_single_intervals(self):
        rng = random.Random(57)
        for _ in range(10):
            densities = [random_constant_density(rng) for _ in range(4)]
            division = last_diminisher(densities)
            assert all(len(p.intervals) <= 1 for p in division.pieces)
