import pytest
import inspect
import pkgutil
import warnings
import importlib
import itertools
import boolrmt as br
from hypothesis import given, settings, strategies as st


@st.composite
def partitions(draw, n=None):
    n = draw(st.integers(1, 8)) if n is None else n
    mask = draw(st.integers(0, (1 << (n - 1)) - 1))
    return br.IntervalPartition.from_mask(n, mask)


@st.composite
def partition_pairs(draw):
    n = draw(st.integers(1, 8))
    return draw(partitions(n)), draw(partitions(n)), draw(partitions(n))


class TestIntervalPartition:

    def test_enumeration(self):
        assert [str(s) for s in br.enumerate_partitions(1)] == ['[1]']
        assert [str(s) for s in br.enumerate_partitions(3)] == ['[3]', '[1,3]', '[2,3]', '[1,2,3]']
        for n in range(1, 13):
            assert sum(1 for _ in br.enumerate_partitions(n)) == 2 ** (n - 1)
        assert len(set(br.enumerate_partitions(6))) == 32

    def test_enumeration_rejects_empty_ground_set(self):
        with pytest.raises(ValueError):
            br.enumerate_partitions(0)
        with pytest.raises(AssertionError):
            br.enumerate_partitions(3.0)
        with pytest.raises(AssertionError):
            br.enumerate_partitions(True)

    def test_enumeration_of_integral_sizes(self):
        numpy = pytest.importorskip('numpy')
        assert [str(s) for s in br.enumerate_partitions(numpy.int64(3))] == \
            [str(s) for s in br.enumerate_partitions(3)]
        assert all(s.n == 3 and type(s.n) is int for s in br.enumerate_partitions(numpy.int32(3)))

    def test_construction(self):
        sigma = br.IntervalPartition([2, 4])
        assert sigma.n == 4 and len(sigma) == 2
        assert sigma.blocks == ((1, 2), (3, 4))
        assert sigma.sizes == (2, 2)
        assert sigma.windows == ((0, 2), (2, 2))
        assert br.IntervalPartition.from_mask(4, sigma.mask) == sigma
        for bad in ([], [2, 2], [3, 2], [0, 2]):
            with pytest.raises(ValueError):
                br.IntervalPartition(bad)
        with pytest.raises(ValueError):
            br.IntervalPartition([2, 4], n=5)

    def test_parse_and_json(self):
        sigma = br.IntervalPartition.parse('[1, 3, 4]')
        assert str(sigma) == '[1,3,4]'
        assert sigma.to_json() == [1, 3, 4]
        assert br.IntervalPartition.from_json('[1,3,4]') == sigma
        with pytest.raises(ValueError):
            br.IntervalPartition.parse('1,3,4')
        with pytest.raises(ValueError):
            br.IntervalPartition.parse('[a,4]')

    def test_meet_join(self):
        sigma, omega = br.IntervalPartition([2, 4]), br.IntervalPartition([3, 4])
        assert br.meet(sigma, omega) == br.IntervalPartition([2, 3, 4])
        assert br.join(sigma, omega) == br.one(4)
        assert br.meet(br.one(4), omega) == omega
        assert br.meet(br.zero(4), omega) == br.zero(4)
        assert br.join(sigma, sigma) == sigma
        assert br.join(sigma, br.zero(4)) == sigma
        with pytest.raises(ValueError):
            br.meet(br.one(3), br.one(4))

    def test_inductive_oracles(self):
        for n in range(1, 9):
            parts = list(br.enumerate_partitions(n))
            for sigma, omega in itertools.product(parts, repeat=2):
                assert br.meet(sigma, omega) == br.meet_inductive(sigma, omega)
                assert br.join(sigma, omega) == br.join_inductive(sigma, omega)

    def test_meet_is_greatest_lower_bound(self):
        parts = list(br.enumerate_partitions(5))
        for sigma, omega in itertools.product(parts, repeat=2):
            lower = [tau for tau in parts if tau <= sigma and tau <= omega]
            upper = [tau for tau in parts if tau >= sigma and tau >= omega]
            assert all(tau <= br.meet(sigma, omega) for tau in lower)
            assert all(br.join(sigma, omega) <= tau for tau in upper)

    @settings(max_examples=500)
    @given(partition_pairs())
    def test_lattice_laws(self, triple):
        a, b, c = triple
        n = a.n
        assert br.meet(a, b) == br.meet(b, a) and br.join(a, b) == br.join(b, a)
        assert br.meet(br.meet(a, b), c) == br.meet(a, br.meet(b, c))
        assert br.join(br.join(a, b), c) == br.join(a, br.join(b, c))
        assert br.meet(a, a) == a and br.join(a, a) == a
        assert br.meet(a, br.join(a, b)) == a and br.join(a, br.meet(a, b)) == a
        assert br.zero(n) <= a <= br.one(n)

    def test_juxtapose(self):
        assert br.juxtapose(br.IntervalPartition([2]), br.IntervalPartition([1, 2])) \
            == br.IntervalPartition([2, 3, 4])
        assert br.juxtapose(br.one(3), br.one(5)) == br.IntervalPartition([3, 8])

    @given(partitions(), partitions(), partitions())
    def test_juxtapose_associative(self, a, b, c):
        assert br.juxtapose(br.juxtapose(a, b), c) == br.juxtapose(a, br.juxtapose(b, c))
        assert br.juxtapose(a, b, c).n == a.n + b.n + c.n

    def test_restrict(self):
        sigma = br.IntervalPartition([2, 4])
        assert br.restrict(sigma, 1, 2) == br.IntervalPartition([1, 2])
        assert br.restrict(sigma, 0, 4) == sigma
        assert br.restrict(br.zero(5), 2, 3) == br.zero(3)
        for d_start, d_len in ((-1, 2), (0, 0), (3, 2)):
            with pytest.raises(ValueError):
                br.restrict(sigma, d_start, d_len)

    @settings(max_examples=500)
    @given(partition_pairs())
    def test_decompose(self, triple):
        tau, omega, _ = triple
        assert br.juxtapose(*br.decompose(tau, omega)) == br.meet(tau, omega)
        if tau <= omega:
            assert br.juxtapose(*br.decompose(tau, omega)) == tau

    def test_interval_pairing(self):
        assert br.interval_pairing(6) == br.IntervalPartition([2, 4, 6])
        assert br.interval_pairing(5) is None


class TestSigns:

    def test_parse_xi(self):
        xi = br.parse_xi('xx*xx*')
        assert tuple(xi) == ('1', '*', '1', '*')
        assert br.format_xi(xi) == 'xx*xx*'
        assert br.parse_xi(' x x* ') == br.SignPattern([1, '*'])
        for bad in ('', '*x', 'xy', 'x**'):
            with pytest.raises(ValueError):
                br.parse_xi(bad)

    def test_sign_pattern(self):
        xi = br.SignPattern('1*1')
        assert isinstance(xi[1:], br.SignPattern)
        assert xi + '*' == br.SignPattern('1*1*')
        assert xi.adjoint() == br.SignPattern('*1*')
        assert br.SignPattern('1*1*').is_alternating()
        assert not br.SignPattern('11').is_alternating()
        with pytest.raises(ValueError):
            br.SignPattern('12')

    def test_index_tuple(self):
        i = br.IndexTuple([1, 3], N=3)
        assert i.N == 3 and i.cyclic(3) == 1
        with pytest.raises(ValueError):
            br.IndexTuple([0, 1], N=3)
        with pytest.raises(ValueError):
            br.IndexTuple([4], N=3)


class TestAlternating:

    def test_is_xi_alternating(self):
        xi = br.parse_xi('xx*xx*')
        assert br.is_xi_alternating(br.IntervalPartition([2, 4]), xi)
        assert not br.is_xi_alternating(br.IntervalPartition([1, 3, 4]), xi)
        assert not br.is_xi_alternating(br.one(2), br.parse_xi('xx'))
        with pytest.raises(ValueError):
            br.is_xi_alternating(br.one(3), xi)

    def test_enumerate_alt(self):
        assert [str(s) for s in br.enumerate_alt(br.parse_xi('xx*xx*'))] == ['[4]', '[2,4]']
        assert list(br.enumerate_alt(br.parse_xi('xxx*'))) == []
        assert list(br.enumerate_alt(br.parse_xi('xx*'))) == [br.one(2)]
        for r in range(1, 7):
            xi = br.parse_xi('xx*' * r)
            assert sum(1 for _ in br.enumerate_alt(xi)) == 2 ** (r - 1)

    def test_enumerate_alt_matches_filter(self):
        for n in range(1, 8):
            for signs in itertools.product('1*', repeat=n):
                xi = br.SignPattern(signs)
                expected = [s for s in br.enumerate_partitions(n) if br.is_xi_alternating(s, xi)]
                assert list(br.enumerate_alt(xi)) == expected
                assert all(size % 2 == 0 for s in expected for size in s.sizes)

    def test_omega_of_labels(self):
        assert br.omega_of_labels([1, 1, 2, 2, 1]) == br.IntervalPartition([2, 4, 5])
        assert br.omega_of_labels('aaaa') == br.one(4)
        assert br.omega_of_labels([1, 2, 1, 2]) == br.zero(4)

    def test_iota(self):
        assert br.iota(br.parse_xi('xx*'), br.IndexTuple([1, 2], N=2)) == br.one(2)
        assert br.iota(br.parse_xi('xx'), br.IndexTuple([1, 2], N=4)) == br.zero(2)
        assert br.iota(br.parse_xi('xx'), br.IndexTuple([1, 1], N=4)) == br.one(2)
        assert br.iota(br.parse_xi('x*'), br.IndexTuple([3], N=4)) == br.one(1)
        with pytest.raises(ValueError):
            br.iota(br.parse_xi('xx*x'), br.IndexTuple([1, 2], N=4))

    def test_iota_blocks_are_maximal(self):
        N = 3
        for signs in itertools.product('1*', repeat=4):
            xi = br.SignPattern(signs)
            for idx in itertools.product(range(1, N + 1), repeat=4):
                i = br.IndexTuple(idx, N)
                pairs, sigma = br.variable_pairs(xi, i), br.iota(xi, i)
                for start, length in sigma.windows:
                    assert len(set(pairs[start:start + length])) == 1
                for e in sigma.endpoints[:-1]:
                    assert pairs[e - 1] != pairs[e]

    def test_iota_permuted(self):
        e, t = br.identity(4), br.transpose(4)
        xi = br.parse_xi('xx*xx*')
        for idx in itertools.product(range(1, 5), repeat=4):
            i = br.IndexTuple(idx, 4)
            assert br.iota_permuted([e] * 4, xi, i) == br.iota(xi, i)
            assert br.iota_permuted([None] * 4, xi, i) == br.iota(xi, i)
        i = br.IndexTuple([1, 2], 2)
        assert br.iota_permuted([br.transpose(2)] * 2, br.parse_xi('xx*'), i) == br.one(2)
        assert br.iota_permuted([e, t, e, t], br.parse_xi('xxxx'),
                                br.IndexTuple([1, 2, 3, 4], 4)) == br.zero(4)
        with pytest.raises(ValueError):
            br.iota_permuted([br.identity(3)] * 4, xi, br.IndexTuple([1, 1, 1, 1], 4))
        with pytest.raises(ValueError):
            br.iota_permuted([e] * 3, xi, br.IndexTuple([1, 1, 1, 1], 4))

    def test_enumerate_alt_permuted(self):
        xi = br.parse_xi('xx*xx*')
        assert list(br.enumerate_alt_permuted('eeee', xi)) == list(br.enumerate_alt(xi))
        assert [str(s) for s in br.enumerate_alt_permuted('eeaa', xi)] == ['[2,4]']
        assert list(br.enumerate_alt_permuted('eaea', xi)) == []
        assert list(br.enumerate_alt_permuted('eeaa', br.parse_xi('xxxx*'))) == []


class TestSources:

    def test_escapes_in_docstrings(self):
        modules = [name for _, name, _ in pkgutil.walk_packages(br.__path__, 'boolrmt.')]
        assert 'boolrmt.partitions.interval' in modules and 'boolrmt.cumulants.functional' in modules
        for name in modules:
            module = importlib.import_module(name)
            with warnings.catch_warnings():
                warnings.simplefilter('error')
                compile(inspect.getsource(module), module.__file__, 'exec')


if __name__ == '__main__':
    test = TestAlternating()
    test.test_enumerate_alt()
    test.test_iota()
    test.test_enumerate_alt_permuted()
