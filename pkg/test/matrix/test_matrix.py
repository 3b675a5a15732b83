import sympy
import pytest
import itertools
import boolrmt as br
from fractions import Fraction
from hypothesis import given, settings, strategies as st


def patterns(n):
    return (br.SignPattern(signs) for signs in itertools.product('1*', repeat=n))


def word(text, labels=None, decorations=None, a=(1,), b=()):
    return br.MixedWordSpec(br.parse_xi(text), labels, br.BDiagonalEntries(a, b), decorations)


MIXED_MODELS = {0: br.BDiagonalEntries([1, '1/2', '1/3', '1/4'], ['1/2', 1, 0, '1/5']),
                1: br.BDiagonalEntries(['1/3', 1], [1, '1/2', '1/4', 1])}

MIXED_WORDS = [
    ('xx*', [0, 0]),
    ('xx*x', [0, 0, 0]),
    ('xx*xx*', [0, 0, 1, 1]),
    ('xx*x*x', [0, 0, 0, 0]),
    ('x*xxx*', [0, 1, 1, 0]),
    ('xx*x*xxx*', [0, 0, 1, 1, 1, 1]),
    ('xx*xxx*x*x*', [0, 0, 1, 1, 1, 1, 0]),
    ('xx*xx*xx*xx*', [0, 0, 0, 0, 1, 1, 1, 1]),
    ('xx*x*xxx*x*x', [0, 1, 1, 0, 0, 1, 1, 0]),
    ('x*xxx*xx*x*x', [0] * 8),
]


class TestCounting:

    def test_small_counts(self):
        assert br.count_tuples_brute(br.one(2), br.parse_xi('xx*'), 3).count == 9
        assert br.count_tuples_brute(br.one(2), br.parse_xi('xx'), 3).count == 3
        assert br.count_tuples_blockwise(br.one(2), br.parse_xi('xx*'), 3).count == 9
        assert br.count_tuples_blockwise(br.one(2), br.parse_xi('xx'), 3).count == 3

    def test_single_index(self):
        for n in range(1, 6):
            for xi in patterns(n):
                histogram = br.iota_histogram(xi, 1)
                assert set(histogram.values()) <= {0, 1} and sum(histogram.values()) == 1

    def test_polynomial(self):
        N = sympy.Symbol('N', positive=True, integer=True)
        sigma, xi = br.IntervalPartition([2, 4]), br.parse_xi('xx*xx*')
        assert sympy.expand(br.count_polynomial(sigma, xi) - (N ** 3 - N ** 2)) == 0
        assert br.count_tuples_blockwise(sigma, xi, 4).count == 48
        assert br.count_tuples_brute(sigma, xi, 4).count == 48

    def test_blockwise_matches_brute(self):
        for n in range(1, 6):
            for xi in patterns(n):
                for N in range(1, 5):
                    histogram = br.iota_histogram(xi, N)
                    assert sum(histogram.values()) == N ** n
                    for sigma, count in histogram.items():
                        assert br.count_tuples_blockwise(sigma, xi, N).count == count

    def test_closed_form(self):
        for r in range(1, 4):
            xi = br.parse_xi('xx*' * r)
            for sigma in br.enumerate_alt(xi):
                for N in range(1, 5):
                    result = br.closed_form_count(sigma, xi, N)
                    assert result.count == N ** 2 * (N - 1) ** (len(sigma) - 1)
                    assert result.count == br.count_tuples_brute(sigma, xi, N).count
        with pytest.raises(ValueError):
            br.closed_form_count(br.one(2), br.parse_xi('xx'), 3)

    def test_closed_form_needs_whole_word(self):
        N = sympy.Symbol('N', positive=True, integer=True)
        sigma, xi = br.IntervalPartition([2, 4]), br.parse_xi('xx*x*x')
        assert br.is_xi_alternating(sigma, xi) and not br.closed_form_applies(sigma, xi)
        assert br.closed_form_applies(sigma, br.parse_xi('x*xx*x'))
        with pytest.raises(ValueError):
            br.closed_form_count(sigma, xi, 3)
        assert sympy.expand(br.count_polynomial(sigma, xi) - (N ** 3 - N)) == 0
        for n in range(2, 6):
            assert br.count_tuples_brute(sigma, xi, n).count == n ** 3 - n
            assert br.count_tuples_blockwise(sigma, xi, n).count == n ** 3 - n
        assert br.count_tuples_brute(sigma, xi, 2).count == 6

    def test_alternating_leading_term(self):
        for n in range(2, 7, 2):
            for xi in patterns(n):
                for sigma in br.enumerate_alt(xi):
                    count = br.count_polynomial(sigma, xi)
                    poly = sympy.Poly(count, *count.free_symbols)
                    assert poly.degree() == len(sigma) + 1 and poly.LC() == 1

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.sampled_from('1*'), min_size=1, max_size=7), st.integers(2, 5))
    def test_counts_on_every_word(self, signs, N):
        xi = br.SignPattern(signs)
        histogram = br.iota_histogram(xi, N)
        assert sum(histogram.values()) == N ** len(xi)
        for sigma, count in histogram.items():
            assert br.count_tuples_blockwise(sigma, xi, N).count == count
            alternating = br.is_xi_alternating(sigma, xi)
            assert count <= N ** (len(sigma) + alternating)
            if br.closed_form_applies(sigma, xi):
                assert br.closed_form_count(sigma, xi, N).count == count
            elif alternating:
                with pytest.raises(ValueError):
                    br.closed_form_count(sigma, xi, N)

    def test_mismatch(self):
        with pytest.raises(ValueError):
            br.count_tuples_blockwise(br.one(3), br.parse_xi('xx*'), 3)

    def test_budget(self, monkeypatch):
        sigma, xi = br.one(4), br.parse_xi('xx*xx*')
        with pytest.raises(br.BudgetExceededError):
            br.count_tuples_brute(sigma, xi, 4, budget=100)
        monkeypatch.setenv('BOOLEAN_RMT_BUDGET', '50')
        with pytest.raises(br.BudgetExceededError):
            br.count_tuples_brute(sigma, xi, 3)
        monkeypatch.setenv('BOOLEAN_RMT_BUDGET', 'many')
        with pytest.raises(ValueError):
            br.count_tuples_brute(sigma, xi, 3)

    def test_result_json(self):
        result = br.count_tuples_blockwise(br.IntervalPartition([2, 4]), br.parse_xi('xx*xx*'), 4)
        assert result.to_json() == {'sigma': '[2,4]', 'xi': 'xx*xx*', 'N': 4, 'count': 48,
                                    'method': 'blockwise'}


class TestTraceMoments:

    def test_single_pair(self):
        for N in range(1, 6):
            spec = word('xx*', a=[2])
            assert br.trace_moment_exact(spec, N) == 2
            assert br.trace_moment_exact(spec, N, 'brute') == 2

    def test_two_pairs(self):
        for N in range(1, 6):
            assert br.trace_moment_exact(word('xx*xx*', a=[3]), N) == Fraction(9 * (N - 1), N)
            assert br.trace_moment_exact(word('xx*xx*', a=[3, 5]), N) == \
                Fraction(9 * (N - 1), N) + Fraction(5, N)

    def test_oracle_equivalence(self):
        models = {0: br.BDiagonalEntries([2, '1/3'], [-1, 4]), 1: br.BDiagonalEntries([5], [7])}
        for n in range(1, 4):
            for xi in patterns(n):
                for labels in itertools.product(range(2), repeat=n):
                    for N in range(1, 4):
                        e, t = None, br.transpose(N)
                        for decorations in itertools.product((e, t), repeat=n):
                            spec = br.MixedWordSpec(xi, labels, models, decorations)
                            assert br.trace_moment_exact(spec, N, 'brute') == \
                                br.trace_moment_exact(spec, N, 'partition')

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_oracle_on_random_words(self, data):
        n, N = data.draw(st.integers(1, 5)), data.draw(st.integers(1, 5))
        xi = br.SignPattern(data.draw(st.lists(st.sampled_from('1*'), min_size=n, max_size=n)))
        labels = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
        scalars = st.lists(st.fractions(-3, 3, max_denominator=4), min_size=1, max_size=3)
        models = {k: br.BDiagonalEntries(data.draw(scalars), data.draw(scalars)) for k in (0, 1)}
        decorations = data.draw(st.lists(st.sampled_from((None, br.transpose(N))),
                                         min_size=n, max_size=n))
        spec = br.MixedWordSpec(xi, labels, models, decorations)
        assert br.trace_moment_exact(spec, N, 'brute') == br.trace_moment_exact(spec, N, 'partition')

    def test_identity_decoration(self):
        for n in range(1, 5):
            for xi in patterns(n):
                for N in range(1, 4):
                    plain = word(str(xi), a=[2, 3], b=[1, 4])
                    decorated = word(str(xi), a=[2, 3], b=[1, 4],
                                     decorations=[br.identity(N)] * n)
                    assert br.trace_moment_exact(decorated, N) == br.trace_moment_exact(plain, N)

    def test_odd_word_vanishes_in_the_limit(self):
        assert br.limit_bdiag(br.parse_xi('xx*x'), [1], [1]) == 0
        values = [br.trace_moment_exact(word('xx*x', a=[1], b=[1]), N, 'brute') for N in range(1, 6)]
        assert all(v == 0 for v in values)

    def test_errors(self):
        with pytest.raises(ValueError):
            br.MixedWordSpec(br.parse_xi('xx*'), [0], br.BDiagonalEntries([1]))
        with pytest.raises(ValueError):
            br.MixedWordSpec(br.parse_xi('xx*'), [0, 1], {0: br.BDiagonalEntries([1])})
        with pytest.raises(TypeError):
            br.MixedWordSpec(br.parse_xi('xx*'), models=None)
        with pytest.raises(ValueError):
            br.trace_moment_exact(word('xx*'), 3, method='fast')
        with pytest.raises(TypeError):
            br.trace_moment_exact(word('xx*', decorations=['t', None]), 3)
        with pytest.raises(br.BudgetExceededError):
            br.trace_moment_exact(word('xx*xx*'), 10, 'brute', budget=1000)


class TestSelfAdjoint:

    def test_second_moment(self):
        model = br.SelfAdjointEntries(1, 1)
        assert br.trace_moment_selfadjoint_exact(model, 2, 4) == Fraction(3, 4)
        model = br.SelfAdjointEntries(2, 1)
        for N in range(1, 7):
            assert br.trace_moment_selfadjoint_exact(model, 2, N) == Fraction(3 * (N - 1), 2 * N)

    def test_closed_form_matches_brute(self):
        for alpha, beta in ((1, 1), (2, 1), ('1/2', 3)):
            model = br.SelfAdjointEntries(alpha, beta)
            for n in range(1, 7):
                for N in range(1, 5):
                    assert br.trace_moment_selfadjoint_exact(model, n, N) == \
                        br.trace_moment_selfadjoint_exact(model, n, N, 'brute')

    def test_odd_moments(self):
        model = br.SelfAdjointEntries(2, 1)
        for n in (1, 3, 5):
            for N in range(1, 5):
                assert br.trace_moment_selfadjoint_exact(model, n, N, 'brute') == 0

    def test_errors(self):
        with pytest.raises(TypeError):
            br.trace_moment_selfadjoint_exact(br.BDiagonalEntries([1]), 2, 3)
        with pytest.raises(ValueError):
            br.trace_moment_selfadjoint_exact(br.SelfAdjointEntries(1, 1), 2, 3, 'fast')


class TestLimits:

    def test_bdiag(self):
        assert br.limit_bdiag(br.parse_xi('xx*'), [5], [7]) == 5
        assert br.limit_bdiag(br.parse_xi('x*x'), [5], [7]) == 7
        assert br.limit_bdiag(br.parse_xi('xxx*x*'), [5], [7]) == 0
        assert br.limit_bdiag(br.parse_xi('xx*xx*'), [1], [1]) == 1
        law = br.BDiagonalLaw.symbolic(2)
        alpha_1, alpha_2 = sympy.symbols('alpha_1 alpha_2')
        assert br.equal(br.limit_bdiag(br.parse_xi('xx*xx*'), law), alpha_1 ** 2 + alpha_2)

    def test_mixed(self):
        laws = {1: ([2], []), 2: ([3], [])}
        assert br.limit_mixed([1, 1, 2, 2], br.parse_xi('xx*xx*'), laws) == 6
        assert br.limit_mixed([1, 2], br.parse_xi('xx*'), laws) == 0
        xi = br.parse_xi('xx*xx*')
        assert br.limit_mixed([1] * 4, xi, laws) == br.limit_bdiag(xi, [2], [])
        with pytest.raises(ValueError):
            br.limit_mixed([1, 3], br.parse_xi('xx*'), laws)

    def test_factorization(self):
        laws = {k: br.BDiagonalLaw([Fraction(k + 1, m + 1) for m in range(3)],
                                   [Fraction(m - k, 2) for m in range(3)]) for k in range(3)}
        for n in range(1, 6):
            for xi in patterns(n):
                for labels in itertools.product(range(3), repeat=n):
                    assert br.limit_mixed(labels, xi, laws) == \
                        br.mixed_factorization(labels, xi, laws)

    def test_factorization_symbolic(self):
        laws = {k: br.BDiagonalLaw(sympy.symbols('a{}_1:3'.format(k)),
                                   sympy.symbols('b{}_1:3'.format(k))) for k in range(2)}
        for n in range(1, 5):
            for xi in patterns(n):
                for labels in itertools.product(range(2), repeat=n):
                    assert br.equal(br.limit_mixed(labels, xi, laws),
                                    br.mixed_factorization(labels, xi, laws))

    def test_permuted(self):
        xi = br.parse_xi('xx*xx*')
        assert br.limit_permuted(word('xx*xx*', a=[1, 1])) == br.limit_bdiag(xi, [1, 1])
        assert br.limit_permuted(word('xx*xx*', a=[2, 1], decorations=[None, None, 'a', 'a'])) == 4
        assert br.limit_permuted(word('xx*', a=[2], decorations=[None, 'a'])) == 0
        t = br.transpose(3)
        assert br.limit_permuted(word('xx*xx*', a=[2, 1], decorations=[None, None, t, t])) == 4
        with pytest.raises(TypeError):
            br.limit_permuted(br.MixedWordSpec(xi, models=br.SelfAdjointEntries(1, 1)))

    def test_selfadjoint(self):
        for r in range(1, 6):
            assert br.limit_selfadjoint(1, 1, 2 * r) == 1
        assert br.limit_selfadjoint(2, 1, 4) == Fraction(7, 3)
        assert br.limit_selfadjoint(2, 1, 3) == 0
        assert br.limit_selfadjoint(2, 1, 2) == Fraction(3, 2)
        alpha, beta = sympy.symbols('alpha beta')
        assert br.equal(br.limit_selfadjoint(alpha, beta, 4), (alpha ** 2 + alpha * beta + beta ** 2) / 3)
        with pytest.raises(AssertionError):
            br.limit_selfadjoint(-1, 1, 4)
        with pytest.raises(AssertionError):
            br.limit_selfadjoint(1, '-1/2', 2)
        assert br.limit_selfadjoint(0, 0, 2) == 0

    def test_bernoulli_case(self):
        for n in range(1, 11):
            assert br.limit_selfadjoint(3, 3, n) == br.bernoulli_moment(3, n)

    def test_integral(self):
        for n in range(1, 9):
            exact = float(br.limit_selfadjoint(2, 1, n))
            assert br.limit_selfadjoint_integral(2, 1, n) == pytest.approx(exact, abs=1e-5)


class TestConvergenceSweep:

    def test_bdiag_sweep(self):
        sweep = br.ConvergenceSweep.for_word(word('xx*xx*'), sizes=[4, 8, 16, 32])
        records = sweep.run()
        assert [r['N'] for r in records] == [4, 8, 16, 32]
        assert [r['value'] for r in records] == ['3/4', '7/8', '15/16', '31/32']
        assert all(r['limit'] == '1' for r in records)
        assert sweep.errors.tolist() == [0.25, 0.125, 0.0625, 0.03125]
        assert sweep.scaled_errors.tolist() == [1.0] * 4
        assert not sweep.continual

    @pytest.mark.parametrize('text, labels', MIXED_WORDS)
    def test_mixed_word_sweep(self, text, labels):
        xi = br.parse_xi(text)
        assert len(xi) == len(labels)
        spec = br.MixedWordSpec(xi, labels, MIXED_MODELS)
        sweep = br.ConvergenceSweep.for_word(spec, sizes=[256, 512, 1024, 2048])
        sweep.run()
        assert sweep.limit == br.mixed_factorization(labels, xi, MIXED_MODELS)
        scaled = sweep.scaled_errors.tolist()
        assert max(scaled) <= 600 and abs(scaled[-1] - scaled[-2]) <= 1

    def test_verbose(self, capsys):
        sweep = br.ConvergenceSweep.for_word(word('xx*xx*'), sizes=[4, 8], verbose=True)
        while sweep.continual:
            sweep.step()
        assert capsys.readouterr().out.splitlines() == [
            'ConvergenceSweep on N 4 value 3/4 --> error 2.500000e-01 (N*error: 1.0000e+00)',
            'ConvergenceSweep on N 8 value 7/8 --> error 1.250000e-01 (N*error: 1.0000e+00)',
            'ConvergenceSweep: Last size reached, Quiting..']
        with pytest.raises(AssertionError):
            sweep.step()

    def test_state_dict(self):
        first = br.ConvergenceSweep.for_word(word('xx*xx*'), sizes=[4, 8, 16])
        first.step()
        second = br.ConvergenceSweep.for_word(word('xx*xx*'), sizes=[4, 8, 16])
        second.load_state_dict(first.state_dict())
        assert 'evaluate' not in first.state_dict()
        assert second.steps == 1
        second.run()
        assert [r['value'] for r in second.records()] == ['3/4', '7/8', '15/16']

    def test_selfadjoint_sweep(self):
        sweep = br.ConvergenceSweep.for_selfadjoint(br.SelfAdjointEntries(1, 1), 4,
                                                    sizes=[10, 20, 40, 80, 160])
        sweep.run()
        errors = sweep.errors.tolist()
        assert all(a > b for a, b in zip(errors, errors[1:]))
        assert max(sweep.scaled_errors.tolist()) < 3

    def test_arguments(self):
        with pytest.raises(ValueError):
            br.ConvergenceSweep(lambda N: 0, 0, [])
        with pytest.raises(ValueError):
            br.ConvergenceSweep(lambda N: 0, 0, [4, 4])
        with pytest.raises(TypeError):
            br.ConvergenceSweep(0, 0, [4])
        with pytest.raises(TypeError):
            br.ConvergenceSweep.for_word(br.parse_xi('xx*'), [4])


if __name__ == '__main__':
    test = TestCounting()
    test.test_polynomial()
    test.test_closed_form()
    test = TestConvergenceSweep()
    test.test_bdiag_sweep()
