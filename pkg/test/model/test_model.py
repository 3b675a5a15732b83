import json
import math
import pytest
import itertools
import boolrmt as br
from fractions import Fraction


def star_moments(name, values, order=2):
    return br.MomentFunctional(br.Alphabet.star_pair(name), values, max_order=order)


LETTERS = (('a', 'a'), ('a', 'a*'), ('b', 'b'), ('b', 'b*'))


def generic_moments(name, weight):
    adjoints = lambda word: sum(letter.endswith('*') for letter in word)
    return br.MomentFunctional.from_callable(
        br.Alphabet.star_pair(name), lambda word: Fraction(weight + len(word), 1 + adjoints(word)), 8)


class TestEntryModels:

    def test_bdiag_entries(self):
        model = br.BDiagonalEntries(a=[3, 1], b=[2])
        assert model.word_value(br.parse_xi('xx*'), 10) == Fraction(3, 10)
        assert model.word_value(br.parse_xi('xx*xx*'), 10) == Fraction(1, 10)
        assert model.word_value(br.parse_xi('x*x'), 4) == Fraction(1, 2)
        assert model.word_value(br.parse_xi('x*xx*x'), 4) == 0
        assert model.word_value(br.parse_xi('xx'), 4) == 0
        assert model.word_value(br.parse_xi('x'), 4) == 0
        assert model.law() == br.BDiagonalLaw([3, 1], [2, 0])

    def test_general_entries(self):
        model = br.GeneralEntries({'xx*': 2, 'x': '1/3'})
        assert model.word_value(br.parse_xi('xx*'), 4) == Fraction(1, 2)
        assert model.word_value(br.parse_xi('x'), 2) == Fraction(1, 6)
        assert model.word_value(br.parse_xi('x*'), 2) == 0

    def test_selfadjoint_entries(self):
        model = br.SelfAdjointEntries(2, 1)
        assert model.word_value(br.parse_xi('xx*'), 4) == Fraction(1, 2)
        assert model.word_value(br.parse_xi('x*x'), 4) == Fraction(1, 4)
        assert model.word_value(br.parse_xi('xx*xx*'), 4) == 0
        models = model.models(4, 4)
        assert models((1, 2))(('x', 'x*')) == Fraction(1, 2)
        assert models((3, 3))(('d', 'd')) == 0

    def test_at(self):
        phi = br.BDiagonalEntries(a=[3]).at(6, max_order=4)
        assert phi(('x', 'x*')) == Fraction(1, 2)
        with pytest.raises(ValueError):
            phi(('x',) * 5)

    def test_json(self):
        for model in (br.BDiagonalEntries(a=[3, '1/2'], b=[2]), br.SelfAdjointEntries(2, '1/3'),
                      br.GeneralEntries({'xx*': 2, 'x*x': '5/7'})):
            loaded = br.EntryModel.from_json(json.dumps(model.to_json()))
            assert type(loaded) is type(model) and loaded.to_json() == model.to_json()
        with pytest.raises(ValueError):
            br.EntryModel.from_json({'kind': 'gaussian'})

    def test_selfadjoint_letter(self):
        assert br.selfadjoint_letter(1, 3) == ((1, 3), 'x')
        assert br.selfadjoint_letter(3, 1) == ((1, 3), 'x*')
        assert br.selfadjoint_letter(2, 2) == ((2, 2), 'd')


class TestBooleanProduct:

    def test_tagged_word(self):
        w = br.TaggedWord([('b', 'b*'), ('a', 'a*'), ('a', 'a'), ('b', 'b')])
        assert w.tags == ('b', 'a', 'a', 'b')
        assert w.letters == ('b*', 'a*', 'a', 'b')
        assert w.runs() == [('b', ('b*',)), ('a', ('a*', 'a')), ('b', ('b',))]
        with pytest.raises(ValueError):
            br.TaggedWord([])

    def test_run_factorisation(self):
        models = {'a': star_moments('a', {('a',): 2, ('a', 'a*'): 5}),
                  'b': star_moments('b', {('b',): 3, ('b*',): 7})}
        w = br.TaggedWord([('a', 'a'), ('a', 'a*'), ('b', 'b'), ('a', 'a'), ('b', 'b*')])
        assert br.boolean_product_moment(models, w) == 5 * 3 * 2 * 7
        assert br.boolean_product_moment(lambda tag: models[tag], w) == 210
        with pytest.raises(KeyError):
            br.boolean_product_moment(models, br.TaggedWord([('c', 'c')]))

    def test_entry_word_moment(self):
        model = br.BDiagonalEntries(a=[3], b=[2])
        assert br.entry_word_moment(model, br.parse_xi('xx*'), N=3) == 1
        assert br.entry_word_moment(model, br.parse_xi('xx*'), False, N=3) == 0
        with pytest.raises(TypeError):
            br.entry_word_moment(br.BDiagonalLaw([1], [1]), br.parse_xi('xx*'))

    def test_lemma_split(self):
        models = {'a': star_moments('a', {('a',): 2, ('a', 'a*'): 5, ('a*',): 1}, 3),
                  'b': star_moments('b', {('b',): 3, ('b*', 'b'): 7, ('b*',): 4}, 3)}
        letters = {'a': ('a', 'a*'), 'b': ('b', 'b*')}
        for x_tag, y_tag in (('a', 'b'), ('b', 'a')):
            for x, y in itertools.product(letters[x_tag], letters[y_tag]):
                for a1 in ((), (('a', 'a*'),), (('b', 'b*'), ('a', 'a'))):
                    for a2 in ((), (('b', 'b'),), (('a', 'a'), ('b', 'b*'))):
                        assert br.lemma_split_holds(models, a1, (x_tag, x), (y_tag, y), a2)
        with pytest.raises(ValueError):
            br.lemma_split_holds(models, (), ('a', 'a'), ('a', 'a*'), ())

    @pytest.mark.parametrize('prefix, suffix', list(itertools.product(range(4), repeat=2)))
    def test_lemma_split_long_words(self, prefix, suffix):
        models = {'a': generic_moments('a', 2), 'b': generic_moments('b', 5)}
        for a1 in itertools.product(LETTERS, repeat=prefix):
            for a2 in itertools.product(LETTERS, repeat=suffix):
                for x, y in itertools.product(LETTERS, repeat=2):
                    if x[0] != y[0]:
                        assert br.lemma_split_holds(models, a1, x, y, a2)

    @pytest.mark.parametrize('letters', [
        [('a', 'a'), ('b', 'b*'), ('a', 'a*'), ('a', 'a')],
        [('a', 'a*'), ('a', 'a'), ('b', 'b'), ('b', 'b*'), ('b', 'b'), ('a', 'a')],
        [('b', 'b'), ('a', 'a'), ('b', 'b*'), ('a', 'a*'), ('b', 'b'), ('a', 'a')],
        [('a', 'a')] * 3 + [('b', 'b*')] * 2 + [('a', 'a*')] * 3,
    ])
    def test_run_grouping(self, letters):
        models = {'a': generic_moments('a', 1), 'b': generic_moments('b', 3)}
        w = br.TaggedWord(letters)
        whole = br.boolean_product_moment(models, w)
        assert whole != 0
        boundaries = list(itertools.accumulate(len(run) for _, run in w.runs()))[:-1]
        for k in range(len(boundaries) + 1):
            for cuts in itertools.combinations(boundaries, k):
                edges = (0,) + cuts + (len(w),)
                pieces = [br.TaggedWord(w[s:e]) for s, e in zip(edges, edges[1:])]
                assert math.prod(br.boolean_product_moment(models, p) for p in pieces) == whole

    def test_product_law(self):
        a = star_moments('a', {('a', 'a*'): 2, ('a*', 'a'): 3, ('a', 'a'): 1})
        b = star_moments('b', {('b',): 1, ('b*',): 2, ('b', 'b*'): 5, ('b*', 'b'): 4})
        y = br.product_of_boolean_letters_law(a, b, 4)
        assert y(('y',)) == 0
        assert y(('y*', 'y')) == 2 * 3 * 1
        assert y(('y', 'y*')) == 0
        assert y(('y*', 'y', 'y*', 'y')) == 2 * 3 * 5 * 3 * 1
        assert br.product_law_violations(a, b, 6) == []

    def test_product_law_needs_centred_a(self):
        a = star_moments('a', {('a',): 1, ('a', 'a*'): 2})
        b = star_moments('b', {('b',): 1})
        with pytest.raises(ValueError):
            br.product_of_boolean_letters_law(a, b, 4)

    def test_product_law_cumulants(self):
        a = star_moments('a', {('a', 'a*'): 2, ('a*', 'a'): 3})
        b = star_moments('b', {('b',): 1, ('b*',): 1, ('b', 'b*'): 5, ('b*', 'b'): 1})
        table = br.cumulant_table(br.product_of_boolean_letters_law(a, b, 4))
        assert table(('y*', 'y')) == 3
        assert table(('y*', 'y', 'y*', 'y')) == 3 * 5 * 3 - 3 * 3
        assert table(('y', 'y*', 'y', 'y*')) == 0


if __name__ == '__main__':
    test = TestBooleanProduct()
    test.test_run_factorisation()
    test.test_product_law()
