r'''
Command-line interface for boolrmt.

Usage:
    boolrmt partitions 4 --xi "xx*xx*"            # the alternating interval partitions
    boolrmt limit --xi "xx*xx*" --alpha 1 --beta 1
    boolrmt limit --selfadjoint --alpha 2 --beta 1 --n 4
    boolrmt converge --xi "xx*xx*" --alpha 1 --sizes 4,8,16,32
    boolrmt verify counting --n-max 6 --N-max 5
    boolrmt count "[2,4]" --xi "xx*xx*" --N 4
    boolrmt theta transpose --sizes 4,8,16
'''
import json
import click
import sympy
import functools
from ._version import __version__
from .utils import BudgetExceededError, as_scalar, format_scalar, dump_records
from .partitions import IntervalPartition, parse_xi, enumerate_partitions, enumerate_alt
from .partitions import STAR
from .model import EntryModel, BDiagonalEntries, SelfAdjointEntries
from .matrix import MixedWordSpec, ConvergenceSweep, trace_moment_exact
from .matrix import count_tuples_brute, count_tuples_blockwise, closed_form_count
from .matrix import closed_form_applies
from .matrix import count_polynomial, limit_permuted, limit_selfadjoint
from .permutation import identity, transpose, partial_transpose, parse_permutation
from .permutation import theta_condition_count
from .verify import SUITES, run_suite


def _scalar(text):
    text = text.strip()
    if any(c.isalpha() for c in text):
        return sympy.sympify(text)
    return as_scalar(text)


def _sequence(text):
    return [_scalar(item) for item in text.split(',') if item.strip()] if text else []


def _sizes(text):
    try:
        sizes = [int(item) for item in text.split(',') if item.strip()]
    except ValueError:
        raise click.BadParameter('expected comma separated integers. Got {!r}'.format(text))
    if not sizes:
        raise click.BadParameter('at least one size is needed')
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise click.BadParameter('sizes have to increase: {}'.format(sizes))
    return sizes


def _labels(text, n, name):
    if text is None:
        return None
    labels = [item.strip() for item in text.split(',')]
    if name == '--decorations':
        labels = [None if d in ('e', 'identity') else d for d in labels]
    if len(labels) != n:
        raise click.BadParameter('{} entries for a word of length {}'.format(len(labels), n),
                                 param_hint=name)
    return labels


def _word(xi):
    try:
        return parse_xi(xi)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint='--xi')


def _adjoint_hint(word):
    r''' A note for words made of adjoint letters only, such as "x*x*" meant as X X* X X*. '''
    if not all(s == STAR for s in word):
        return None
    return ('every letter of {!r} is an adjoint since "x*" is a single letter; '
            'X X* X X* is written "xx*xx*", so this word may be {!r}'
            .format(str(word), 'xx*' * len(word)))


def _models(model_path, alpha, beta, labels):
    if model_path is None:
        return BDiagonalEntries(_sequence(alpha), _sequence(beta))
    with open(model_path) as f:
        data = json.load(f)
    if 'kind' in data:
        return EntryModel.from_json(data)
    models = {k: EntryModel.from_json(v) for k, v in data.items()}
    if labels is None and len(models) == 1:
        return next(iter(models.values()))
    return models


def _emit(ctx, records, lines=None, meta=None):
    fmt, out = ctx.obj['format'], ctx.obj['out']
    if fmt == 'text' and lines is not None:
        text = '\n'.join(lines)
    else:
        text = dump_records(records, fmt, meta)
    if out is None:
        click.echo(text)
    else:
        with open(out, 'w') as f:
            f.write(text if text.endswith('\n') else text + '\n')


def _reported(command):
    r''' Turn library errors into a message on stderr and exit code 1. '''
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (AssertionError, ValueError, KeyError, TypeError, BudgetExceededError) as e:
            raise click.ClickException(str(e))
    return wrapper


@click.group()
@click.version_option(version=__version__, prog_name='boolrmt')
@click.option('--out', type=click.Path(dir_okay=False), default=None,
              help='Write the result to a file instead of stdout.')
@click.option('--format', 'fmt', type=click.Choice(['json', 'csv', 'text']), default='text',
              help='Output format.')
@click.option('--seed', type=int, default=0, help='Seed of sampled checks.')
@click.option('--budget', type=click.IntRange(min=1), default=None,
              help='Largest brute-force enumeration; defaults to $BOOLEAN_RMT_BUDGET or 1e8.')
@click.pass_context
def cli(ctx, out, fmt, seed, budget):
    r'''
    Boolean cumulants, interval partitions and trace moments of matrices with Boolean
    independent entries.

    Words are written with "x" for the sign 1 and "x*" for the adjoint, so "xx*xx*" is
    the word X X* X X*.
    '''
    ctx.obj = {'out': out, 'format': fmt, 'seed': seed, 'budget': budget}


@cli.command()
@click.argument('n', type=click.IntRange(min=1))
@click.option('--xi', default=None, help='Keep only the partitions alternating for this word.')
@click.pass_context
@_reported
def partitions(ctx, n, xi):
    r''' List the interval partitions of [n], or the alternating ones of a word of length n. '''
    if xi is None:
        found = list(enumerate_partitions(n))
    else:
        word = _word(xi)
        if len(word) != n:
            message = 'a word of length {} for n={}'.format(len(word), n)
            hint = _adjoint_hint(word)
            if hint is not None:
                message = '{}; {}'.format(message, hint)
            raise click.BadParameter(message, param_hint='--xi')
        found = list(enumerate_alt(word))
    records = [{'sigma': str(sigma), 'blocks': len(sigma)} for sigma in found]
    _emit(ctx, records, [str(sigma) for sigma in found], {'command': 'partitions', 'n': n,
                                                          'xi': xi})


@cli.command()
@click.option('--xi', default=None, help='The word, e.g. "xx*xx*".')
@click.option('--alpha', default='0', help='alpha_1,alpha_2,... (or alpha for --selfadjoint).')
@click.option('--beta', default='0', help='beta_1,beta_2,... (or beta for --selfadjoint).')
@click.option('--labels', default=None, help='Comma separated matrix labels, one per letter.')
@click.option('--decorations', default=None,
              help='Comma separated permutation labels, one per letter; "e" is the identity.')
@click.option('--model', 'model_path', type=click.Path(exists=True, dir_okay=False),
              default=None, help='JSON entry model, or a label to model map.')
@click.option('--selfadjoint', is_flag=True, help='The limit moment of a self-adjoint matrix.')
@click.option('--n', 'order', type=click.IntRange(min=1), default=None,
              help='Moment order for --selfadjoint.')
@click.pass_context
@_reported
def limit(ctx, xi, alpha, beta, labels, decorations, model_path, selfadjoint, order):
    r''' The limit moment of a trace word as the matrix size grows. '''
    if selfadjoint:
        if order is None:
            raise click.UsageError('--selfadjoint needs --n')
        value = limit_selfadjoint(_scalar(alpha), _scalar(beta), order)
        record = {'n': order, 'alpha': alpha, 'beta': beta, 'limit': value}
    else:
        if xi is None:
            raise click.UsageError('--xi is required unless --selfadjoint is given')
        word = _word(xi)
        labels = _labels(labels, len(word), '--labels')
        spec = MixedWordSpec(word, labels, _models(model_path, alpha, beta, labels),
                             _labels(decorations, len(word), '--decorations'))
        value = limit_permuted(spec)
        record = {'word': str(word), 'limit': value}
    _emit(ctx, [record], [format_scalar(value)], {'command': 'limit'})
    if not selfadjoint and _adjoint_hint(word) is not None:
        click.echo('note: ' + _adjoint_hint(word), err=True)


def _decorated(word, labels, models, decorations, N):
    if decorations is None:
        return MixedWordSpec(word, labels, models)
    return MixedWordSpec(word, labels, models,
                         [None if d is None else parse_permutation(d, N) for d in decorations])


@cli.command()
@click.option('--xi', default=None, help='The word, e.g. "xx*xx*".')
@click.option('--alpha', default='0', help='alpha_1,alpha_2,... (or alpha for --selfadjoint).')
@click.option('--beta', default='0', help='beta_1,beta_2,... (or beta for --selfadjoint).')
@click.option('--labels', default=None, help='Comma separated matrix labels, one per letter.')
@click.option('--decorations', default=None,
              help='Comma separated permutations, one per letter: e, transpose, partial:m,n.')
@click.option('--model', 'model_path', type=click.Path(exists=True, dir_okay=False),
              default=None, help='JSON entry model, or a label to model map.')
@click.option('--selfadjoint', is_flag=True, help='Sweep the moments of a self-adjoint matrix.')
@click.option('--n', 'order', type=click.IntRange(min=1), default=None,
              help='Moment order for --selfadjoint.')
@click.option('--sizes', required=True, help='Increasing sizes N, comma separated.')
@click.option('--method', type=click.Choice(['partition', 'brute', 'closed_form']), default=None,
              help='Exact evaluation method.')
@click.option('-v', '--verbose', is_flag=True, help='Print a line per size.')
@click.pass_context
@_reported
def converge(ctx, xi, alpha, beta, labels, decorations, model_path, selfadjoint, order, sizes,
             method, verbose):
    r''' Exact finite-N moments against their limit over a sweep of sizes. '''
    sizes = _sizes(sizes)
    if selfadjoint:
        if order is None:
            raise click.UsageError('--selfadjoint needs --n')
        model = SelfAdjointEntries(_scalar(alpha), _scalar(beta))
        sweep = ConvergenceSweep.for_selfadjoint(model, order, sizes, method or 'closed_form',
                                                 verbose)
        word = 'B^{}'.format(order)
    else:
        if xi is None:
            raise click.UsageError('--xi is required unless --selfadjoint is given')
        if method == 'closed_form':
            raise click.BadParameter('closed_form is for --selfadjoint only', param_hint='--method')
        parsed = _word(xi)
        labels = _labels(labels, len(parsed), '--labels')
        decorations = _labels(decorations, len(parsed), '--decorations')
        models = _models(model_path, alpha, beta, labels)
        target = limit_permuted(MixedWordSpec(parsed, labels, models, decorations))
        budget = ctx.obj['budget']
        sweep = ConvergenceSweep(
            lambda N: trace_moment_exact(_decorated(parsed, labels, models, decorations, N), N,
                                         method or 'partition', budget),
            target, sizes, verbose)
        word = str(parsed)
    records = [dict(r, word=word) for r in sweep.run()]
    lines = ['{:>6}  {:>20}  {:>14}  {:>12}'.format('N', 'value', 'abs_error', 'N*error')]
    lines += ['{:>6}  {:>20}  {:>14.6e}  {:>12.4e}'.format(r['N'], r['value'], r['abs_error'],
                                                         r['N_error']) for r in records]
    _emit(ctx, records, lines, {'command': 'converge', 'limit': format_scalar(sweep.limit)})


@cli.command()
@click.argument('suite', type=click.Choice(sorted(SUITES) + ['all']))
@click.option('--n-max', type=click.IntRange(min=1), default=None, help='Longest word.')
@click.option('--N-max', 'N_max', type=click.IntRange(min=1), default=None, help='Largest size.')
@click.option('--order', type=click.IntRange(min=2), default=None, help='Largest word order.')
@click.pass_context
@_reported
def verify(ctx, suite, n_max, N_max, order):
    r''' Run an invariant suite; the exit code is 0 iff every check passes. '''
    names = sorted(SUITES) if suite == 'all' else [suite]
    results = [run_suite(name, n_max=n_max, N_max=N_max, order=order, seed=ctx.obj['seed'],
                         budget=ctx.obj['budget']) for name in names]
    lines = []
    for result in results:
        lines.append(str(result))
        lines += ['  failed: {}'.format(message) for message in result.failures]
    _emit(ctx, [r.to_json() for r in results], lines, {'command': 'verify'})
    if not all(r.passed for r in results):
        ctx.exit(1)


@cli.command()
@click.argument('sigma')
@click.option('--xi', required=True, help='The word, e.g. "xx*xx*".')
@click.option('--N', 'N', type=click.IntRange(min=1), required=True, help='The size.')
@click.option('--method', type=click.Choice(['brute', 'blockwise', 'closed_form', 'all']),
              default='all', help='Counting method.')
@click.pass_context
@_reported
def count(ctx, sigma, xi, N, method):
    r''' The number of index tuples whose run partition is SIGMA, e.g. "[2,4]". '''
    sigma, word = IntervalPartition.parse(sigma), _word(xi)
    methods = ['brute', 'blockwise', 'closed_form'] if method == 'all' else [method]
    results = []
    for name in methods:
        if name == 'brute':
            results.append(count_tuples_brute(sigma, word, N, budget=ctx.obj['budget']))
        elif name == 'blockwise':
            results.append(count_tuples_blockwise(sigma, word, N))
        elif method == 'closed_form' or closed_form_applies(sigma, word):
            results.append(closed_form_count(sigma, word, N))
    records = [r.to_json() for r in results]
    lines = ['{:<12} {}'.format(r.method, r.count) for r in results]
    lines.append('{:<12} {}'.format('polynomial', count_polynomial(sigma, word)))
    _emit(ctx, records, lines, {'command': 'count',
                                'polynomial': str(count_polynomial(sigma, word))})


def _family(name):
    if name in ('identity', 'e'):
        return identity
    if name in ('transpose', 't'):
        return transpose
    if name.startswith('partial:'):
        try:
            m = int(name[len('partial:'):])
        except ValueError:
            raise click.BadParameter('expected partial:m. Got {!r}'.format(name))
        return lambda n: partial_transpose(m, n)
    raise click.BadParameter('unknown family {!r}; expected identity, transpose or partial:m'
                             .format(name))


@cli.command()
@click.argument('family')
@click.option('--sizes', required=True,
              help='Family indices: N for identity and transpose, the inner size n for partial:m.')
@click.option('--theta', type=float, default=2., help='The exponent of N.')
@click.option('--pattern', type=click.Choice(['swap', 'share']), default='swap',
              help='swap: alpha(i,j) in {(j,k),(k,i)}; share: alpha(i,j) in {(i,k),(k,j)}.')
@click.pass_context
@_reported
def theta(ctx, family, sizes, theta, pattern):
    r''' The condition counts of a permutation family and their ratio to N^theta. '''
    factory = _family(family)
    records = []
    for size in _sizes(sizes):
        alpha = factory(size)
        value = theta_condition_count(alpha, pattern)
        records.append({'size': size, 'N': alpha.N, 'count': value,
                        'ratio': value / float(alpha.N) ** theta})
    lines = ['{:>6} {:>6} {:>12} {:>14}'.format('size', 'N', 'count', 'ratio')]
    lines += ['{:>6} {:>6} {:>12} {:>14.6e}'.format(r['size'], r['N'], r['count'], r['ratio'])
              for r in records]
    _emit(ctx, records, lines, {'command': 'theta', 'family': family, 'pattern': pattern,
                                'theta': theta})


if __name__ == '__main__':
    cli()
