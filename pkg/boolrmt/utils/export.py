import json
import numbers
import pandas as pd
from fractions import Fraction
from .scalar import format_scalar, is_symbolic


def _plain(value):
    if isinstance(value, (Fraction,)) or is_symbolic(value):
        return format_scalar(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(format_scalar(float(value)))
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, 'item'):
        return _plain(value.item())
    return str(value)


def records_to_frame(records):
    r'''
    A :obj:`pandas.DataFrame` of result records, exact scalars rendered as ``"p/q"``.
    '''
    return pd.DataFrame([{k: _plain(v) for k, v in r.items()} for r in records])


def dump_records(records, fmt='json', meta=None):
    r'''
    Serialise result records.

    Args:
        records (list of dict): one dict per row.
        fmt (str, optional): ``"json"``, ``"csv"`` or ``"text"``. Default: ``"json"``.
        meta (dict, optional): extra top-level JSON fields, e.g. the command and its
            parameters. Ignored by the table formats. Default: ``None``.

    Return:
        str: the serialised output. JSON keys are sorted so equal inputs give equal bytes.
    '''
    if fmt == 'json':
        document = {'records': [{k: _plain(v) for k, v in r.items()} for r in records]}
        document.update({k: _plain(v) for k, v in (meta or {}).items()})
        return json.dumps(document, sort_keys=True, indent=2)
    frame = records_to_frame(records)
    if fmt == 'csv':
        return frame.to_csv(index=False)
    if fmt == 'text':
        return frame.to_string(index=False) if len(frame) else '(no rows)'
    raise ValueError('unknown format {!r}; expected json, csv or text'.format(fmt))
